#ifndef ZASSENHAUS_RATIONAL_HPP
#define ZASSENHAUS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace zassenhaus {

// Exact arbitrary-precision rational. GMP keeps mpq_class values canonical
// (fully reduced, denominator > 0) under arithmetic; the factories below
// canonicalize on construction so every Rational in the program is canonical.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts "p" or "p/q" where p is a signed and q an unsigned decimal integer,
// q != 0. Throws std::invalid_argument on anything else.
Rational rational_from_string(std::string_view s);

// Renders "p/q" with q > 0, or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

Rational rational_factorial(unsigned long n);

}  // namespace zassenhaus

#endif
