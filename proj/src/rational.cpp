#include "zassenhaus/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace zassenhaus {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_from_string(std::string_view s) {
  const auto fail = [&] {
    throw std::invalid_argument("rational: malformed input '" + std::string(s) + "'");
  };

  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  std::size_t num_digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++num_digits;
  if (num_digits == 0) fail();

  if (i < s.size()) {
    if (s[i] != '/') fail();
    ++i;
    std::size_t den_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++den_digits;
    if (den_digits == 0 || i != s.size()) fail();
  }

  Rational q{std::string(s)};
  if (q.get_den() == 0) fail();
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  // mpq canonical form already prints as "p/q" (q > 0) or "p".
  return q.get_str();
}

Rational rational_factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

}  // namespace zassenhaus
