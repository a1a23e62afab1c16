#ifndef TESTS_ORACLE_BOUNDS_HPP
#define TESTS_ORACLE_BOUNDS_HPP

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>

// Exact-rational reference implementation of the bound recursions, kept
// deliberately independent of the production log-domain code: plain mpq
// arithmetic, naive powers, direct recursion. Used to pin the floating
// results to the mathematics.
namespace zassenhaus::testing {

inline mpq_class mpq_pow(const mpq_class& base, int k) {
  mpq_class r(1);
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

inline mpq_class mpq_factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return mpq_class(f);
}

// d_{1,k} = (2^k / k!) y ((x+y)^k - y^k), exactly.
inline mpq_class d1_exact(int k, const mpq_class& x, const mpq_class& y) {
  if (k < 1) throw std::invalid_argument("d1_exact: k >= 1");
  const mpq_class two_k = mpq_pow(mpq_class(2), k);
  return two_k / mpq_factorial(k) * y * (mpq_pow(x + y, k) - mpq_pow(y, k));
}

// d_{n,k} by the recursion, exactly (small n, k only — cost grows fast).
inline mpq_class d_exact(int n, int k, const mpq_class& x, const mpq_class& y);

inline mpq_class delta_exact(int n, const mpq_class& x, const mpq_class& y) {
  if (n == 2) return x * y;
  if (n < 2) throw std::invalid_argument("delta_exact: n >= 2");
  return d_exact((n - 1) / 2, n - 1, x, y) / n;
}

inline mpq_class d_exact(int n, int k, const mpq_class& x, const mpq_class& y) {
  if (n < 1 || k < n) throw std::invalid_argument("d_exact: k >= n >= 1");
  if (n == 1) return d1_exact(k, x, y);
  const mpq_class dn = delta_exact(n, x, y);
  mpq_class sum(0);
  for (int j = 0; j <= k / n - 1; ++j) {
    sum += mpq_pow(mpq_class(2), j) / mpq_factorial(j) * mpq_pow(dn, j) *
           d_exact(n - 1, k - n * j, x, y);
  }
  return sum;
}

// Natural log of a positive rational through mpz_get_d_2exp, accurate to a
// few ulp even when numerator/denominator overflow double range.
inline double mpq_log(const mpq_class& q) {
  if (q <= 0) throw std::invalid_argument("mpq_log: positive rational required");
  long en = 0, ed = 0;
  const double mn = mpz_get_d_2exp(&en, q.get_num().get_mpz_t());
  const double md = mpz_get_d_2exp(&ed, q.get_den().get_mpz_t());
  return (std::log(mn) + static_cast<double>(en) * std::log(2.0)) -
         (std::log(md) + static_cast<double>(ed) * std::log(2.0));
}

}  // namespace zassenhaus::testing

#endif
