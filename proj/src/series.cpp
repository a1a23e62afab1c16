#include "zassenhaus/series.hpp"

#include <stdexcept>
#include <string>

namespace zassenhaus {

ZassenhausSeries::ZassenhausSeries(int max_degree, std::vector<LiePolynomial> exponents)
    : max_degree_(max_degree), exponents_(std::move(exponents)) {
  if (max_degree_ < 2) throw std::invalid_argument("series: max_degree must be >= 2");
  if (exponents_.size() != static_cast<std::size_t>(max_degree_ - 1)) {
    throw std::invalid_argument("series: expected one exponent per degree 2..max_degree");
  }
  for (int n = 2; n <= max_degree_; ++n) {
    if (!exponents_[n - 2].is_homogeneous(n)) {
      throw std::invalid_argument("series: exponent " + std::to_string(n) + " is not homogeneous");
    }
  }
}

const LiePolynomial& ZassenhausSeries::exponent(int n) const {
  if (n < 2 || n > max_degree_) throw std::invalid_argument("series: exponent index out of range");
  return exponents_[n - 2];
}

LiePolynomial SeriesEngine::f1(int k) {
  if (k < 1) throw std::invalid_argument("f1: k must be >= 1");
  const LiePolynomial x = LiePolynomial::generator(kTermX);
  const LiePolynomial y = LiePolynomial::generator(kTermY);
  const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
  LiePolynomial sum;
  for (int j = 1; j <= k; ++j) {
    const Rational coeff = sign / (rational_factorial(j) * rational_factorial(k - j));
    sum = lie_add(sum, lie_scale(coeff, ad_power(y, k - j, ad_power(x, j, y))));
  }
  return sum;
}

const LiePolynomial& SeriesEngine::f(int n, int k) {
  if (n < 1 || k < n) throw std::invalid_argument("f: requires k >= n >= 1");
  if (n == 1) {
    auto it = f1_.find(k);
    if (it == f1_.end()) it = f1_.emplace(k, f1(k)).first;
    return it->second;
  }
  if (n - 2 >= static_cast<int>(exponents_.size())) {
    throw std::logic_error("f: C_n not yet computed (dependency order violation)");
  }
  const auto key = std::make_pair(n, k);
  if (const auto it = f_.find(key); it != f_.end()) return it->second;

  const LiePolynomial& cn = exponents_[n - 2];
  LiePolynomial sum;
  Rational coeff(1);  // (-1)^j / j!
  for (int j = 0; j <= k / n - 1; ++j) {
    if (j > 0) coeff /= -j;
    sum = lie_add(sum, lie_scale(coeff, ad_power(cn, j, f(n - 1, k - n * j))));
  }
  return f_.emplace(key, std::move(sum)).first->second;
}

const LiePolynomial& SeriesEngine::exponent(int n) {
  if (n < 2) throw std::invalid_argument("exponent: n must be >= 2");
  while (computed_up_to() < n) {
    const int m = computed_up_to() + 1;
    const int row = m == 2 ? 1 : (m - 1) / 2;
    LiePolynomial cm = lie_scale(make_rational(1, m), f(row, m - 1));
    exponents_.push_back(std::move(cm));
  }
  return exponents_[n - 2];
}

ZassenhausSeries SeriesEngine::series(int max_degree) {
  if (max_degree < 2) throw std::invalid_argument("series: max_degree must be >= 2");
  exponent(max_degree);
  return ZassenhausSeries(
      max_degree,
      std::vector<LiePolynomial>(exponents_.begin(), exponents_.begin() + (max_degree - 1)));
}

ZassenhausSeries zassenhaus_series(int max_degree) {
  SeriesEngine engine;
  return engine.series(max_degree);
}

ZassenhausSeries left_oriented(const ZassenhausSeries& s) {
  std::vector<LiePolynomial> flipped;
  flipped.reserve(s.exponents().size());
  for (int n = 2; n <= s.max_degree(); ++n) {
    const Rational sign = (n % 2 == 0) ? Rational(-1) : Rational(1);  // (-1)^{n+1}
    flipped.push_back(lie_scale(sign, s.exponent(n)));
  }
  return ZassenhausSeries(s.max_degree(), std::move(flipped));
}

}  // namespace zassenhaus
