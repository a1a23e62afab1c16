#ifndef ZASSENHAUS_SERIES_HPP
#define ZASSENHAUS_SERIES_HPP

#include <map>
#include <utility>
#include <vector>

#include "zassenhaus/lie_polynomial.hpp"

namespace zassenhaus {

// The Zassenhaus exponents C_2 .. C_max_degree of the directed product
//   e^{X+Y} = e^X e^Y e^{C_2} e^{C_3} e^{C_4} ...
// Each C_n is a homogeneous Lie polynomial of degree n.
class ZassenhausSeries {
 public:
  // exponents[0] is C_2. Validates homogeneity of each entry.
  ZassenhausSeries(int max_degree, std::vector<LiePolynomial> exponents);

  int max_degree() const { return max_degree_; }
  const LiePolynomial& exponent(int n) const;  // 2 <= n <= max_degree
  const std::vector<LiePolynomial>& exponents() const { return exponents_; }

 private:
  int max_degree_;
  std::vector<LiePolynomial> exponents_;
};

// Computes the exponents through the two-index recursion
//
//   f_{1,k} = sum_{j=1..k} (-1)^k / (j!(k-j)!) ad_Y^{k-j} ad_X^j Y
//   f_{n,k} = sum_{j=0..floor(k/n)-1} (-1)^j / j! ad_{C_n}^j f_{n-1,k-nj}
//
//   C_2 = (1/2) f_{1,1},   C_n = (1/n) f_{floor((n-1)/2), n-1}  for n >= 3,
//
// memoizing the f table across increasing n. Because j stops below k/n, the
// polynomial f_{n-1,k-nj} always has degree > n, so ad_{C_n} never meets its
// own degree and no [A,A] bracket is ever formed.
class SeriesEngine {
 public:
  // Closed form for the first row of the f table; k >= 1.
  static LiePolynomial f1(int k);

  // f_{n,k}; requires k >= n >= 1, and for n >= 2 that C_n has already been
  // computed by this engine (throws std::logic_error otherwise).
  const LiePolynomial& f(int n, int k);

  // C_n for n >= 2; computes and caches C_2..C_n in increasing order.
  const LiePolynomial& exponent(int n);

  ZassenhausSeries series(int max_degree);  // max_degree >= 2

  int computed_up_to() const { return static_cast<int>(exponents_.size()) + 1; }

 private:
  std::vector<LiePolynomial> exponents_;              // [0] = C_2
  std::map<std::pair<int, int>, LiePolynomial> f_;    // (n,k) -> f_{n,k}, n >= 2
  std::map<int, LiePolynomial> f1_;                   // k -> f_{1,k}
};

ZassenhausSeries zassenhaus_series(int max_degree);

// The left-oriented variant, e^{Ĉ_N} ... e^{Ĉ_3} e^{Ĉ_2} e^Y e^X = e^{X+Y},
// obtained term-by-term as Ĉ_n = (-1)^{n+1} C_n. Applying it twice returns
// the original series.
ZassenhausSeries left_oriented(const ZassenhausSeries& s);

}  // namespace zassenhaus

#endif
