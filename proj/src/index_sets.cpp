#include "zassenhaus/index_sets.hpp"

#include <stdexcept>

namespace zassenhaus {

namespace {

// Weight of index position m: i_0 counts with weight 1, i_m with weight m
// for m >= 1.
int weight(int m) { return m == 0 ? 1 : m; }

void enumerate_rec(int n, int pos, int partial, IndexTuple& tuple,
                   std::vector<IndexTuple>& out) {
  if (pos == n) {
    // Last position: n * i_n must absorb exactly the remainder.
    const int rest = n - partial;
    if (rest % n == 0) {
      tuple[n] = rest / n;
      out.push_back(tuple);
      tuple[n] = 0;
    }
    return;
  }
  const int w = weight(pos);
  for (int v = 0; partial + v * w <= n; ++v) {
    tuple[pos] = v;
    // Prefix condition at pos: pos + 1 <= i_0 + i_1 + 2 i_2 + ... + pos*i_pos.
    if (partial + v * w >= pos + 1) enumerate_rec(n, pos + 1, partial + v * w, tuple, out);
  }
  tuple[pos] = 0;
}

}  // namespace

std::vector<IndexTuple> enumerate_index_set(int n) {
  if (n < 1) throw std::invalid_argument("index set: n must be >= 1");
  std::vector<IndexTuple> out;
  IndexTuple tuple(n + 1, 0);
  enumerate_rec(n, 0, 0, tuple, out);
  return out;
}

LiePolynomial term_via_index_formula(int n, const std::vector<LiePolynomial>& prior) {
  if (n < 1) throw std::invalid_argument("index formula: n must be >= 1");
  if (static_cast<int>(prior.size()) < n - 1) {
    throw std::invalid_argument("index formula: needs C_2..C_n");
  }
  const LiePolynomial x = LiePolynomial::generator(kTermX);
  const LiePolynomial y = LiePolynomial::generator(kTermY);

  LiePolynomial sum;
  for (const IndexTuple& idx : enumerate_index_set(n)) {
    LiePolynomial v = ad_power(x, idx[0], y);
    v = ad_power(y, idx[1], v);
    for (int m = 2; m <= n; ++m) {
      if (idx[m] > 0) v = ad_power(prior[m - 2], idx[m], v);
    }
    int index_sum = 0;
    Rational denom(1);
    for (const int i : idx) {
      index_sum += i;
      denom *= rational_factorial(i);
    }
    const Rational coeff = Rational(index_sum % 2 == 0 ? 1 : -1) / denom;
    sum = lie_add(sum, lie_scale(coeff, v));
  }
  return lie_scale(make_rational(1, n + 1), sum);
}

LiePolynomial term_via_index_formula(int n, const ZassenhausSeries& prior) {
  return term_via_index_formula(n, prior.exponents());
}

}  // namespace zassenhaus
