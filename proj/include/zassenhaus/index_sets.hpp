#ifndef ZASSENHAUS_INDEX_SETS_HPP
#define ZASSENHAUS_INDEX_SETS_HPP

#include <vector>

#include "zassenhaus/lie_polynomial.hpp"
#include "zassenhaus/series.hpp"

namespace zassenhaus {

// Tuple (i_0, i_1, ..., i_n) of nonnegative integers.
using IndexTuple = std::vector<int>;

// The admissible index tuples of weight n: all (i_0,...,i_n) with
//   i_0 + i_1 + 2 i_2 + ... + n i_n = n,
//   j + 1 <= i_0 + i_1 + 2 i_2 + ... + j i_j   for every j = 0..n-1,
// in ascending lexicographic order. The prefix conditions force i_0 >= 1 and
// imply i_m = 0 for all m > n/2.
std::vector<IndexTuple> enumerate_index_set(int n);

// Single-formula route to the next exponent:
//   C_{n+1} = 1/(n+1) * sum over the admissible tuples of weight n of
//       (-1)^{i_0+...+i_n} / (i_0! ... i_n!) *
//       ad_{C_n}^{i_n} ... ad_{C_2}^{i_2} ad_Y^{i_1} ad_X^{i_0} Y.
// `prior` holds C_2..C_m in order (prior[0] = C_2) with m >= n; for n = 1 no
// prior exponents are needed. Agrees with the recursive engine exactly.
LiePolynomial term_via_index_formula(int n, const std::vector<LiePolynomial>& prior);
LiePolynomial term_via_index_formula(int n, const ZassenhausSeries& prior);

}  // namespace zassenhaus

#endif
