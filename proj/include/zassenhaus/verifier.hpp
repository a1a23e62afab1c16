#ifndef ZASSENHAUS_VERIFIER_HPP
#define ZASSENHAUS_VERIFIER_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "zassenhaus/series.hpp"
#include "zassenhaus/word_polynomial.hpp"

namespace zassenhaus {

// Orientation of the directed exponential product:
//   right:  e^{X+Y} = e^X e^Y e^{C_2} e^{C_3} ...
//   left:   e^{X+Y} = ... e^{Ĉ_3} e^{Ĉ_2} e^Y e^X,  Ĉ_n = (-1)^{n+1} C_n.
enum class Orientation { kRight, kLeft };

std::string to_string(Orientation o);                   // "right" / "left"
Orientation orientation_from_string(const std::string&);  // throws on other input

struct VerificationReport {
  std::string mode;
  int degree = 0;
  bool passed = false;
  nlohmann::json details = nlohmann::json::array();

  nlohmann::json to_json() const;
};

// exp of a truncated word polynomial with zero constant term (throws
// std::invalid_argument otherwise); exact rational arithmetic.
WordPolynomial truncated_exp(const WordPolynomial& p);

// Exact check of the defining identity in the word algebra truncated at
// `degree`: expands the directed exponential product and subtracts
// e^{X+Y}. Passes iff the residual is identically zero — every word
// coefficient through the truncation degree must cancel exactly. On failure
// the details record the lowest degree with a surviving word, which for a
// series damaged in a single exponent C_n is n itself.
VerificationReport verify_associative(const ZassenhausSeries& s, int degree,
                                      Orientation orientation = Orientation::kRight);

// Floating-point cross-check on random matrices: the residual
//   || e^{λX} e^{λY} Π e^{λ^n C_n(X,Y)} - e^{λ(X+Y)} ||_F
// must scale like λ^{degree+1} as λ shrinks. Fits the log-log slope over
// λ = 2^{-1}..2^{-6}, excluding residuals below the 1e-13 noise floor, and
// requires slope >= degree + 0.75 in every trial. Trials with fewer than 3
// usable points are inconclusive and reported as not passed.
VerificationReport verify_matrix(const ZassenhausSeries& s, int degree, int dim, int trials,
                                 std::uint64_t seed);

struct RankResult {
  std::size_t terms;
  std::size_t rank;
};

// Expands each structural term of a homogeneous polynomial to its word
// coefficient vector and computes the exact rank by fraction-free (Bareiss)
// elimination over the integers. rank == terms certifies that no hidden
// linear dependence inflates the term count.
RankResult independence_rank(const LiePolynomial& p);

// Dimension of the degree-n component of the free Lie algebra on two
// generators (necklace count): (1/n) sum_{d|n} mu(d) 2^{n/d}.
std::uint64_t witt_dimension(int n);

// Per-degree representation audit for n = 2..degree: term count must stay
// within the Witt dimension, and — up to the rank ceiling (default 8, where
// exact elimination is still cheap) — the expanded term vectors must be
// linearly independent.
VerificationReport verify_independence(const ZassenhausSeries& s, int degree,
                                       int rank_ceiling = 8);

}  // namespace zassenhaus

#endif
