#ifndef ZASSENHAUS_LIE_POLYNOMIAL_HPP
#define ZASSENHAUS_LIE_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zassenhaus/commutator.hpp"
#include "zassenhaus/rational.hpp"

namespace zassenhaus {

// Finite rational linear combination of commutator terms. Immutable value
// type; terms are kept in canonical order (term_canonical_less), keys are
// unique and coefficients are never zero, so equality is representational.
class LiePolynomial {
 public:
  using Term = std::pair<TermId, Rational>;

  LiePolynomial() = default;  // zero polynomial

  static LiePolynomial generator(TermId leaf);  // X or Y, coefficient 1
  static LiePolynomial single(TermId term, Rational coeff);

  // Takes terms already in canonical order with unique keys and nonzero
  // coefficients (the arithmetic below guarantees this by construction).
  static LiePolynomial from_sorted(std::vector<Term> terms);

  // Normalizes arbitrary (term, coefficient) pairs: sorts canonically,
  // merges duplicate keys, drops zero coefficients.
  static LiePolynomial from_terms(std::vector<Term> terms);

  // Accepts the rendered form: "0", or "(c)term" joined by " + " where c is
  // a rational and term uses the bracket grammar. Terms may appear in any
  // order and are normalized.
  static LiePolynomial from_string(std::string_view s);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  Rational coefficient(TermId term) const;  // 0 if absent

  // True iff every stored term has degree exactly n (vacuously true for 0).
  bool is_homogeneous(int n) const;
  int max_degree() const;  // 0 for the zero polynomial

  bool operator==(const LiePolynomial&) const = default;

 private:
  std::vector<Term> terms_;
};

LiePolynomial lie_add(const LiePolynomial& p, const LiePolynomial& q);
LiePolynomial lie_scale(const Rational& c, const LiePolynomial& p);
LiePolynomial lie_bracket(const LiePolynomial& p, const LiePolynomial& q);

// ad_a^j b: j-fold left bracketing [a,[a,...[a,b]...]]; j = 0 returns b.
LiePolynomial ad_power(const LiePolynomial& a, int j, const LiePolynomial& b);

// "(c1)term1 + (c2)term2 + ...", or "0" for the zero polynomial.
std::string to_string(const LiePolynomial& p);

}  // namespace zassenhaus

#endif
