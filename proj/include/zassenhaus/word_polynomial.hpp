#ifndef ZASSENHAUS_WORD_POLYNOMIAL_HPP
#define ZASSENHAUS_WORD_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <string>

#include "zassenhaus/lie_polynomial.hpp"
#include "zassenhaus/rational.hpp"

namespace zassenhaus {

// A word over the alphabet {X, Y}, at most 32 letters, packed into `bits`
// with the first letter in the highest used bit position (X = 0, Y = 1).
// Words order by (length, bits), i.e. by degree then lexicographically.
struct Word {
  std::uint8_t length = 0;
  std::uint32_t bits = 0;

  static Word one() { return {}; }  // empty word, the algebra unit
  static Word x() { return {1, 0}; }
  static Word y() { return {1, 1}; }

  Word concat(Word rhs) const;
  int letter(int i) const;  // 0-based from the left; 0 = X, 1 = Y
  std::string str() const;  // "XYX..."; "1" for the empty word

  friend bool operator==(Word a, Word b) { return a.length == b.length && a.bits == b.bits; }
  friend bool operator<(Word a, Word b) {
    return a.length != b.length ? a.length < b.length : a.bits < b.bits;
  }
};

// Element of the associative word algebra truncated at a fixed degree:
// products silently drop every word longer than truncation_degree(). Zero
// coefficients are never stored; iteration over coeffs() is deterministic
// (graded lexicographic). Operands of +,-,* must share the truncation.
class WordPolynomial {
 public:
  explicit WordPolynomial(int truncation_degree);

  static WordPolynomial constant(int truncation_degree, const Rational& c);
  static WordPolynomial single(int truncation_degree, Word w, const Rational& c);

  int truncation_degree() const { return truncation_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t term_count() const { return coeffs_.size(); }
  const std::map<Word, Rational>& coeffs() const { return coeffs_; }
  Rational coefficient(Word w) const;   // 0 if absent
  int lowest_nonzero_degree() const;    // -1 when zero
  Rational constant_term() const { return coefficient(Word::one()); }

  WordPolynomial& operator+=(const WordPolynomial& rhs);
  WordPolynomial& operator-=(const WordPolynomial& rhs);
  WordPolynomial& operator*=(const Rational& c);

  friend WordPolynomial operator+(WordPolynomial a, const WordPolynomial& b) { return a += b; }
  friend WordPolynomial operator-(WordPolynomial a, const WordPolynomial& b) { return a -= b; }
  friend WordPolynomial operator*(const WordPolynomial& a, const WordPolynomial& b);

  bool operator==(const WordPolynomial&) const = default;

 private:
  int truncation_;
  std::map<Word, Rational> coeffs_;
};

// Replaces every bracket [A,B] by AB - BA in the word algebra, truncating at
// the given degree. This is injective on Lie elements up to the truncation,
// so it certifies exact identities between bracket polynomials. Throws
// std::invalid_argument if some term of p has degree above the truncation.
WordPolynomial expand_to_words(const LiePolynomial& p, int truncation_degree);

}  // namespace zassenhaus

#endif
