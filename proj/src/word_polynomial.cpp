#include "zassenhaus/word_polynomial.hpp"

#include <cassert>
#include <stdexcept>
#include <unordered_map>

namespace zassenhaus {

Word Word::concat(Word rhs) const {
  assert(length + rhs.length <= 32);
  return {static_cast<std::uint8_t>(length + rhs.length),
          (bits << rhs.length) | rhs.bits};
}

int Word::letter(int i) const {
  assert(i >= 0 && i < length);
  return (bits >> (length - 1 - i)) & 1u;
}

std::string Word::str() const {
  if (length == 0) return "1";
  std::string s;
  s.reserve(length);
  for (int i = 0; i < length; ++i) s += letter(i) ? 'Y' : 'X';
  return s;
}

WordPolynomial::WordPolynomial(int truncation_degree) : truncation_(truncation_degree) {
  if (truncation_degree < 0 || truncation_degree > 32) {
    throw std::invalid_argument("word polynomial: truncation degree out of range");
  }
}

WordPolynomial WordPolynomial::constant(int truncation_degree, const Rational& c) {
  return single(truncation_degree, Word::one(), c);
}

WordPolynomial WordPolynomial::single(int truncation_degree, Word w, const Rational& c) {
  WordPolynomial p(truncation_degree);
  if (w.length > truncation_degree) throw std::invalid_argument("word polynomial: word exceeds truncation");
  if (c != 0) p.coeffs_.emplace(w, c);
  return p;
}

Rational WordPolynomial::coefficient(Word w) const {
  const auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

int WordPolynomial::lowest_nonzero_degree() const {
  // Map order is graded, so the first entry has the lowest degree.
  return coeffs_.empty() ? -1 : coeffs_.begin()->first.length;
}

WordPolynomial& WordPolynomial::operator+=(const WordPolynomial& rhs) {
  assert(truncation_ == rhs.truncation_);
  for (const auto& [w, c] : rhs.coeffs_) {
    auto [it, inserted] = coeffs_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

WordPolynomial& WordPolynomial::operator-=(const WordPolynomial& rhs) {
  assert(truncation_ == rhs.truncation_);
  for (const auto& [w, c] : rhs.coeffs_) {
    auto [it, inserted] = coeffs_.try_emplace(w, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

WordPolynomial& WordPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
  } else {
    for (auto& [w, pc] : coeffs_) pc *= c;
  }
  return *this;
}

WordPolynomial operator*(const WordPolynomial& a, const WordPolynomial& b) {
  assert(a.truncation_ == b.truncation_);
  WordPolynomial out(a.truncation_);
  for (const auto& [u, cu] : a.coeffs_) {
    for (const auto& [v, cv] : b.coeffs_) {
      if (u.length + v.length > a.truncation_) continue;
      const Word w = u.concat(v);
      auto [it, inserted] = out.coeffs_.try_emplace(w, cu * cv);
      if (!inserted) {
        it->second += cu * cv;
        if (it->second == 0) out.coeffs_.erase(it);
      }
    }
  }
  return out;
}

namespace {

const WordPolynomial& expand_term(TermId t, int truncation,
                                  std::unordered_map<TermId, WordPolynomial>& memo) {
  if (const auto it = memo.find(t); it != memo.end()) return it->second;
  WordPolynomial result(truncation);
  if (t == kTermX) {
    result = WordPolynomial::single(truncation, Word::x(), Rational(1));
  } else if (t == kTermY) {
    result = WordPolynomial::single(truncation, Word::y(), Rational(1));
  } else {
    const WordPolynomial& a = expand_term(term_left(t), truncation, memo);
    const WordPolynomial& b = expand_term(term_right(t), truncation, memo);
    result = a * b - b * a;
  }
  return memo.emplace(t, std::move(result)).first->second;
}

}  // namespace

WordPolynomial expand_to_words(const LiePolynomial& p, int truncation_degree) {
  WordPolynomial out(truncation_degree);
  std::unordered_map<TermId, WordPolynomial> memo;
  for (const auto& [t, c] : p.terms()) {
    if (term_degree(t) > truncation_degree) {
      throw std::invalid_argument("expand_to_words: term degree exceeds truncation");
    }
    WordPolynomial e = expand_term(t, truncation_degree, memo);
    e *= c;
    out += e;
  }
  return out;
}

}  // namespace zassenhaus
