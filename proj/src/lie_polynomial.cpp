#include "zassenhaus/lie_polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace zassenhaus {

LiePolynomial LiePolynomial::generator(TermId leaf) {
  return single(leaf, Rational(1));
}

LiePolynomial LiePolynomial::single(TermId term, Rational coeff) {
  LiePolynomial p;
  if (coeff != 0) p.terms_.emplace_back(term, std::move(coeff));
  return p;
}

LiePolynomial LiePolynomial::from_sorted(std::vector<Term> terms) {
#ifndef NDEBUG
  for (std::size_t i = 0; i < terms.size(); ++i) {
    assert(terms[i].second != 0);
    if (i > 0) assert(term_canonical_less(terms[i - 1].first, terms[i].first));
  }
#endif
  LiePolynomial p;
  p.terms_ = std::move(terms);
  return p;
}

LiePolynomial LiePolynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return term_canonical_less(a.first, b.first);
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& [t, c] : terms) {
    if (!out.empty() && out.back().first == t) {
      out.back().second += c;
      if (out.back().second == 0) out.pop_back();
    } else if (c != 0) {
      out.emplace_back(t, std::move(c));
    }
  }
  return from_sorted(std::move(out));
}

Rational LiePolynomial::coefficient(TermId term) const {
  const auto it = std::lower_bound(
      terms_.begin(), terms_.end(), term,
      [](const Term& t, TermId key) { return term_canonical_less(t.first, key); });
  if (it != terms_.end() && it->first == term) return it->second;
  return Rational(0);
}

bool LiePolynomial::is_homogeneous(int n) const {
  for (const auto& [t, c] : terms_) {
    if (term_degree(t) != n) return false;
  }
  return true;
}

int LiePolynomial::max_degree() const {
  int d = 0;
  for (const auto& [t, c] : terms_) d = std::max(d, term_degree(t));
  return d;
}

LiePolynomial lie_add(const LiePolynomial& p, const LiePolynomial& q) {
  std::vector<LiePolynomial::Term> out;
  out.reserve(p.term_count() + q.term_count());
  auto a = p.terms().begin();
  const auto ae = p.terms().end();
  auto b = q.terms().begin();
  const auto be = q.terms().end();
  while (a != ae && b != be) {
    if (a->first == b->first) {
      Rational c = a->second + b->second;
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    } else if (term_canonical_less(a->first, b->first)) {
      out.push_back(*a++);
    } else {
      out.push_back(*b++);
    }
  }
  out.insert(out.end(), a, ae);
  out.insert(out.end(), b, be);
  return LiePolynomial::from_sorted(std::move(out));
}

LiePolynomial lie_scale(const Rational& c, const LiePolynomial& p) {
  if (c == 0) return {};
  std::vector<LiePolynomial::Term> out;
  out.reserve(p.term_count());
  for (const auto& [t, pc] : p.terms()) out.emplace_back(t, c * pc);
  return LiePolynomial::from_sorted(std::move(out));
}

LiePolynomial lie_bracket(const LiePolynomial& p, const LiePolynomial& q) {
  // [s,t] is a distinct tree for every pair (s,t), so the product has
  // exactly |p|*|q| terms and only needs sorting, never merging.
  std::vector<LiePolynomial::Term> out;
  out.reserve(p.term_count() * q.term_count());
  for (const auto& [s, cs] : p.terms()) {
    for (const auto& [t, ct] : q.terms()) {
      out.emplace_back(make_bracket(s, t), cs * ct);
    }
  }
  std::sort(out.begin(), out.end(), [](const LiePolynomial::Term& a, const LiePolynomial::Term& b) {
    return term_canonical_less(a.first, b.first);
  });
  return LiePolynomial::from_sorted(std::move(out));
}

LiePolynomial ad_power(const LiePolynomial& a, int j, const LiePolynomial& b) {
  if (j < 0) throw std::invalid_argument("ad_power: negative exponent");
  LiePolynomial r = b;
  for (int i = 0; i < j; ++i) r = lie_bracket(a, r);
  return r;
}

std::string to_string(const LiePolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : p.terms()) {
    if (!first) out += " + ";
    first = false;
    out += '(';
    out += to_string(c);
    out += ')';
    out += term_to_string(t);
  }
  return out;
}

LiePolynomial LiePolynomial::from_string(std::string_view s) {
  if (s == "0") return {};
  std::vector<Term> parsed;
  std::size_t pos = 0;
  while (true) {
    if (pos >= s.size() || s[pos] != '(') {
      throw std::invalid_argument("polynomial: expected '('");
    }
    const std::size_t close = s.find(')', pos);
    if (close == std::string_view::npos) {
      throw std::invalid_argument("polynomial: unterminated coefficient");
    }
    const Rational coeff = rational_from_string(s.substr(pos + 1, close - pos - 1));
    pos = close + 1;
    const std::size_t term_end = s.find(" + ", pos);
    const std::size_t end = term_end == std::string_view::npos ? s.size() : term_end;
    const TermId term = term_from_string(s.substr(pos, end - pos));
    if (coeff != 0) parsed.emplace_back(term, coeff);
    if (term_end == std::string_view::npos) break;
    pos = term_end + 3;
  }
  return from_terms(std::move(parsed));
}

}  // namespace zassenhaus
