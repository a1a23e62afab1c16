#include "zassenhaus/render.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zassenhaus/commutator.hpp"
#include "zassenhaus/lie_polynomial.hpp"
#include "zassenhaus/rational.hpp"

namespace zassenhaus {

std::string render_text(const ZassenhausSeries& series) {
  std::string out;
  for (int n = 2; n <= series.max_degree(); ++n) {
    out += "C";
    out += std::to_string(n);
    out += " = ";
    out += to_string(series.exponent(n));
    out += "\n";
  }
  return out;
}

nlohmann::json series_to_json(const ZassenhausSeries& series,
                              Orientation orientation) {
  nlohmann::json exponents = nlohmann::json::array();
  for (int n = 2; n <= series.max_degree(); ++n) {
    const LiePolynomial& c = series.exponent(n);
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [term, coeff] : c.terms()) {
      terms.push_back({{"coefficient", to_string(coeff)},
                       {"commutator", term_to_string(term)}});
    }
    exponents.push_back({{"degree", n},
                         {"term_count", c.term_count()},
                         {"terms", std::move(terms)}});
  }
  return {{"max_degree", series.max_degree()},
          {"orientation", to_string(orientation)},
          {"exponents", std::move(exponents)}};
}

namespace {

const nlohmann::json& require_field(const nlohmann::json& obj, const char* key,
                                    const char* where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw std::invalid_argument(std::string("series JSON: ") + where +
                                " is missing field '" + key + "'");
  }
  return obj.at(key);
}

long long require_integer(const nlohmann::json& obj, const char* key,
                          const char* where) {
  const nlohmann::json& v = require_field(obj, key, where);
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    throw std::invalid_argument(std::string("series JSON: field '") + key +
                                "' must be an integer");
  }
  return v.get<long long>();
}

std::string require_string(const nlohmann::json& obj, const char* key,
                           const char* where) {
  const nlohmann::json& v = require_field(obj, key, where);
  if (!v.is_string()) {
    throw std::invalid_argument(std::string("series JSON: field '") + key +
                                "' must be a string");
  }
  return v.get<std::string>();
}

}  // namespace

ParsedSeries series_from_json(const nlohmann::json& doc) {
  const long long max_degree = require_integer(doc, "max_degree", "document");
  if (max_degree < 2 || max_degree > 1'000'000) {
    throw std::invalid_argument("series JSON: max_degree out of range");
  }
  const Orientation orientation =
      orientation_from_string(require_string(doc, "orientation", "document"));

  const nlohmann::json& exponents = require_field(doc, "exponents", "document");
  if (!exponents.is_array()) {
    throw std::invalid_argument("series JSON: 'exponents' must be an array");
  }
  if (static_cast<long long>(exponents.size()) != max_degree - 1) {
    throw std::invalid_argument(
        "series JSON: expected one exponent entry per degree 2..max_degree");
  }

  std::vector<LiePolynomial> polys;
  polys.reserve(exponents.size());
  for (long long n = 2; n <= max_degree; ++n) {
    const nlohmann::json& entry = exponents[static_cast<std::size_t>(n - 2)];
    if (require_integer(entry, "degree", "exponent entry") != n) {
      throw std::invalid_argument(
          "series JSON: exponent entries must appear in degree order 2..N");
    }
    const nlohmann::json& terms = require_field(entry, "terms", "exponent entry");
    if (!terms.is_array()) {
      throw std::invalid_argument("series JSON: 'terms' must be an array");
    }
    if (require_integer(entry, "term_count", "exponent entry") !=
        static_cast<long long>(terms.size())) {
      throw std::invalid_argument(
          "series JSON: 'term_count' does not match the number of terms");
    }
    std::vector<LiePolynomial::Term> parsed;
    parsed.reserve(terms.size());
    for (const nlohmann::json& t : terms) {
      Rational coeff = rational_from_string(require_string(t, "coefficient", "term"));
      TermId term = term_from_string(require_string(t, "commutator", "term"));
      parsed.emplace_back(term, std::move(coeff));
    }
    polys.push_back(LiePolynomial::from_terms(std::move(parsed)));
  }
  // The series constructor enforces homogeneity of each entry.
  return ParsedSeries{ZassenhausSeries(static_cast<int>(max_degree), std::move(polys)),
                      orientation};
}

namespace {

// |coefficient| in LaTeX: "" for 1 (the bracket carries the term), a plain
// integer when the denominator is 1, \frac{|p|}{q} otherwise.
std::string latex_magnitude(const Rational& c) {
  const Rational a = abs(c);
  if (a.get_den() == 1) {
    if (a.get_num() == 1) return "";
    return a.get_num().get_str();
  }
  return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

}  // namespace

std::string render_latex(const ZassenhausSeries& series) {
  std::string out = "\\begin{align}\n";
  for (int n = 2; n <= series.max_degree(); ++n) {
    out += "  C_{";
    out += std::to_string(n);
    out += "} &= ";
    const auto& terms = series.exponent(n).terms();
    if (terms.empty()) out += "0";
    bool first = true;
    for (const auto& [term, coeff] : terms) {
      const bool negative = sgn(coeff) < 0;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      out += latex_magnitude(coeff);
      out += term_to_string(term);
      first = false;
    }
    out += " \\\\\n";
  }
  out += "\\end{align}\n";
  return out;
}

}  // namespace zassenhaus
