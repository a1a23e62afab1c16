#ifndef ZASSENHAUS_RENDER_HPP
#define ZASSENHAUS_RENDER_HPP

#include <string>

#include <json.hpp>

#include "zassenhaus/series.hpp"
#include "zassenhaus/verifier.hpp"

namespace zassenhaus {

// Plain-text rendering: one line per exponent, e.g.
//
//   C2 = (-1/2)[X,Y]
//   C3 = (1/3)[Y,[X,Y]] + (1/6)[X,[X,Y]]
//
// Lines are ordered by degree and terminated with '\n'.
std::string render_text(const ZassenhausSeries& series);

// JSON rendering.  Schema:
//
//   {
//     "max_degree": N,
//     "orientation": "right" | "left",
//     "exponents": [
//       {
//         "degree": n,
//         "term_count": k,
//         "terms": [
//           {"coefficient": "p/q", "commutator": "[X,[X,Y]]"},
//           ...
//         ]
//       },
//       ...
//     ]
//   }
//
// Terms appear in canonical order; coefficients use the exact rational
// grammar from rational.hpp, commutators the grammar from commutator.hpp.
nlohmann::json series_to_json(const ZassenhausSeries& series,
                              Orientation orientation);

// Inverse of series_to_json.  Throws std::invalid_argument on schema
// violations (missing keys, malformed coefficients or commutators,
// degree mismatches).  Term order in the input is not significant;
// duplicate terms are merged.
struct ParsedSeries {
  ZassenhausSeries series;
  Orientation orientation;
};
ParsedSeries series_from_json(const nlohmann::json& doc);

// LaTeX rendering: one aligned row per exponent, e.g.
//
//   C_{2} &= -\frac{1}{2}[X,Y] \\
//
// Coefficients render as (-)\frac{|p|}{q}, integers stay plain, and a
// unit coefficient is omitted in front of the bracket.
std::string render_latex(const ZassenhausSeries& series);

}  // namespace zassenhaus

#endif
