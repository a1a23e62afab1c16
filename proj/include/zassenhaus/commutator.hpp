#ifndef ZASSENHAUS_COMMUTATOR_HPP
#define ZASSENHAUS_COMMUTATOR_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace zassenhaus {

// A commutator term is a binary bracket tree over the generators X and Y,
// e.g. [X,[X,Y]]. Trees are hash-consed into a process-wide immutable pool,
// so a TermId names one structurally unique tree and structural equality is
// id equality. Terms are kept purely structural: no antisymmetry or Jacobi
// rewriting is ever applied.
using TermId = std::uint32_t;

inline constexpr TermId kTermX = 0;
inline constexpr TermId kTermY = 1;

// Returns the interned id of [left,right]. Thread-safe.
TermId make_bracket(TermId left, TermId right);

bool term_is_leaf(TermId t);
TermId term_left(TermId t);    // precondition: !term_is_leaf(t)
TermId term_right(TermId t);   // precondition: !term_is_leaf(t)
int term_degree(TermId t);     // number of generator leaves

// Serialized form, no whitespace:
//   term := "X" | "Y" | "[" term "," term "]"
std::string term_to_string(TermId t);

// Parses the serialized form exactly; throws std::invalid_argument on
// malformed input or trailing characters.
TermId term_from_string(std::string_view s);

// Three-way lexicographic comparison of the serialized forms, computed on
// the trees without materializing strings. (The grammar is prefix-free, so
// comparing subtrees in order is equivalent to comparing the strings.)
int term_cmp_serial(TermId a, TermId b);

// Canonical ordering of terms inside a polynomial and in rendered output:
// by degree, then by *descending* serialized form. The descending tie-break
// lists Y-rooted brackets before X-rooted ones, which is how the low-degree
// Zassenhaus exponents are conventionally written.
bool term_canonical_less(TermId a, TermId b);

}  // namespace zassenhaus

#endif
