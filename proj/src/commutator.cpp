#include "zassenhaus/commutator.hpp"

#include <array>
#include <atomic>
#include <cassert>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace zassenhaus {

namespace {

struct Node {
  TermId left;
  TermId right;
  std::uint32_t degree;
};

// Interned nodes live in fixed-size chunks that are never moved or freed, so
// readers can dereference ids without taking the intern lock. ~2^31 distinct
// trees is far beyond anything the series engine produces (degree 20 needs
// on the order of 10^5).
constexpr std::uint32_t kChunkBits = 16;
constexpr std::uint32_t kChunkSize = 1u << kChunkBits;
constexpr std::uint32_t kMaxChunks = 1u << 15;

struct Pool {
  std::array<std::atomic<Node*>, kMaxChunks> chunks{};
  std::mutex mu;
  std::unordered_map<std::uint64_t, TermId> intern;
  std::uint32_t size = 0;

  Pool() {
    auto* first = new Node[kChunkSize];
    first[kTermX] = {kTermX, kTermX, 1};
    first[kTermY] = {kTermY, kTermY, 1};
    chunks[0].store(first, std::memory_order_release);
    size = 2;
  }

  const Node& node(TermId id) const {
    return chunks[id >> kChunkBits].load(std::memory_order_acquire)[id & (kChunkSize - 1)];
  }
};

Pool& pool() {
  static Pool p;
  return p;
}

}  // namespace

TermId make_bracket(TermId left, TermId right) {
  Pool& p = pool();
  const std::uint64_t key = (static_cast<std::uint64_t>(left) << 32) | right;

  std::lock_guard<std::mutex> lock(p.mu);
  if (auto it = p.intern.find(key); it != p.intern.end()) return it->second;

  const TermId id = p.size;
  if ((id >> kChunkBits) >= kMaxChunks) throw std::length_error("term pool exhausted");
  if ((id & (kChunkSize - 1)) == 0 && p.chunks[id >> kChunkBits].load(std::memory_order_relaxed) == nullptr) {
    p.chunks[id >> kChunkBits].store(new Node[kChunkSize], std::memory_order_release);
  }
  Node* chunk = p.chunks[id >> kChunkBits].load(std::memory_order_relaxed);
  chunk[id & (kChunkSize - 1)] = {left, right, p.node(left).degree + p.node(right).degree};
  p.size = id + 1;
  p.intern.emplace(key, id);
  return id;
}

bool term_is_leaf(TermId t) { return t < 2; }

TermId term_left(TermId t) {
  assert(!term_is_leaf(t));
  return pool().node(t).left;
}

TermId term_right(TermId t) {
  assert(!term_is_leaf(t));
  return pool().node(t).right;
}

int term_degree(TermId t) { return static_cast<int>(pool().node(t).degree); }

namespace {

void append_term(TermId t, std::string& out) {
  if (t == kTermX) {
    out += 'X';
  } else if (t == kTermY) {
    out += 'Y';
  } else {
    out += '[';
    append_term(term_left(t), out);
    out += ',';
    append_term(term_right(t), out);
    out += ']';
  }
}

TermId parse_term(std::string_view s, std::size_t& pos) {
  if (pos >= s.size()) throw std::invalid_argument("term: unexpected end of input");
  const char c = s[pos];
  if (c == 'X') {
    ++pos;
    return kTermX;
  }
  if (c == 'Y') {
    ++pos;
    return kTermY;
  }
  if (c != '[') throw std::invalid_argument("term: expected 'X', 'Y' or '['");
  ++pos;
  const TermId left = parse_term(s, pos);
  if (pos >= s.size() || s[pos] != ',') throw std::invalid_argument("term: expected ','");
  ++pos;
  const TermId right = parse_term(s, pos);
  if (pos >= s.size() || s[pos] != ']') throw std::invalid_argument("term: expected ']'");
  ++pos;
  return make_bracket(left, right);
}

}  // namespace

std::string term_to_string(TermId t) {
  std::string out;
  out.reserve(static_cast<std::size_t>(term_degree(t)) * 4);
  append_term(t, out);
  return out;
}

TermId term_from_string(std::string_view s) {
  std::size_t pos = 0;
  const TermId t = parse_term(s, pos);
  if (pos != s.size()) throw std::invalid_argument("term: trailing characters");
  return t;
}

int term_cmp_serial(TermId a, TermId b) {
  if (a == b) return 0;
  const bool la = term_is_leaf(a);
  const bool lb = term_is_leaf(b);
  if (la && lb) return a == kTermX ? -1 : 1;  // "X" < "Y"
  if (la != lb) return la ? -1 : 1;           // 'X','Y' < '['
  if (const int c = term_cmp_serial(term_left(a), term_left(b)); c != 0) return c;
  return term_cmp_serial(term_right(a), term_right(b));
}

bool term_canonical_less(TermId a, TermId b) {
  const int da = term_degree(a);
  const int db = term_degree(b);
  if (da != db) return da < db;
  return term_cmp_serial(a, b) > 0;
}

}  // namespace zassenhaus
