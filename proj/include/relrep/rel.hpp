#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "relrep/signature.hpp"

namespace relrep {

// Binary relation over the base {0, ..., size-1}, stored as a dense bit
// matrix with one row of 64-bit words per point.
class Rel {
 public:
  Rel() = default;
  explicit Rel(std::size_t base);
  Rel(std::size_t base, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  static Rel identity(std::size_t base);
  static Rel universal(std::size_t base);
  // Relation whose bit matrix, read row-major, is the low base*base bits of `code`.
  static Rel from_code(std::size_t base, std::uint64_t code);

  std::size_t base() const { return base_; }
  bool contains(std::size_t x, std::size_t y) const {
    return (words_[x * stride_ + y / 64] >> (y % 64)) & 1u;
  }
  void insert(std::size_t x, std::size_t y) { words_[x * stride_ + y / 64] |= std::uint64_t{1} << (y % 64); }
  void erase(std::size_t x, std::size_t y) { words_[x * stride_ + y / 64] &= ~(std::uint64_t{1} << (y % 64)); }

  bool empty() const;
  std::size_t count() const;
  bool has_successor(std::size_t x) const;
  bool subset_of(const Rel& other) const;

  // Pairs in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  bool operator==(const Rel& other) const = default;
  // Total order: base size, then cardinality, then lexicographic pair list.
  std::strong_ordering operator<=>(const Rel& other) const;

  std::size_t hash() const;

  // `{(0,1),(1,0)}`; `{}` for the empty relation.
  std::string to_string() const;

 private:
  const std::uint64_t* row(std::size_t x) const { return words_.data() + x * stride_; }
  std::uint64_t* row(std::size_t x) { return words_.data() + x * stride_; }

  std::size_t base_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> words_;

  friend Rel compose_angelic(const Rel&, const Rel&);
  friend Rel compose_demonic(const Rel&, const Rel&);
};

Rel compose_angelic(const Rel& r, const Rel& s);
Rel compose_demonic(const Rel& r, const Rel& s);
Rel compose(CompositionKind kind, const Rel& r, const Rel& s);
Rel dom(const Rel& r);
Rel rng(const Rel& r);
Rel converse(const Rel& r);

// Demonic refinement: D(s) ⊆ D(r) and D(s);r ⊆ s.
bool refines_demonic(const Rel& r, const Rel& s);

// Parses the relation literal syntax. Whitespace is ignored.
Rel parse_rel(std::string_view text, std::size_t base);

struct RelHash {
  std::size_t operator()(const Rel& r) const { return r.hash(); }
};

// Least set containing the generators and the signature's constants that is
// closed under the signature's operations. Sorted by Rel ordering.
// Throws Inconclusive when the closure would exceed `cap` relations.
std::vector<Rel> generate_concrete(std::size_t base, const std::vector<Rel>& generators,
                                   const Signature& signature, std::size_t cap = 4096);

// Every relation over a base; 2^(base*base) of them, so keep base small.
std::vector<Rel> all_relations(std::size_t base);

}  // namespace relrep

template <>
struct std::hash<relrep::Rel> {
  std::size_t operator()(const relrep::Rel& r) const { return r.hash(); }
};
