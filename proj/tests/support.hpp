#pragma once

// Test-only helpers: direct set-based readings of the relational definitions
// (no bit tricks, no shared code with the library) and small structure corpora.

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "relrep/abstraction.hpp"
#include "relrep/dsl.hpp"
#include "relrep/rel.hpp"
#include "relrep/structure.hpp"
#include "relrep/validate.hpp"

namespace testing {

using Pairs = std::set<std::pair<std::size_t, std::size_t>>;

inline Pairs as_set(const relrep::Rel& r) {
  Pairs out;
  for (std::size_t x = 0; x < r.base(); ++x)
    for (std::size_t y = 0; y < r.base(); ++y)
      if (r.contains(x, y)) out.insert({x, y});
  return out;
}

inline Pairs naive_angelic(const Pairs& r, const Pairs& s, std::size_t n) {
  Pairs out;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t y = 0; y < n; ++y)
        if (r.count({x, y}) && s.count({y, z})) out.insert({x, z});
  return out;
}

inline Pairs naive_dom(const Pairs& r, std::size_t n) {
  Pairs out;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (r.count({x, y})) out.insert({x, x});
  return out;
}

inline Pairs naive_rng(const Pairs& r, std::size_t n) {
  Pairs out;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (r.count({x, y})) out.insert({y, y});
  return out;
}

// {(x,y) ∈ r;s | ∀z: (x,z) ∈ r ⇒ (z,z) ∈ D(s)}
inline Pairs naive_demonic(const Pairs& r, const Pairs& s, std::size_t n) {
  Pairs ds = naive_dom(s, n), out;
  for (auto [x, y] : naive_angelic(r, s, n)) {
    bool all = true;
    for (std::size_t z = 0; z < n; ++z)
      if (r.count({x, z}) && !ds.count({z, z})) all = false;
    if (all) out.insert({x, y});
  }
  return out;
}

inline bool naive_subset(const Pairs& a, const Pairs& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// r ⊑ s iff D(s) ⊆ D(r) and D(s);r ⊆ s
inline bool naive_refines(const Pairs& r, const Pairs& s, std::size_t n) {
  Pairs ds = naive_dom(s, n);
  return naive_subset(ds, naive_dom(r, n)) && naive_subset(naive_angelic(ds, r, n), s);
}

inline relrep::FinStructure one_element() {
  return relrep::parse_structure(
      "structure one\nsignature compose=demonic D R\nelements e\n"
      "domain e = e\nrange e = e\ncompose e e = e\nend\n");
}

// Two domain-range elements on a refinement cycle; passes every lint law.
inline relrep::FinStructure cycle4() {
  return relrep::parse_structure(R"(structure c4
signature compose=demonic D R
elements p q x y
domain p = p
domain q = q
domain x = q
domain y = q
range p = p
range q = q
range x = q
range y = p
default compose = p
compose p q = q
compose p x = x
compose p y = y
compose q q = q
compose q x = x
compose q y = y
compose x p = y
compose x q = x
compose x x = q
compose y p = y
compose y q = x
compose y x = q
end
)");
}

// Abstractions of {D,R,*}-closures of every one- or two-generator set over
// bases 1 and 2, plus the full relation sets; deduplicated by carrier.
inline std::vector<relrep::ProperAbstraction> proper_drs(std::size_t max_base = 2) {
  using namespace relrep;
  const Signature sig = Signature::domain_range(CompositionKind::demonic);
  std::set<std::vector<Rel>> seen;
  std::vector<ProperAbstraction> out;
  auto add = [&](std::size_t base, const std::vector<Rel>& gens) {
    auto rels = generate_concrete(base, gens, sig);
    if (rels.empty() || !seen.insert(rels).second) return;
    out.push_back(abstract_proper(rels, sig, "proper" + std::to_string(out.size())));
  };
  for (std::size_t base = 1; base <= max_base; ++base) {
    auto all = all_relations(base);
    for (std::size_t i = 0; i < all.size(); ++i) {
      add(base, {all[i]});
      for (std::size_t j = i + 1; j < all.size(); ++j) add(base, {all[i], all[j]});
    }
    add(base, all);
  }
  return out;
}

// Every {D,R,*}-structure on one or two elements with no well-formedness error.
inline std::vector<relrep::FinStructure> small_drs_structures() {
  using namespace relrep;
  std::vector<FinStructure> out;
  out.push_back(one_element());
  const Signature sig = Signature::domain_range(CompositionKind::demonic);
  for (unsigned d = 0; d < 4; ++d)
    for (unsigned r = 0; r < 4; ++r)
      for (unsigned t = 0; t < 16; ++t) {
        FinStructure s("t" + std::to_string(d) + "_" + std::to_string(r) + "_" + std::to_string(t), sig, {"a", "b"});
        for (Elem e = 0; e < 2; ++e) {
          s.set_dom(e, (d >> e) & 1);
          s.set_rng(e, (r >> e) & 1);
        }
        for (Elem a = 0; a < 2; ++a)
          for (Elem b = 0; b < 2; ++b) s.set_compose(a, b, (t >> (2 * a + b)) & 1);
        if (validate_structure(s).error_count() == 0) out.push_back(std::move(s));
      }
  return out;
}

}  // namespace testing
