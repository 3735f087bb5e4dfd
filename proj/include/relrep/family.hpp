#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>

#include "relrep/game.hpp"
#include "relrep/structure.hpp"

namespace relrep {

// Per-index element kinds of S_n, in element order.
enum class SnKind { m, eps, a, b, c, d, cd, ac, acd, cdb, db, ab };

// e.g. sn_id(SnKind::cd, 2) == "cd_2".
std::string sn_id(SnKind kind, std::size_t i);

// The {D,R,*}-structure S_n with N = 2n+1 indices: 0, d, r, then per index
// m, eps, a, b, c, d, cd, ac, acd, cdb, db, ab. Index arithmetic is mod N and
// every product not listed is 0 apart from the mandatory D(x)∘x = x = x∘R(x).
FinStructure gen_sn(std::size_t n);

// Where an element of S_n sits: kind and index, or nullopt for 0, d, r.
struct SnElement {
  SnKind kind;
  std::size_t index;
};
std::optional<SnElement> sn_decode(const FinStructure& s, Elem e);

// Closure that ∃ would maintain if she were allowed to extend beyond the
// mandated labels: companions (a_i ⇒ acd_i, m_i ⇒ cd_i, b_i ⇒ cdb_i), D and R
// values on loops, and every nonzero product along a path.
Network sn_shadow(const Network& n, const FinStructure& s);

// The bookkeeping invariants of the scripted strategy, checked on a network:
//   a node with m_i on its loop has at most one c_i/d_i partner;
//   nodes joined by cd_i share that partner;
//   the shadow carries the companion labels and never holds 0.
// Returns a description of the first violation, or nullopt.
std::optional<std::string> sn_invariant_violation(const Network& n, const FinStructure& s);

// The c_i/d_i partner of node x (c_i ∈ ⊤(x,y) or d_i ∈ ⊤(y,x)), if any.
std::optional<Node> sn_partner(const Network& n, const FinStructure& s, Node x, std::size_t i);

// The scripted ∃ strategy for Γ_n(S_n): always compose, route c_i/d_i
// through the designated partner, witnesses on fresh nodes otherwise, and the
// forced init choices. Among replies it prefers those whose shadow stays
// consistent; when none is left it plays the first consistent reply, else
// resigns. Throws Error when the structure is not gen_sn(n).
std::unique_ptr<ExistsStrategy> sn_strategy(std::size_t n, const FinStructure& s);

}  // namespace relrep
