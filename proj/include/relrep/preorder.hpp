#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "relrep/structure.hpp"

namespace relrep {

// One rule application in a refinement-preorder derivation. All products are
// read left to right: "s*v*u" means (s*v)*u.
//
//   base:        D(u*v) = u*v, s = R(u*D(v)), t = s*v*u      witnesses {u, v}
//   sandwich:    s' ⪯ t', s = u*s'*v, t = u*t'*v             witnesses {s', t', u, v}
//   transitive:  s ⪯ v, v ⪯ t                                witnesses {v}
//   left:        s' ⪯ t', s = u*s', t = u*t'                 witnesses {s', t', u}
//   right:       s' ⪯ t', s = s'*v, t = t'*v                 witnesses {s', t', v}
//
// left/right only appear when one-sided monotone closure is enabled.
enum class StepKind { base, sandwich, transitive, left, right };

struct PrecStep {
  StepKind kind = StepKind::base;
  Elem s = 0;
  Elem t = 0;
  std::vector<Elem> witnesses;

  bool operator==(const PrecStep&) const = default;
};

std::string to_string(StepKind kind);

struct PrecOptions {
  // Also close under u*s' ⪯ u*t' and s'*v ⪯ t'*v separately.
  bool one_sided = false;
};

// Every base pair, with the first (u, v) witness in scan order.
std::vector<PrecStep> prec_base(const FinStructure& s);

// Least preorder-candidate relation containing the base pairs and closed
// under the sandwich and transitivity clauses. Every pair records the round
// it first appeared in and the step that produced it.
class PrecClosure {
 public:
  PrecClosure(const FinStructure& s, PrecOptions options = {});

  bool contains(Elem s, Elem t) const { return depth_[index(s, t)] != 0; }
  // Round of first appearance (1 = base); 0 when absent.
  std::size_t depth(Elem s, Elem t) const { return depth_[index(s, t)]; }
  const PrecStep& step(Elem s, Elem t) const { return steps_[index(s, t)]; }
  std::vector<std::pair<Elem, Elem>> pairs() const;
  std::size_t rounds() const { return rounds_; }

  // Flattened derivation of (s,t): each step's premises precede it, no pair
  // is derived twice, and the last step concludes (s,t).
  std::vector<PrecStep> derivation(Elem s, Elem t) const;

 private:
  std::size_t index(Elem s, Elem t) const { return static_cast<std::size_t>(s) * n_ + t; }

  std::size_t n_ = 0;
  std::size_t rounds_ = 0;
  std::vector<std::size_t> depth_;
  std::vector<PrecStep> steps_;
};

struct CycleCertificate {
  std::vector<Elem> cycle;
  // derivations[i] derives cycle[i] ⪯ cycle[(i+1) % k].
  std::vector<std::vector<PrecStep>> derivations;
};

// A certificate over the strongly connected component (of the ⪯ digraph on
// distinct elements) with the smallest least member; the cycle lists that
// component in element order. nullopt when there is no such cycle.
std::optional<CycleCertificate> find_prec_cycle(const FinStructure& s, PrecOptions options = {});

// Independent checker: re-evaluates every step against the tables.
bool replay_certificate(const FinStructure& s, const CycleCertificate& c);
// True when the single step's defining equations hold (premises unchecked).
bool step_equations_hold(const FinStructure& s, const PrecStep& step);

nlohmann::ordered_json certificate_to_json(const FinStructure& s, const CycleCertificate& c);
// Throws Error on unknown ids or malformed input.
CycleCertificate certificate_from_json(const FinStructure& s, const nlohmann::json& j);

enum class TriangleVariant { angelic, demonic };

// Least relation containing the generating pairs (D(s);D(t) ◁ D(t) for the
// angelic variant, D(s)*t ◁ t for the demonic one) closed under left and
// right monotonicity and transitivity. Sorted pairs.
std::vector<std::pair<Elem, Elem>> triangle_closure(const FinStructure& s, TriangleVariant variant);

}  // namespace relrep
