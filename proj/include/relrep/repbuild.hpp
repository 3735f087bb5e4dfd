#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "relrep/error.hpp"
#include "relrep/representation.hpp"
#include "relrep/structure.hpp"

namespace relrep {

// A builder produced a map that its own verification rejects.
class RepresentationFailure : public Error {
 public:
  RepresentationFailure(const std::string& builder, std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Right-translation representation over the elements plus an adjoined unit
// when the table has no two-sided unit. Needs a signature with composition and
// at most the identity constant, and an associative table.
RepMap cayley_rep(const FinStructure& s);

// Base = elements plus an adjoined unit e (last point); (s,t) ∈ a^θ iff
// t ≤ s∘a, where e∘a = a and e is comparable only to itself. Needs angelic
// composition with an order, monotone and associative.
RepMap zareckii_rep(const FinStructure& s);

struct ClosedSetOptions {
  std::size_t max_sets = 4096;        // closed sets kept
  std::size_t max_upsets = 1u << 20;  // candidate upsets examined
};

// (D(A)∘A∘R(A))↑ with D(A), R(A) folded over the members in element order.
std::vector<Elem> closed_set_closure(const FinStructure& s, const std::vector<Elem>& members);

// All nonempty zero-free fixpoints of the closure, each sorted, in
// lexicographic order. Needs D, R, converse and composition; domain-range
// elements must commute. The order defaults to equality when absent.
std::vector<std::vector<Elem>> closed_sets(const FinStructure& s, ClosedSetOptions options = {});

// Base = closed_sets(s) in the order returned; (S,T) ∈ a^ρ iff every s∘a
// (s ∈ S) lies in T and every t∘ă (t ∈ T) lies in S.
RepMap closed_set_rep(const FinStructure& s, ClosedSetOptions options = {});
// The same map without the final verification, for inspection.
RepMap closed_set_map(const FinStructure& s, const std::vector<std::vector<Elem>>& sets);

struct OracleOptions {
  std::size_t max_base = 3;
  std::size_t step_cap = 50'000'000;  // assignments tried before Inconclusive
};

struct OracleResult {
  std::optional<RepMap> representation;
  std::size_t searched_up_to = 0;  // every base size up to this one was exhausted
};

// Backtracking over element -> relation assignments for bases 1..max_base,
// with D, R, converse and composition values propagated as soon as their
// arguments are fixed. Returns the first map that verifies.
OracleResult brute_force_search(const FinStructure& s, OracleOptions options = {});

nlohmann::ordered_json repmap_to_json(const FinStructure& s, const RepMap& rep);
RepMap repmap_from_json(const FinStructure& s, const nlohmann::json& j);
// All elements on one graph, or just `only` when given.
std::string repmap_to_dot(const FinStructure& s, const RepMap& rep, std::optional<Elem> only = std::nullopt);

}  // namespace relrep
