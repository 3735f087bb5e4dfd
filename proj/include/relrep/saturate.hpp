#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "relrep/network.hpp"
#include "relrep/representation.hpp"

namespace relrep {

struct SaturationOptions {
  std::size_t node_cap = 8;     // per network
  std::size_t step_cap = 20000;  // search nodes over the whole run
};

enum class SaturationStatus { success, failed, inconclusive };

std::string to_string(SaturationStatus status);

struct SaturationResult {
  SaturationStatus status = SaturationStatus::failed;
  std::vector<Network> networks;        // one per init pair that needed its own
  std::optional<RepMap> representation;  // set on success
  std::string detail;
};

// No challenge is left unanswered in the network (every one is redundant).
bool saturated(const Network& n, const FinStructure& s);

// Depth-first search over ∃'s choices, always serving the pending challenge
// with the least (largest node, kind, parameters). For every pair a ≠ b not
// yet told apart, finds a consistent saturated network from one of the four
// starting networks; the disjoint union of the networks gives a^θ = {(x,y) |
// a ∈ ⊤(x,y)}. The result is verified before it is reported as success.
// A structure with one element uses the single loop network of that element.
SaturationResult saturate_and_extract(const FinStructure& s, SaturationOptions options = {});

// The relation-per-element reading of ⊤ over the disjoint union of networks.
RepMap extract_representation(const FinStructure& s, const std::vector<Network>& networks);

}  // namespace relrep
