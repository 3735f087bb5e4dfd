#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "relrep/game.hpp"

namespace relrep {

// Relabels nodes so that isomorphic networks get the same encoding. Nodes are
// ordered by iterated label-signature refinement; below 9 nodes every order
// compatible with the refinement is tried and the least encoding wins.
// Larger networks keep the refinement order, which may separate some
// isomorphic copies (costing memo hits, never correctness).
std::vector<Node> canonical_order(const Network& n);
std::vector<std::uint64_t> canonical_key(const Network& n);

struct SolverOptions {
  // Skip challenges whose additions are already present. Does not change
  // verdicts: ∃ can answer them without changing the network.
  bool prune_redundant = false;
  // Memo entries before giving up with Inconclusive.
  std::size_t memo_cap = 4'000'000;
  unsigned jobs = 1;
};

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& key) const;
};

// Exact AND-OR evaluation of conservative play.
class GameSolver {
 public:
  explicit GameSolver(const FinStructure& s, SolverOptions options = {});

  // The network is consistent and ∃ survives `moves` further moves from it.
  bool survives(const Network& n, std::size_t moves);
  // A reply after which ∃ survives the remaining moves, if one exists.
  std::optional<Response> winning_response(const PlayState& state, const Challenge& ch);
  bool exists_wins(std::size_t moves);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  struct Entry {
    // Survives with this many moves left (-1: none known) / fails with this many (-1: none known).
    std::int32_t wins_up_to = -1;
    std::int32_t loses_from = -1;
  };

  const FinStructure& s_;
  SolverOptions options_;
  std::unordered_map<std::vector<std::uint64_t>, Entry, KeyHash> memo_;
};

// Every pair a ≠ b has a starting network from which ∃ survives n moves.
// Throws Inconclusive when the memo cap is reached.
bool exists_wins(const FinStructure& s, std::size_t n, SolverOptions options = {});

// Plays the solver's choices; falls back to the first consistent reply when
// no winning reply exists.
class SolverExists : public ExistsStrategy {
 public:
  explicit SolverExists(const FinStructure& s, SolverOptions options = {}) : solver_(s, options) {}
  std::optional<Response> respond(const PlayState& state, const Challenge& ch) override;

 private:
  GameSolver solver_;
  FirstConsistentExists fallback_;
};

}  // namespace relrep
