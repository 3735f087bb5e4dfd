#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "relrep/network.hpp"
#include "relrep/structure.hpp"

namespace relrep {

enum class ChallengeKind { init, witness, composition_domain, composition, domain_range, domain, range };

std::string to_string(ChallengeKind kind);
std::optional<ChallengeKind> challenge_kind_from_string(const std::string& text);

// One ∀ move. Fields used per kind:
//   init               a, b (a ≠ b)
//   witness            x, z, a, b         a*b ∈ ⊤(x,z)
//   composition_domain x, y, z, a, b      a ∈ ⊤(x,y), a*b ∈ ⊤(x,z)
//   composition        x, y, z, a, b      a ∈ ⊤(x,y), b ∈ ⊤(y,z)
//   domain_range       x, y, a            a ∈ ⊤(x,y)
//   domain             x, a               D(a) ∈ ⊤(x,x)
//   range              y, a               R(a) ∈ ⊤(y,y)
// Unused fields stay 0.
struct Challenge {
  ChallengeKind kind = ChallengeKind::init;
  Node x = 0, y = 0, z = 0;
  Elem a = 0, b = 0;

  bool operator==(const Challenge&) const = default;
  auto operator<=>(const Challenge&) const = default;
};

// The four starting networks: top a/bot b or top b/bot a, on a loop or an edge.
enum class InitChoice { ref_ab, nref_ab, ref_ba, nref_ba };

// One ∃ reply. `node` is the chosen y (witness), x/y (domain/range) or w
// (composition branch two); fresh() means a new node.
struct Response {
  ChallengeKind kind = ChallengeKind::init;
  InitChoice init = InitChoice::ref_ab;
  bool add_composition = true;
  Node node = 0;

  bool operator==(const Response&) const = default;
};

struct PlayState {
  const FinStructure* structure = nullptr;
  Network network;
  std::size_t moves_left = 0;
  bool started = false;  // the init move has been played
};

PlayState start_game(const FinStructure& s, std::size_t moves);

// Requires {D,R,*}; throws SignatureError otherwise.
void require_game_signature(const FinStructure& s);

// Every challenge whose side conditions hold, in (kind, x, y, z, a, b) order.
// Before the init move: one init challenge per pair a < b. Empty when no
// moves are left.
std::vector<Challenge> legal_challenges(const PlayState& state);
bool challenge_is_legal(const PlayState& state, const Challenge& ch);

// The mandated additions are already present, so some reply leaves the
// network unchanged.
bool is_redundant(const Network& n, const FinStructure& s, const Challenge& ch);

// Every reply ∃ may give (conservative play), in a fixed order: existing
// nodes ascending, then fresh; for composition the a*b branch first.
std::vector<Response> responses_for(const PlayState& state, const Challenge& ch);

// Applies exactly the mandated extension. Throws Error on a mismatched reply
// or a node outside N ∪ {fresh}. Init does not consume a move.
PlayState respond(const PlayState& state, const Challenge& ch, const Response& r);
// Same on a bare network.
Network apply(const Network& n, const FinStructure& s, const Challenge& ch, const Response& r);

class ForallStrategy {
 public:
  virtual ~ForallStrategy() = default;
  virtual std::optional<Challenge> challenge(const PlayState& state) = 0;
};

// nullopt means ∃ resigns.
class ExistsStrategy {
 public:
  virtual ~ExistsStrategy() = default;
  virtual std::optional<Response> respond(const PlayState& state, const Challenge& ch) = 0;
};

// Uniform over legal_challenges.
class RandomForall : public ForallStrategy {
 public:
  explicit RandomForall(std::uint64_t seed) : rng_(seed) {}
  std::optional<Challenge> challenge(const PlayState& state) override;

 private:
  std::mt19937_64 rng_;
};

// First reply that keeps the network consistent.
class FirstConsistentExists : public ExistsStrategy {
 public:
  std::optional<Response> respond(const PlayState& state, const Challenge& ch) override;
};

struct Move {
  Challenge challenge;
  std::optional<Response> response;
  bool consistent = true;
};

struct Transcript {
  std::vector<Move> moves;
  bool exists_survived = false;
  Network final_network;
};

// Init plus up to n moves; stops at the first inconsistency, resignation or
// when ∀ has no challenge.
Transcript playout(const FinStructure& s, std::size_t n, ForallStrategy& forall, ExistsStrategy& exists);

nlohmann::ordered_json challenge_to_json(const FinStructure& s, const Challenge& ch);
Challenge challenge_from_json(const FinStructure& s, const nlohmann::json& j);
nlohmann::ordered_json response_to_json(const Response& r);
Response response_from_json(const nlohmann::json& j);
std::string describe(const FinStructure& s, const Challenge& ch);
std::string describe(const Network& n, const Response& r);
std::string to_string(InitChoice c);
std::optional<InitChoice> init_choice_from_string(const std::string& text);

}  // namespace relrep
