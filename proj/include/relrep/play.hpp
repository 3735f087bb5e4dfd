#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "relrep/game.hpp"

namespace relrep {

enum class Role { forall, exists };

struct PlaySetup {
  Role human = Role::forall;
  std::size_t moves = 1;
  ExistsStrategy* machine_exists = nullptr;  // used when the human plays ∀
  ForallStrategy* machine_forall = nullptr;  // used when the human plays ∃
  bool json = false;                         // JSON lines on `out` instead of prompts
};

struct PlayResult {
  bool exists_survived = false;
  std::size_t moves_played = 0;
  // One JSON object per move, rejected input and the final verdict.
  std::vector<nlohmann::ordered_json> transcript;
};

// Line-oriented game loop. The human side reads one line per decision from
// `in`; `help` lists the legal options, `quit` ends the game. Bad input is
// recorded, answered with an error line and asked again. The game ends when
// the moves run out, a network becomes inconsistent, ∃ resigns or input ends
// (verdict "unfinished").
//
// ∀ lines:  init a b | witness x z a b | composition-domain x y z a b |
//           composition x y z a b | domain-range x y a | domain x a | range y a
// ∃ lines:  ref-ab | nref-ab | ref-ba | nref-ba (init), a node number or
//           `fresh`, `compose` or `bottom <node|fresh>` (composition).
//           Moves without a choice are answered automatically.
PlayResult play_interactive(const FinStructure& s, const PlaySetup& setup, std::istream& in, std::ostream& out);

// The human-side input lines recorded in a JSON-lines transcript, in order.
std::vector<std::string> replay_inputs(const FinStructure& s, Role human, std::istream& transcript);

}  // namespace relrep
