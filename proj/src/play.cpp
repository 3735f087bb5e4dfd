#include "relrep/play.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <variant>

#include "relrep/error.hpp"

namespace relrep {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::optional<Node> parse_node(const std::string& token, const Network& net) {
  if (token == "fresh") return net.fresh();
  Node v = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || end != token.data() + token.size()) return std::nullopt;
  return v;
}

// Parses a ∀ line; returns an error message on failure.
std::variant<Challenge, std::string> parse_challenge(const FinStructure& s, const PlayState& st,
                                                     const std::vector<std::string>& w) {
  auto kind = challenge_kind_from_string(w[0]);
  if (!kind) return "unknown move '" + w[0] + "'";
  static const std::size_t arity[] = {2, 4, 5, 5, 3, 2, 2};
  const std::size_t want = arity[static_cast<std::size_t>(*kind)];
  if (w.size() != want + 1) return w[0] + " takes " + std::to_string(want) + " arguments";
  Challenge ch;
  ch.kind = *kind;
  std::size_t node_args = 0;
  switch (*kind) {
    case ChallengeKind::init:
      node_args = 0;
      break;
    case ChallengeKind::witness:
    case ChallengeKind::domain_range:
      node_args = 2;
      break;
    case ChallengeKind::composition_domain:
    case ChallengeKind::composition:
      node_args = 3;
      break;
    case ChallengeKind::domain:
    case ChallengeKind::range:
      node_args = 1;
      break;
  }
  std::vector<Node> nodes;
  for (std::size_t i = 1; i <= node_args; ++i) {
    Node v = 0;
    auto [end, ec] = std::from_chars(w[i].data(), w[i].data() + w[i].size(), v);
    if (ec != std::errc() || end != w[i].data() + w[i].size() || v >= st.network.node_count())
      return "no node '" + w[i] + "'";
    nodes.push_back(v);
  }
  std::vector<Elem> elems;
  for (std::size_t i = node_args + 1; i < w.size(); ++i) {
    auto e = s.find(w[i]);
    if (!e) return "unknown element '" + w[i] + "'";
    elems.push_back(*e);
  }
  switch (*kind) {
    case ChallengeKind::init:
      break;
    case ChallengeKind::witness:
      ch.x = nodes[0];
      ch.z = nodes[1];
      break;
    case ChallengeKind::composition_domain:
    case ChallengeKind::composition:
      ch.x = nodes[0];
      ch.y = nodes[1];
      ch.z = nodes[2];
      break;
    case ChallengeKind::domain_range:
      ch.x = nodes[0];
      ch.y = nodes[1];
      break;
    case ChallengeKind::domain:
      ch.x = nodes[0];
      break;
    case ChallengeKind::range:
      ch.y = nodes[0];
      break;
  }
  ch.a = elems[0];
  if (elems.size() > 1) ch.b = elems[1];
  if (!challenge_is_legal(st, ch)) return "move not allowed here: " + describe(s, ch);
  return ch;
}

std::variant<Response, std::string> parse_response(const PlayState& st, const Challenge& ch,
                                                   const std::vector<std::string>& w) {
  Response r;
  r.kind = ch.kind;
  const Network& net = st.network;
  auto node_at = [&](const std::string& token) -> std::variant<Response, std::string> {
    auto v = parse_node(token, net);
    if (!v || *v > net.fresh()) return "no node '" + token + "' (use a node number or fresh)";
    r.node = *v;
    return r;
  };
  switch (ch.kind) {
    case ChallengeKind::init: {
      auto c = w.size() == 1 ? init_choice_from_string(w[0]) : std::nullopt;
      if (!c) return "expected one of ref-ab, nref-ab, ref-ba, nref-ba";
      r.init = *c;
      return r;
    }
    case ChallengeKind::witness:
    case ChallengeKind::domain:
    case ChallengeKind::range:
      if (w.size() != 1) return "expected a node number or fresh";
      return node_at(w[0]);
    case ChallengeKind::composition:
      if (w.size() == 1 && w[0] == "compose") return r;
      if (w.size() == 2 && w[0] == "bottom") {
        r.add_composition = false;
        return node_at(w[1]);
      }
      return "expected 'compose' or 'bottom <node|fresh>'";
    case ChallengeKind::composition_domain:
    case ChallengeKind::domain_range:
      return r;
  }
  return "unexpected move";
}

class Session {
 public:
  Session(const FinStructure& s, const PlaySetup& setup, std::istream& in, std::ostream& out)
      : s_(s), setup_(setup), in_(in), out_(out) {}

  PlayResult run() {
    PlayState st = start_game(s_, setup_.moves);
    PlayResult result;
    bool survived = true, finished = true;
    std::string reason = "moves exhausted";
    while (true) {
      if (st.started && st.moves_left == 0) break;
      auto options = legal_challenges(st);
      if (options.empty()) {
        reason = "no challenge left";
        break;
      }
      std::optional<Challenge> ch = setup_.human == Role::forall ? ask_challenge(st, options) : machine_challenge(st);
      if (!ch) {
        reason = "forall stopped";
        finished = false;
        break;
      }
      std::optional<Response> r;
      bool input_ended = false;
      if (setup_.human == Role::exists) {
        r = ask_response(st, *ch, input_ended);
        if (input_ended) {
          reason = "exists stopped";
          finished = false;
          break;
        }
      } else {
        r = setup_.machine_exists->respond(st, *ch);
      }
      nlohmann::ordered_json rec;
      rec["move"] = result.moves_played;
      rec["challenge"] = challenge_to_json(s_, *ch);
      if (!r) {
        rec["response"] = nullptr;
        emit(result, rec, "move " + std::to_string(result.moves_played) + ": " + describe(s_, *ch) + " -> resign");
        survived = false;
        reason = "exists resigned";
        break;
      }
      const std::string reply = describe(st.network, *r);
      st = respond(st, *ch, *r);
      const bool ok = consistent(st.network, s_);
      rec["response"] = response_to_json(*r);
      rec["consistent"] = ok;
      emit(result, rec,
           "move " + std::to_string(result.moves_played) + ": " + describe(s_, *ch) + " -> " + reply +
               (ok ? "" : "  (inconsistent)"));
      ++result.moves_played;
      if (!ok) {
        survived = false;
        reason = "inconsistent network";
        break;
      }
    }
    result.exists_survived = survived && finished;
    const char* word = !finished ? "unfinished" : survived ? "exists-survives" : "forall-wins";
    nlohmann::ordered_json verdict;
    verdict["verdict"] = word;
    verdict["reason"] = reason;
    verdict["moves"] = result.moves_played;
    emit(result, verdict, std::string("verdict: ") + word + " (" + reason + ")");
    return result;
  }

 private:
  void emit(PlayResult& result, const nlohmann::ordered_json& rec, const std::string& text) {
    result.transcript.push_back(rec);
    if (setup_.json)
      out_ << rec.dump() << "\n";
    else
      out_ << text << "\n";
  }

  void prompt(const std::string& text) {
    if (!setup_.json) out_ << text << std::flush;
  }

  void say(const std::string& text) {
    if (!setup_.json) out_ << text << "\n";
  }

  bool next_line(std::vector<std::string>& words) {
    std::string line;
    while (std::getline(in_, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      words = split(line);
      if (!words.empty()) return true;
    }
    return false;
  }

  void reject(const std::string& input, const std::string& why) {
    nlohmann::ordered_json rec;
    rec["rejected"] = input;
    rec["reason"] = why;
    pending_.push_back(rec);
    if (setup_.json)
      out_ << rec.dump() << "\n";
    else
      out_ << "error: " << why << "\n";
  }

  std::optional<Challenge> machine_challenge(const PlayState& st) { return setup_.machine_forall->challenge(st); }

  std::optional<Challenge> ask_challenge(const PlayState& st, const std::vector<Challenge>& options) {
    while (true) {
      prompt("forall> ");
      std::vector<std::string> w;
      if (!next_line(w)) {
        say("");
        return std::nullopt;
      }
      if (w[0] == "quit") return std::nullopt;
      if (w[0] == "help") {
        say(std::to_string(options.size()) + " legal challenge(s):");
        for (std::size_t i = 0; i < options.size() && i < 40; ++i) say("  " + describe(s_, options[i]));
        if (options.size() > 40) say("  ...");
        continue;
      }
      std::string joined;
      for (const auto& t : w) joined += (joined.empty() ? "" : " ") + t;
      auto parsed = parse_challenge(s_, st, w);
      if (auto* err = std::get_if<std::string>(&parsed)) {
        reject(joined, *err);
        continue;
      }
      return std::get<Challenge>(parsed);
    }
  }

  std::optional<Response> ask_response(const PlayState& st, const Challenge& ch, bool& input_ended) {
    auto options = responses_for(st, ch);
    if (options.size() == 1) return options.front();
    while (true) {
      prompt("exists [" + describe(s_, ch) + "]> ");
      std::vector<std::string> w;
      if (!next_line(w)) {
        say("");
        input_ended = true;
        return std::nullopt;
      }
      if (w[0] == "quit") {
        input_ended = true;
        return std::nullopt;
      }
      if (w[0] == "help") {
        say(std::to_string(options.size()) + " possible repl(ies):");
        for (const Response& r : options) say("  " + describe(st.network, r));
        continue;
      }
      std::string joined;
      for (const auto& t : w) joined += (joined.empty() ? "" : " ") + t;
      auto parsed = parse_response(st, ch, w);
      if (auto* err = std::get_if<std::string>(&parsed)) {
        reject(joined, *err);
        continue;
      }
      return std::get<Response>(parsed);
    }
  }

  const FinStructure& s_;
  const PlaySetup& setup_;
  std::istream& in_;
  std::ostream& out_;
  std::vector<nlohmann::ordered_json> pending_;

 public:
  std::vector<nlohmann::ordered_json> take_rejections() { return std::move(pending_); }
};

}  // namespace

PlayResult play_interactive(const FinStructure& s, const PlaySetup& setup, std::istream& in, std::ostream& out) {
  if (setup.human == Role::forall && !setup.machine_exists) throw Error("no machine strategy for exists");
  if (setup.human == Role::exists && !setup.machine_forall) throw Error("no machine strategy for forall");
  Session session(s, setup, in, out);
  PlayResult result = session.run();
  // Rejected lines are part of the record, ahead of the verdict.
  auto rejected = session.take_rejections();
  if (!rejected.empty()) result.transcript.insert(result.transcript.end() - 1, rejected.begin(), rejected.end());
  return result;
}

std::vector<std::string> replay_inputs(const FinStructure& s, Role human, std::istream& transcript) {
  std::vector<std::string> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(transcript, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(number, 1, std::string("bad transcript line: ") + e.what());
    }
    if (!rec.contains("challenge")) continue;
    if (human == Role::forall) {
      out.push_back(describe(s, challenge_from_json(s, rec.at("challenge"))));
      continue;
    }
    if (!rec.contains("response") || rec.at("response").is_null()) continue;
    Response r = response_from_json(rec.at("response"));
    switch (r.kind) {
      case ChallengeKind::init:
        out.push_back(to_string(r.init));
        break;
      case ChallengeKind::composition:
        out.push_back(r.add_composition ? std::string("compose") : "bottom " + std::to_string(r.node));
        break;
      case ChallengeKind::witness:
      case ChallengeKind::domain:
      case ChallengeKind::range:
        out.push_back(std::to_string(r.node));
        break;
      case ChallengeKind::composition_domain:
      case ChallengeKind::domain_range:
        break;
    }
  }
  return out;
}

}  // namespace relrep
