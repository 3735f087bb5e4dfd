#include "relrep/game.hpp"

#include <array>

#include "relrep/error.hpp"

namespace relrep {

namespace {

constexpr std::array<const char*, 7> kKindNames = {"init",         "witness", "composition-domain", "composition",
                                                   "domain-range", "domain",  "range"};
constexpr std::array<const char*, 4> kInitNames = {"ref-ab", "nref-ab", "ref-ba", "nref-ba"};

}  // namespace

std::string to_string(ChallengeKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

std::optional<ChallengeKind> challenge_kind_from_string(const std::string& text) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (text == kKindNames[i]) return static_cast<ChallengeKind>(i);
  return std::nullopt;
}

std::string to_string(InitChoice c) { return kInitNames[static_cast<std::size_t>(c)]; }

std::optional<InitChoice> init_choice_from_string(const std::string& text) {
  for (std::size_t i = 0; i < kInitNames.size(); ++i)
    if (text == kInitNames[i]) return static_cast<InitChoice>(i);
  return std::nullopt;
}

void require_game_signature(const FinStructure& s) {
  const Signature& sig = s.signature();
  if (sig.composition != CompositionKind::demonic || !sig.domain || !sig.range)
    throw SignatureError("the representation game needs {D,R,*}, got " + sig.describe());
  if (!s.total()) throw Error("structure has undefined table entries");
}

PlayState start_game(const FinStructure& s, std::size_t moves) {
  require_game_signature(s);
  PlayState st;
  st.structure = &s;
  st.network = Network(s.size());
  st.moves_left = moves;
  return st;
}

std::vector<Challenge> legal_challenges(const PlayState& state) {
  const FinStructure& s = *state.structure;
  const auto n = static_cast<Elem>(s.size());
  std::vector<Challenge> out;
  if (!state.started) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = a + 1; b < n; ++b) out.push_back({ChallengeKind::init, 0, 0, 0, a, b});
    return out;
  }
  if (state.moves_left == 0) return out;
  const Network& net = state.network;
  const auto k = static_cast<Node>(net.node_count());

  // Per pair, the labels on it, computed once.
  std::vector<std::vector<Elem>> top(static_cast<std::size_t>(k) * k);
  for (Node x = 0; x < k; ++x)
    for (Node y = 0; y < k; ++y) top[static_cast<std::size_t>(x) * k + y] = net.top_labels(x, y);
  auto at = [&](Node x, Node y) -> const std::vector<Elem>& { return top[static_cast<std::size_t>(x) * k + y]; };

  for (Node x = 0; x < k; ++x)
    for (Node z = 0; z < k; ++z)
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          if (net.top(x, z, s.compose(a, b))) out.push_back({ChallengeKind::witness, x, 0, z, a, b});

  for (Node x = 0; x < k; ++x)
    for (Node y = 0; y < k; ++y)
      for (Node z = 0; z < k; ++z)
        for (Elem a : at(x, y))
          for (Elem b = 0; b < n; ++b)
            if (net.top(x, z, s.compose(a, b))) out.push_back({ChallengeKind::composition_domain, x, y, z, a, b});

  for (Node x = 0; x < k; ++x)
    for (Node y = 0; y < k; ++y)
      for (Node z = 0; z < k; ++z)
        for (Elem a : at(x, y))
          for (Elem b : at(y, z)) out.push_back({ChallengeKind::composition, x, y, z, a, b});

  for (Node x = 0; x < k; ++x)
    for (Node y = 0; y < k; ++y)
      for (Elem a : at(x, y)) out.push_back({ChallengeKind::domain_range, x, y, 0, a, 0});

  for (Node x = 0; x < k; ++x)
    for (Elem a = 0; a < n; ++a)
      if (net.top(x, x, s.dom(a))) out.push_back({ChallengeKind::domain, x, 0, 0, a, 0});

  for (Node y = 0; y < k; ++y)
    for (Elem a = 0; a < n; ++a)
      if (net.top(y, y, s.rng(a))) out.push_back({ChallengeKind::range, 0, y, 0, a, 0});

  return out;
}

bool challenge_is_legal(const PlayState& state, const Challenge& ch) {
  const FinStructure& s = *state.structure;
  const Network& net = state.network;
  const std::size_t n = s.size();
  const std::size_t k = net.node_count();
  if (ch.a >= n || ch.b >= n) return false;
  if (!state.started) return ch.kind == ChallengeKind::init && ch.a != ch.b;
  if (ch.kind == ChallengeKind::init || state.moves_left == 0) return false;
  if (ch.x >= k || ch.y >= k || ch.z >= k) return false;
  switch (ch.kind) {
    case ChallengeKind::init:
      return false;
    case ChallengeKind::witness:
      return net.top(ch.x, ch.z, s.compose(ch.a, ch.b));
    case ChallengeKind::composition_domain:
      return net.top(ch.x, ch.y, ch.a) && net.top(ch.x, ch.z, s.compose(ch.a, ch.b));
    case ChallengeKind::composition:
      return net.top(ch.x, ch.y, ch.a) && net.top(ch.y, ch.z, ch.b);
    case ChallengeKind::domain_range:
      return net.top(ch.x, ch.y, ch.a);
    case ChallengeKind::domain:
      return net.top(ch.x, ch.x, s.dom(ch.a));
    case ChallengeKind::range:
      return net.top(ch.y, ch.y, s.rng(ch.a));
  }
  return false;
}

bool is_redundant(const Network& net, const FinStructure& s, const Challenge& ch) {
  const auto k = static_cast<Node>(net.node_count());
  switch (ch.kind) {
    case ChallengeKind::init:
      return false;
    case ChallengeKind::witness:
      for (Node y = 0; y < k; ++y)
        if (net.top(ch.x, y, ch.a) && net.top(y, ch.z, ch.b)) return true;
      return false;
    case ChallengeKind::composition_domain:
      return net.top(ch.y, ch.y, s.dom(ch.b));
    case ChallengeKind::composition:
      if (net.top(ch.x, ch.z, s.compose(ch.a, ch.b))) return true;
      for (Node w = 0; w < k; ++w)
        if (net.top(ch.x, w, ch.a) && net.bot(w, w, s.dom(ch.b))) return true;
      return false;
    case ChallengeKind::domain_range:
      return net.top(ch.x, ch.x, s.dom(ch.a)) && net.top(ch.y, ch.y, s.rng(ch.a));
    case ChallengeKind::domain:
      for (Node y = 0; y < k; ++y)
        if (net.top(ch.x, y, ch.a)) return true;
      return false;
    case ChallengeKind::range:
      for (Node x = 0; x < k; ++x)
        if (net.top(x, ch.y, ch.a)) return true;
      return false;
  }
  return false;
}

std::vector<Response> responses_for(const PlayState& state, const Challenge& ch) {
  const auto k = static_cast<Node>(state.network.node_count());
  std::vector<Response> out;
  auto nodes = [&](bool branch) {
    for (Node v = 0; v <= k; ++v) {
      Response r;
      r.kind = ch.kind;
      r.add_composition = branch;
      r.node = v;
      out.push_back(r);
    }
  };
  switch (ch.kind) {
    case ChallengeKind::init:
      for (InitChoice c : {InitChoice::ref_ab, InitChoice::nref_ab, InitChoice::ref_ba, InitChoice::nref_ba}) {
        Response r;
        r.init = c;
        out.push_back(r);
      }
      break;
    case ChallengeKind::witness:
    case ChallengeKind::domain:
    case ChallengeKind::range:
      nodes(true);
      break;
    case ChallengeKind::composition: {
      Response r;
      r.kind = ch.kind;
      out.push_back(r);
      nodes(false);
      break;
    }
    case ChallengeKind::composition_domain:
    case ChallengeKind::domain_range: {
      Response r;
      r.kind = ch.kind;
      out.push_back(r);
      break;
    }
  }
  return out;
}

Network apply(const Network& n, const FinStructure& s, const Challenge& ch, const Response& r) {
  if (r.kind != ch.kind) throw Error("response kind " + to_string(r.kind) + " does not match challenge " + to_string(ch.kind));
  if (ch.kind != ChallengeKind::init && r.node > n.node_count())
    throw Error("node " + std::to_string(r.node) + " is neither present nor fresh");
  Network out = n;
  switch (ch.kind) {
    case ChallengeKind::init:
      switch (r.init) {
        case InitChoice::ref_ab:
          return net_ref(s, ch.a, ch.b);
        case InitChoice::nref_ab:
          return net_nref(s, ch.a, ch.b);
        case InitChoice::ref_ba:
          return net_ref(s, ch.b, ch.a);
        case InitChoice::nref_ba:
          return net_nref(s, ch.b, ch.a);
      }
      break;
    case ChallengeKind::witness:
      out.put_top(ch.x, r.node, ch.a);
      out.put_top(r.node, ch.z, ch.b);
      break;
    case ChallengeKind::composition_domain:
      out.put_top(ch.y, ch.y, s.dom(ch.b));
      break;
    case ChallengeKind::composition:
      if (r.add_composition) {
        out.put_top(ch.x, ch.z, s.compose(ch.a, ch.b));
      } else {
        out.put_top(ch.x, r.node, ch.a);
        out.put_bot(r.node, r.node, s.dom(ch.b));
      }
      break;
    case ChallengeKind::domain_range:
      out.put_top(ch.x, ch.x, s.dom(ch.a));
      out.put_top(ch.y, ch.y, s.rng(ch.a));
      break;
    case ChallengeKind::domain:
      out.put_top(ch.x, r.node, ch.a);
      break;
    case ChallengeKind::range:
      out.put_top(r.node, ch.y, ch.a);
      break;
  }
  return out;
}

PlayState respond(const PlayState& state, const Challenge& ch, const Response& r) {
  PlayState next = state;
  next.network = apply(state.network, *state.structure, ch, r);
  if (ch.kind == ChallengeKind::init) {
    next.started = true;
  } else if (next.moves_left > 0) {
    --next.moves_left;
  }
  return next;
}

std::optional<Challenge> RandomForall::challenge(const PlayState& state) {
  auto options = legal_challenges(state);
  if (options.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
  return options[pick(rng_)];
}

std::optional<Response> FirstConsistentExists::respond(const PlayState& state, const Challenge& ch) {
  for (const Response& r : responses_for(state, ch))
    if (consistent(apply(state.network, *state.structure, ch, r), *state.structure)) return r;
  return std::nullopt;
}

Transcript playout(const FinStructure& s, std::size_t n, ForallStrategy& forall, ExistsStrategy& exists) {
  Transcript t;
  PlayState state = start_game(s, n);
  while (true) {
    auto ch = forall.challenge(state);
    if (!ch) break;
    Move move{*ch, exists.respond(state, *ch), false};
    if (!move.response) {
      t.moves.push_back(move);
      t.final_network = state.network;
      return t;
    }
    state = respond(state, *ch, *move.response);
    move.consistent = consistent(state.network, s);
    t.moves.push_back(move);
    if (!move.consistent) {
      t.final_network = state.network;
      return t;
    }
  }
  t.exists_survived = true;
  t.final_network = state.network;
  return t;
}

nlohmann::ordered_json challenge_to_json(const FinStructure& s, const Challenge& ch) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(ch.kind);
  switch (ch.kind) {
    case ChallengeKind::init:
      j["a"] = s.id(ch.a);
      j["b"] = s.id(ch.b);
      break;
    case ChallengeKind::witness:
      j["x"] = ch.x;
      j["z"] = ch.z;
      j["a"] = s.id(ch.a);
      j["b"] = s.id(ch.b);
      break;
    case ChallengeKind::composition_domain:
    case ChallengeKind::composition:
      j["x"] = ch.x;
      j["y"] = ch.y;
      j["z"] = ch.z;
      j["a"] = s.id(ch.a);
      j["b"] = s.id(ch.b);
      break;
    case ChallengeKind::domain_range:
      j["x"] = ch.x;
      j["y"] = ch.y;
      j["a"] = s.id(ch.a);
      break;
    case ChallengeKind::domain:
      j["x"] = ch.x;
      j["a"] = s.id(ch.a);
      break;
    case ChallengeKind::range:
      j["y"] = ch.y;
      j["a"] = s.id(ch.a);
      break;
  }
  return j;
}

Challenge challenge_from_json(const FinStructure& s, const nlohmann::json& j) {
  try {
    auto kind = challenge_kind_from_string(j.at("kind").get<std::string>());
    if (!kind) throw Error("unknown challenge kind " + j.at("kind").dump());
    Challenge ch;
    ch.kind = *kind;
    if (j.contains("x")) ch.x = j.at("x").get<Node>();
    if (j.contains("y")) ch.y = j.at("y").get<Node>();
    if (j.contains("z")) ch.z = j.at("z").get<Node>();
    if (j.contains("a")) ch.a = s.at(j.at("a").get<std::string>());
    if (j.contains("b")) ch.b = s.at(j.at("b").get<std::string>());
    return ch;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed challenge: ") + e.what());
  }
}

nlohmann::ordered_json response_to_json(const Response& r) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(r.kind);
  switch (r.kind) {
    case ChallengeKind::init:
      j["network"] = to_string(r.init);
      break;
    case ChallengeKind::composition:
      j["branch"] = r.add_composition ? "compose" : "bottom";
      if (!r.add_composition) j["node"] = r.node;
      break;
    case ChallengeKind::witness:
    case ChallengeKind::domain:
    case ChallengeKind::range:
      j["node"] = r.node;
      break;
    case ChallengeKind::composition_domain:
    case ChallengeKind::domain_range:
      break;
  }
  return j;
}

Response response_from_json(const nlohmann::json& j) {
  try {
    auto kind = challenge_kind_from_string(j.at("kind").get<std::string>());
    if (!kind) throw Error("unknown response kind " + j.at("kind").dump());
    Response r;
    r.kind = *kind;
    if (r.kind == ChallengeKind::init) {
      auto c = init_choice_from_string(j.at("network").get<std::string>());
      if (!c) throw Error("unknown init network " + j.at("network").dump());
      r.init = *c;
    }
    if (j.contains("branch")) r.add_composition = j.at("branch").get<std::string>() == "compose";
    if (j.contains("node")) r.node = j.at("node").get<Node>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed response: ") + e.what());
  }
}

std::string describe(const FinStructure& s, const Challenge& ch) {
  auto n = [](Node v) { return std::to_string(v); };
  switch (ch.kind) {
    case ChallengeKind::init:
      return "init " + s.id(ch.a) + " " + s.id(ch.b);
    case ChallengeKind::witness:
      return "witness " + n(ch.x) + " " + n(ch.z) + " " + s.id(ch.a) + " " + s.id(ch.b);
    case ChallengeKind::composition_domain:
      return "composition-domain " + n(ch.x) + " " + n(ch.y) + " " + n(ch.z) + " " + s.id(ch.a) + " " + s.id(ch.b);
    case ChallengeKind::composition:
      return "composition " + n(ch.x) + " " + n(ch.y) + " " + n(ch.z) + " " + s.id(ch.a) + " " + s.id(ch.b);
    case ChallengeKind::domain_range:
      return "domain-range " + n(ch.x) + " " + n(ch.y) + " " + s.id(ch.a);
    case ChallengeKind::domain:
      return "domain " + n(ch.x) + " " + s.id(ch.a);
    case ChallengeKind::range:
      return "range " + n(ch.y) + " " + s.id(ch.a);
  }
  return "?";
}

std::string describe(const Network& net, const Response& r) {
  auto node = [&](Node v) { return v == net.fresh() ? std::string("fresh") : std::to_string(v); };
  switch (r.kind) {
    case ChallengeKind::init:
      return to_string(r.init);
    case ChallengeKind::composition:
      return r.add_composition ? std::string("compose") : "bottom " + node(r.node);
    case ChallengeKind::witness:
    case ChallengeKind::domain:
    case ChallengeKind::range:
      return node(r.node);
    case ChallengeKind::composition_domain:
    case ChallengeKind::domain_range:
      return "ok";
  }
  return "?";
}

}  // namespace relrep
