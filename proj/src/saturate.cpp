#include "relrep/saturate.hpp"

#include <algorithm>
#include <tuple>

#include "relrep/error.hpp"
#include "relrep/game.hpp"

namespace relrep {

std::string to_string(SaturationStatus status) {
  switch (status) {
    case SaturationStatus::success:
      return "success";
    case SaturationStatus::failed:
      return "saturation failed";
    case SaturationStatus::inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

PlayState running(const FinStructure& s, const Network& n) {
  PlayState st;
  st.structure = &s;
  st.network = n;
  st.moves_left = 1;
  st.started = true;
  return st;
}

Node largest_node(const Challenge& ch) {
  switch (ch.kind) {
    case ChallengeKind::init:
      return 0;
    case ChallengeKind::witness:
      return std::max(ch.x, ch.z);
    case ChallengeKind::composition_domain:
    case ChallengeKind::composition:
      return std::max({ch.x, ch.y, ch.z});
    case ChallengeKind::domain_range:
      return std::max(ch.x, ch.y);
    case ChallengeKind::domain:
      return ch.x;
    case ChallengeKind::range:
      return ch.y;
  }
  return 0;
}

std::optional<Challenge> next_pending(const Network& n, const FinStructure& s) {
  std::optional<Challenge> best;
  auto key = [](const Challenge& c) { return std::tuple(largest_node(c), c); };
  for (const Challenge& ch : legal_challenges(running(s, n))) {
    if (best && !(key(ch) < key(*best))) continue;
    if (!is_redundant(n, s, ch)) best = ch;
  }
  return best;
}

struct Search {
  const FinStructure& s;
  SaturationOptions options;
  std::size_t steps = 0;
  bool pruned = false;  // some branch was cut by the node cap

  std::optional<Network> run(const Network& n) {
    if (++steps > options.step_cap) throw Inconclusive("step cap of " + std::to_string(options.step_cap) + " reached");
    auto ch = next_pending(n, s);
    if (!ch) return n;
    PlayState st = running(s, n);
    for (const Response& r : responses_for(st, *ch)) {
      Network next = apply(n, s, *ch, r);
      if (next.node_count() > options.node_cap) {
        pruned = true;
        continue;
      }
      if (!consistent(next, s)) continue;
      if (auto done = run(next)) return done;
    }
    return std::nullopt;
  }
};

bool told_apart(const std::vector<Network>& nets, Elem a, Elem b) {
  for (const Network& n : nets) {
    const auto k = static_cast<Node>(n.node_count());
    for (Node x = 0; x < k; ++x)
      for (Node y = 0; y < k; ++y)
        if (n.top(x, y, a) != n.top(x, y, b)) return true;
  }
  return false;
}

}  // namespace

bool saturated(const Network& n, const FinStructure& s) { return !next_pending(n, s).has_value(); }

RepMap extract_representation(const FinStructure& s, const std::vector<Network>& networks) {
  std::size_t base = 0;
  for (const Network& n : networks) base += n.node_count();
  RepMap rep{base, std::vector<Rel>(s.size(), Rel(std::max<std::size_t>(base, 1)))};
  std::size_t offset = 0;
  for (const Network& n : networks) {
    const auto k = static_cast<Node>(n.node_count());
    for (Node x = 0; x < k; ++x)
      for (Node y = 0; y < k; ++y)
        for (Elem a : n.top_labels(x, y)) rep.assignment[a].insert(offset + x, offset + y);
    offset += k;
  }
  return rep;
}

SaturationResult saturate_and_extract(const FinStructure& s, SaturationOptions options) {
  require_game_signature(s);
  SaturationResult result;
  Search search{s, options};
  try {
    if (s.size() == 1) {
      auto done = search.run(net_single(s, 0));
      if (!done) {
        result.status = search.pruned ? SaturationStatus::inconclusive : SaturationStatus::failed;
        result.detail = "no saturated network for the single element";
        return result;
      }
      result.networks.push_back(*done);
    }
    PlayState start = start_game(s, 0);
    for (const Challenge& init : legal_challenges(start)) {
      if (told_apart(result.networks, init.a, init.b)) continue;
      std::optional<Network> found;
      for (const Response& r : responses_for(start, init)) {
        Network n = apply(start.network, s, init, r);
        if (!consistent(n, s)) continue;
        found = search.run(n);
        if (found) break;
      }
      if (!found) {
        result.status = search.pruned ? SaturationStatus::inconclusive : SaturationStatus::failed;
        result.detail = "no saturated network separates " + s.id(init.a) + " and " + s.id(init.b);
        if (search.pruned) result.detail += " within the node cap";
        return result;
      }
      result.networks.push_back(*found);
    }
  } catch (const Inconclusive& e) {
    result.status = SaturationStatus::inconclusive;
    result.detail = e.what();
    return result;
  }

  RepMap rep = extract_representation(s, result.networks);
  auto violations = verify_representation(s, rep);
  if (!violations.empty()) {
    // A saturated consistent union is a representation; reaching this is a bug.
    throw Error("extracted map fails verification: " + describe(violations.front()));
  }
  result.status = SaturationStatus::success;
  result.representation = std::move(rep);
  result.detail = std::to_string(result.networks.size()) + " network(s), base " +
                  std::to_string(result.representation->base);
  return result;
}

}  // namespace relrep
