#include <algorithm>

#include "relrep/error.hpp"
#include "relrep/family.hpp"

namespace relrep {

namespace {

constexpr std::size_t kPerIndexCount = 12;

}  // namespace

std::optional<SnElement> sn_decode(const FinStructure& s, Elem e) {
  if (e < 3 || e >= s.size()) return std::nullopt;
  return SnElement{static_cast<SnKind>((e - 3) % kPerIndexCount), (e - 3) / kPerIndexCount};
}

namespace {

Elem sn_elem(SnKind kind, std::size_t i, std::size_t N) {
  return static_cast<Elem>(3 + (i % N) * kPerIndexCount + static_cast<std::size_t>(kind));
}

}  // namespace

Network sn_shadow(const Network& n, const FinStructure& s) {
  const std::size_t N = (s.size() - 3) / kPerIndexCount;
  const Elem zero = 0;
  Network out = n;
  const auto k = static_cast<Node>(n.node_count());
  bool changed = true;
  auto add = [&](Node x, Node y, Elem a) {
    if (out.top(x, y, a)) return;
    out.put_top(x, y, a);
    changed = true;
  };
  while (changed) {
    changed = false;
    for (Node x = 0; x < k; ++x) {
      for (Node y = 0; y < k; ++y) {
        for (Elem a : out.top_labels(x, y)) {
          if (auto d = sn_decode(s, a)) {
            if (d->kind == SnKind::a) add(x, y, sn_elem(SnKind::acd, d->index, N));
            if (d->kind == SnKind::m) add(x, y, sn_elem(SnKind::cd, d->index, N));
            if (d->kind == SnKind::b) add(x, y, sn_elem(SnKind::cdb, d->index, N));
          }
          add(x, x, s.dom(a));
          add(y, y, s.rng(a));
          for (Node z = 0; z < k; ++z) {
            for (Elem b : out.top_labels(y, z)) {
              Elem c = s.compose(a, b);
              if (c != zero) add(x, z, c);
            }
          }
        }
      }
    }
  }
  return out;
}

std::optional<Node> sn_partner(const Network& n, const FinStructure& s, Node x, std::size_t i) {
  const std::size_t N = (s.size() - 3) / kPerIndexCount;
  const Elem c = sn_elem(SnKind::c, i, N), d = sn_elem(SnKind::d, i, N);
  const auto k = static_cast<Node>(n.node_count());
  for (Node y = 0; y < k; ++y)
    if (n.top(x, y, c) || n.top(y, x, d)) return y;
  return std::nullopt;
}

std::optional<std::string> sn_invariant_violation(const Network& n, const FinStructure& s) {
  const std::size_t N = (s.size() - 3) / kPerIndexCount;
  const Network sh = sn_shadow(n, s);
  const auto k = static_cast<Node>(sh.node_count());
  for (Node x = 0; x < k; ++x) {
    for (Node y = 0; y < k; ++y) {
      if (sh.top(x, y, 0)) return "0 on edge (" + std::to_string(x) + "," + std::to_string(y) + ")";
      for (Elem a : sh.top_labels(x, y)) {
        auto d = sn_decode(s, a);
        if (!d) continue;
        auto need = [&](SnKind companion) {
          return sh.top(x, y, sn_elem(companion, d->index, N));
        };
        if ((d->kind == SnKind::a && !need(SnKind::acd)) || (d->kind == SnKind::m && !need(SnKind::cd)) ||
            (d->kind == SnKind::b && !need(SnKind::cdb)))
          return "missing companion of " + s.id(a);
      }
    }
  }
  for (std::size_t i = 0; i < N; ++i) {
    const Elem m = sn_elem(SnKind::m, i, N), c = sn_elem(SnKind::c, i, N), d = sn_elem(SnKind::d, i, N);
    const Elem cd = sn_elem(SnKind::cd, i, N);
    std::vector<std::optional<Node>> partner(k);
    for (Node x = 0; x < k; ++x) {
      if (!sh.top(x, x, m)) continue;
      std::vector<Node> ys;
      for (Node y = 0; y < k; ++y)
        if (sh.top(x, y, c) || sh.top(y, x, d)) ys.push_back(y);
      if (ys.size() > 1) return "node " + std::to_string(x) + " has two partners for index " + std::to_string(i);
      if (!ys.empty()) partner[x] = ys.front();
    }
    for (Node x = 0; x < k; ++x)
      for (Node y = 0; y < k; ++y)
        if (x != y && sh.top(x, y, cd) && partner[x] && partner[y] && partner[x] != partner[y])
          return "cd_" + std::to_string(i) + " joins nodes with different partners";
  }
  return std::nullopt;
}

namespace {

class SnStrategy : public ExistsStrategy {
 public:
  SnStrategy(std::size_t n, const FinStructure& s) : n_(n), N_(2 * n + 1), s_(s) {}

  std::optional<Response> respond(const PlayState& state, const Challenge& ch) override {
    if (state.structure != &s_ && !(*state.structure == s_)) throw Error("strategy used on a different structure");
    if (ch.a >= s_.size() || ch.b >= s_.size()) throw Error("challenge outside " + s_.name());

    const Network& net = state.network;
    std::vector<Response> preferred = preferences(net, ch);
    std::optional<Network> before;
    if (ch.kind != ChallengeKind::init) before = sn_shadow(net, s_);
    for (const Response& r : preferred) {
      Network next = apply(net, s_, ch, r);
      if (!consistent(next, s_)) continue;
      Network shadow = sn_shadow(next, s_);
      if (!consistent(shadow, s_)) continue;
      if (sn_invariant_violation(next, s_)) continue;
      if (before && !bounded_growth(*before, shadow, net, next)) continue;
      return r;
    }
    for (const Response& r : responses_for(state, ch))
      if (consistent(apply(net, s_, ch, r), s_)) return r;
    return std::nullopt;
  }

 private:
  Elem at(SnKind kind, std::size_t i) const { return sn_elem(kind, i, N_); }

  // On every old pair the move did not label directly, the shadow only gains
  // ab_{i+1} next to an ab_i. Read literally for every pair, the bound would
  // also forbid routing c_i/d_i through an existing partner.
  bool bounded_growth(const Network& before, const Network& after, const Network& net, const Network& next) const {
    const auto k = static_cast<Node>(before.node_count());
    for (Node x = 0; x < k; ++x) {
      for (Node y = 0; y < k; ++y) {
        if (next.top_labels(x, y) != net.top_labels(x, y)) continue;
        for (Elem a : after.top_labels(x, y)) {
          if (before.top(x, y, a)) continue;
          auto d = sn_decode(s_, a);
          if (!d || d->kind != SnKind::ab) return false;
          if (!before.top(x, y, at(SnKind::ab, d->index + N_ - 1))) return false;
        }
      }
    }
    return true;
  }

  // Which element of an init pair goes on top, per the forced choices.
  Elem init_top(Elem a, Elem b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    auto da = sn_decode(s_, a), db = sn_decode(s_, b);
    if (da && db && da->index == db->index) {
      auto forced = [&](SnKind lo, SnKind hi) -> std::optional<Elem> {
        if (da->kind == lo && db->kind == hi) return b;
        if (da->kind == hi && db->kind == lo) return a;
        return std::nullopt;
      };
      for (auto [lo, hi] : {std::pair(SnKind::a, SnKind::acd), std::pair(SnKind::m, SnKind::cd),
                            std::pair(SnKind::b, SnKind::cdb)})
        if (auto t = forced(lo, hi)) return *t;
    }
    if (da && db && da->kind == SnKind::ab && db->kind == SnKind::ab) {
      // ab_i can reach ab_j only by stepping forward; keep the far one in ⊥.
      std::size_t forward = (db->index + N_ - da->index) % N_;
      return forward >= n_ + 1 ? a : b;
    }
    return a;
  }

  std::vector<Response> preferences(const Network& net, const Challenge& ch) const {
    std::vector<Response> out;
    auto push = [&](Response r) {
      r.kind = ch.kind;
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    };
    auto node = [&](Node v) {
      Response r;
      r.node = v;
      push(r);
    };
    auto bottom = [&](Node v) {
      Response r;
      r.add_composition = false;
      r.node = v;
      push(r);
    };
    const auto k = static_cast<Node>(net.node_count());
    const Node fresh = net.fresh();
    switch (ch.kind) {
      case ChallengeKind::init: {
        Elem top = init_top(ch.a, ch.b);
        bool ref = s_.is_domain_range_element(top);
        Response r;
        r.init = top == ch.a ? (ref ? InitChoice::ref_ab : InitChoice::nref_ab)
                             : (ref ? InitChoice::ref_ba : InitChoice::nref_ba);
        push(r);
        Elem other = top == ch.a ? ch.b : ch.a;
        bool other_ref = s_.is_domain_range_element(other);
        r.init = other == ch.a ? (other_ref ? InitChoice::ref_ab : InitChoice::nref_ab)
                               : (other_ref ? InitChoice::ref_ba : InitChoice::nref_ba);
        push(r);
        break;
      }
      case ChallengeKind::witness: {
        if (auto d = sn_decode(s_, ch.a); d && d->kind == SnKind::c)
          if (auto y = sn_partner(net, s_, ch.x, d->index)) node(*y);
        if (auto d = sn_decode(s_, ch.b); d && d->kind == SnKind::d)
          if (auto y = sn_partner(net, s_, ch.z, d->index)) node(*y);
        for (Node y = 0; y < k; ++y)
          if (net.top(ch.x, y, ch.a) && net.top(y, ch.z, ch.b)) node(y);
        if (s_.is_domain_range_element(ch.a)) node(ch.x);
        if (s_.is_domain_range_element(ch.b)) node(ch.z);
        node(fresh);
        break;
      }
      case ChallengeKind::composition: {
        const bool nonzero = s_.compose(ch.a, ch.b) != 0;
        if (nonzero) push(Response{});
        bottom(fresh);
        for (Node w = 0; w < k; ++w) bottom(w);
        if (!nonzero) push(Response{});
        break;
      }
      case ChallengeKind::domain: {
        if (auto d = sn_decode(s_, ch.a); d && d->kind == SnKind::c)
          if (auto y = sn_partner(net, s_, ch.x, d->index)) node(*y);
        for (Node y = 0; y < k; ++y)
          if (net.top(ch.x, y, ch.a)) node(y);
        if (s_.is_domain_range_element(ch.a)) node(ch.x);
        node(fresh);
        break;
      }
      case ChallengeKind::range: {
        if (auto d = sn_decode(s_, ch.a); d && d->kind == SnKind::d)
          if (auto x = sn_partner(net, s_, ch.y, d->index)) node(*x);
        for (Node x = 0; x < k; ++x)
          if (net.top(x, ch.y, ch.a)) node(x);
        if (s_.is_domain_range_element(ch.a)) node(ch.y);
        node(fresh);
        break;
      }
      case ChallengeKind::composition_domain:
      case ChallengeKind::domain_range:
        push(Response{});
        break;
    }
    return out;
  }

  std::size_t n_;
  std::size_t N_;
  const FinStructure& s_;
};

}  // namespace

std::unique_ptr<ExistsStrategy> sn_strategy(std::size_t n, const FinStructure& s) {
  FinStructure expected = gen_sn(n);
  if (s.ids() != expected.ids()) throw Error("strategy for S_" + std::to_string(n) + " used on " + s.name());
  return std::make_unique<SnStrategy>(n, s);
}

}  // namespace relrep
