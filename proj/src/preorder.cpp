#include "relrep/preorder.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "relrep/error.hpp"

namespace relrep {

namespace {

void require_demonic_dr(const FinStructure& s) {
  const Signature& sig = s.signature();
  if (sig.composition != CompositionKind::demonic || !sig.domain || !sig.range)
    throw SignatureError("refinement preorder needs {D,R,*}, got " + sig.describe());
  if (!s.total()) throw Error("structure has undefined table entries");
}

std::size_t witness_count(StepKind kind) {
  switch (kind) {
    case StepKind::base:
      return 2;
    case StepKind::sandwich:
      return 4;
    case StepKind::transitive:
      return 1;
    case StepKind::left:
    case StepKind::right:
      return 3;
  }
  return 0;
}

}  // namespace

std::string to_string(StepKind kind) {
  switch (kind) {
    case StepKind::base:
      return "base";
    case StepKind::sandwich:
      return "sandwich";
    case StepKind::transitive:
      return "transitive";
    case StepKind::left:
      return "left";
    case StepKind::right:
      return "right";
  }
  return "?";
}

std::vector<PrecStep> prec_base(const FinStructure& s) {
  require_demonic_dr(s);
  const auto n = static_cast<Elem>(s.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
  std::vector<PrecStep> out;
  for (Elem u = 0; u < n; ++u) {
    for (Elem v = 0; v < n; ++v) {
      Elem uv = s.compose(u, v);
      if (s.dom(uv) != uv) continue;
      Elem lower = s.rng(s.compose(u, s.dom(v)));
      Elem upper = s.compose(s.compose(lower, v), u);
      std::size_t cell = static_cast<std::size_t>(lower) * n + upper;
      if (seen[cell]) continue;
      seen[cell] = true;
      out.push_back({StepKind::base, lower, upper, {u, v}});
    }
  }
  std::sort(out.begin(), out.end(), [](const PrecStep& a, const PrecStep& b) {
    return std::pair(a.s, a.t) < std::pair(b.s, b.t);
  });
  return out;
}

PrecClosure::PrecClosure(const FinStructure& s, PrecOptions options) : n_(s.size()) {
  require_demonic_dr(s);
  depth_.assign(n_ * n_, 0);
  steps_.assign(n_ * n_, PrecStep{});
  const auto n = static_cast<Elem>(n_);

  std::vector<std::pair<Elem, Elem>> frontier;
  for (auto& step : prec_base(s)) {
    depth_[index(step.s, step.t)] = 1;
    frontier.emplace_back(step.s, step.t);
    steps_[index(step.s, step.t)] = std::move(step);
  }

  std::size_t round = 1;
  while (!frontier.empty()) {
    std::vector<std::pair<Elem, Elem>> next;
    auto offer = [&](Elem a, Elem b, PrecStep step) {
      std::size_t cell = index(a, b);
      if (depth_[cell] != 0) return;
      depth_[cell] = round + 1;
      steps_[cell] = std::move(step);
      next.emplace_back(a, b);
    };
    // Pairs from this round are only visible from the next one.
    auto known = [&](Elem a, Elem b) {
      std::size_t d = depth_[index(a, b)];
      return d != 0 && d <= round;
    };

    for (auto [sp, tp] : frontier) {
      for (Elem u = 0; u < n; ++u) {
        Elem us = s.compose(u, sp);
        Elem ut = s.compose(u, tp);
        for (Elem v = 0; v < n; ++v)
          offer(s.compose(us, v), s.compose(ut, v), {StepKind::sandwich, s.compose(us, v), s.compose(ut, v), {sp, tp, u, v}});
        if (options.one_sided) offer(us, ut, {StepKind::left, us, ut, {sp, tp, u}});
      }
      if (options.one_sided) {
        for (Elem v = 0; v < n; ++v)
          offer(s.compose(sp, v), s.compose(tp, v), {StepKind::right, s.compose(sp, v), s.compose(tp, v), {sp, tp, v}});
      }
      for (Elem c = 0; c < n; ++c) {
        if (known(tp, c)) offer(sp, c, {StepKind::transitive, sp, c, {tp}});
        if (known(c, sp)) offer(c, tp, {StepKind::transitive, c, tp, {sp}});
      }
    }
    // Drop self-offers that were recorded before the pair became visible.
    frontier = std::move(next);
    ++round;
  }
  rounds_ = round - 1;
}

std::vector<std::pair<Elem, Elem>> PrecClosure::pairs() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (std::size_t i = 0; i < depth_.size(); ++i)
    if (depth_[i] != 0) out.emplace_back(static_cast<Elem>(i / n_), static_cast<Elem>(i % n_));
  return out;
}

std::vector<PrecStep> PrecClosure::derivation(Elem s, Elem t) const {
  if (!contains(s, t)) throw Error("pair not in the refinement closure");
  std::vector<PrecStep> out;
  std::vector<bool> emitted(n_ * n_, false);
  std::function<void(Elem, Elem)> visit = [&](Elem a, Elem b) {
    std::size_t cell = index(a, b);
    if (emitted[cell]) return;
    const PrecStep& step = steps_[cell];
    switch (step.kind) {
      case StepKind::base:
        break;
      case StepKind::sandwich:
      case StepKind::left:
      case StepKind::right:
        visit(step.witnesses[0], step.witnesses[1]);
        break;
      case StepKind::transitive:
        visit(a, step.witnesses[0]);
        visit(step.witnesses[0], b);
        break;
    }
    emitted[cell] = true;
    out.push_back(step);
  };
  visit(s, t);
  return out;
}

bool step_equations_hold(const FinStructure& s, const PrecStep& step) {
  const std::size_t n = s.size();
  if (step.witnesses.size() != witness_count(step.kind)) return false;
  if (step.s >= n || step.t >= n) return false;
  for (Elem w : step.witnesses)
    if (w >= n) return false;
  const auto& w = step.witnesses;
  switch (step.kind) {
    case StepKind::base: {
      Elem u = w[0], v = w[1];
      Elem uv = s.compose(u, v);
      return s.dom(uv) == uv && step.s == s.rng(s.compose(u, s.dom(v))) &&
             step.t == s.compose(s.compose(step.s, v), u);
    }
    case StepKind::sandwich:
      return step.s == s.compose(s.compose(w[2], w[0]), w[3]) && step.t == s.compose(s.compose(w[2], w[1]), w[3]);
    case StepKind::left:
      return step.s == s.compose(w[2], w[0]) && step.t == s.compose(w[2], w[1]);
    case StepKind::right:
      return step.s == s.compose(w[0], w[2]) && step.t == s.compose(w[1], w[2]);
    case StepKind::transitive:
      return true;
  }
  return false;
}

std::optional<CycleCertificate> find_prec_cycle(const FinStructure& s, PrecOptions options) {
  PrecClosure closure(s, options);
  const auto n = static_cast<Elem>(s.size());

  // Tarjan over the digraph of distinct comparable pairs.
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Elem> stack;
  std::vector<std::vector<Elem>> components;
  int counter = 0;
  std::function<void(Elem)> connect = [&](Elem v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (Elem w = 0; w < n; ++w) {
      if (w == v || !closure.contains(v, w)) continue;
      if (index[w] < 0) {
        connect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<Elem> component;
      Elem w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component.push_back(w);
      } while (w != v);
      if (component.size() >= 2) {
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
    }
  };
  for (Elem v = 0; v < n; ++v)
    if (index[v] < 0) connect(v);
  if (components.empty()) return std::nullopt;

  auto best = std::min_element(components.begin(), components.end());
  CycleCertificate cert;
  cert.cycle = *best;
  const std::size_t k = cert.cycle.size();
  for (std::size_t i = 0; i < k; ++i) {
    Elem from = cert.cycle[i], to = cert.cycle[(i + 1) % k];
    // Within a component every ordered pair is related: the closure is transitive.
    cert.derivations.push_back(closure.derivation(from, to));
  }
  return cert;
}

bool replay_certificate(const FinStructure& s, const CycleCertificate& c) {
  const std::size_t n = s.size();
  const std::size_t k = c.cycle.size();
  if (k < 2 || c.derivations.size() != k) return false;
  std::vector<bool> used(n, false);
  for (Elem e : c.cycle) {
    if (e >= n || used[e]) return false;
    used[e] = true;
  }
  try {
    require_demonic_dr(s);
  } catch (const Error&) {
    return false;
  }
  for (std::size_t i = 0; i < k; ++i) {
    const auto& chain = c.derivations[i];
    if (chain.empty()) return false;
    std::vector<std::pair<Elem, Elem>> proven;
    auto has = [&](Elem a, Elem b) { return std::find(proven.begin(), proven.end(), std::pair(a, b)) != proven.end(); };
    for (const PrecStep& step : chain) {
      if (!step_equations_hold(s, step)) return false;
      switch (step.kind) {
        case StepKind::base:
          break;
        case StepKind::sandwich:
        case StepKind::left:
        case StepKind::right:
          if (!has(step.witnesses[0], step.witnesses[1])) return false;
          break;
        case StepKind::transitive:
          if (!has(step.s, step.witnesses[0]) || !has(step.witnesses[0], step.t)) return false;
          break;
      }
      proven.emplace_back(step.s, step.t);
    }
    const PrecStep& last = chain.back();
    if (last.s != c.cycle[i] || last.t != c.cycle[(i + 1) % k]) return false;
  }
  return true;
}

nlohmann::ordered_json certificate_to_json(const FinStructure& s, const CycleCertificate& c) {
  nlohmann::ordered_json j;
  j["structure"] = s.name();
  j["cycle"] = nlohmann::ordered_json::array();
  for (Elem e : c.cycle) j["cycle"].push_back(s.id(e));
  j["derivations"] = nlohmann::ordered_json::array();
  for (const auto& chain : c.derivations) {
    auto steps = nlohmann::ordered_json::array();
    for (const PrecStep& step : chain) {
      nlohmann::ordered_json js;
      js["kind"] = to_string(step.kind);
      js["s"] = s.id(step.s);
      js["t"] = s.id(step.t);
      const auto& w = step.witnesses;
      switch (step.kind) {
        case StepKind::base:
          js["u"] = s.id(w[0]);
          js["v"] = s.id(w[1]);
          break;
        case StepKind::sandwich:
          js["s_prime"] = s.id(w[0]);
          js["t_prime"] = s.id(w[1]);
          js["u"] = s.id(w[2]);
          js["v"] = s.id(w[3]);
          break;
        case StepKind::left:
          js["s_prime"] = s.id(w[0]);
          js["t_prime"] = s.id(w[1]);
          js["u"] = s.id(w[2]);
          break;
        case StepKind::right:
          js["s_prime"] = s.id(w[0]);
          js["t_prime"] = s.id(w[1]);
          js["v"] = s.id(w[2]);
          break;
        case StepKind::transitive:
          js["v"] = s.id(w[0]);
          break;
      }
      steps.push_back(std::move(js));
    }
    j["derivations"].push_back(std::move(steps));
  }
  return j;
}

CycleCertificate certificate_from_json(const FinStructure& s, const nlohmann::json& j) {
  try {
    CycleCertificate c;
    for (const auto& id : j.at("cycle")) c.cycle.push_back(s.at(id.get<std::string>()));
    for (const auto& chain : j.at("derivations")) {
      std::vector<PrecStep> steps;
      for (const auto& js : chain) {
        PrecStep step;
        const auto kind = js.at("kind").get<std::string>();
        step.s = s.at(js.at("s").get<std::string>());
        step.t = s.at(js.at("t").get<std::string>());
        auto w = [&](const char* key) { return s.at(js.at(key).get<std::string>()); };
        if (kind == "base") {
          step.kind = StepKind::base;
          step.witnesses = {w("u"), w("v")};
        } else if (kind == "sandwich") {
          step.kind = StepKind::sandwich;
          step.witnesses = {w("s_prime"), w("t_prime"), w("u"), w("v")};
        } else if (kind == "left") {
          step.kind = StepKind::left;
          step.witnesses = {w("s_prime"), w("t_prime"), w("u")};
        } else if (kind == "right") {
          step.kind = StepKind::right;
          step.witnesses = {w("s_prime"), w("t_prime"), w("v")};
        } else if (kind == "transitive") {
          step.kind = StepKind::transitive;
          step.witnesses = {w("v")};
        } else {
          throw Error("unknown step kind '" + kind + "'");
        }
        steps.push_back(std::move(step));
      }
      c.derivations.push_back(std::move(steps));
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed certificate: ") + e.what());
  }
}

std::vector<std::pair<Elem, Elem>> triangle_closure(const FinStructure& s, TriangleVariant variant) {
  const Signature& sig = s.signature();
  const CompositionKind want =
      variant == TriangleVariant::angelic ? CompositionKind::angelic : CompositionKind::demonic;
  if (sig.composition != want || !sig.domain)
    throw SignatureError("triangle closure (" + to_string(want) + ") needs D and " + to_string(want) +
                         " composition, got " + sig.describe());
  if (!s.total()) throw Error("structure has undefined table entries");

  const auto n = static_cast<Elem>(s.size());
  std::vector<bool> in(static_cast<std::size_t>(n) * n, false);
  std::deque<std::pair<Elem, Elem>> work;
  auto add = [&](Elem a, Elem b) {
    std::size_t cell = static_cast<std::size_t>(a) * n + b;
    if (in[cell]) return;
    in[cell] = true;
    work.emplace_back(a, b);
  };
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (variant == TriangleVariant::angelic) {
        add(s.compose(s.dom(x), s.dom(y)), s.dom(y));
      } else {
        add(s.compose(s.dom(x), y), y);
      }
    }
  }
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    for (Elem u = 0; u < n; ++u) {
      add(s.compose(u, a), s.compose(u, b));
      add(s.compose(a, u), s.compose(b, u));
    }
    for (Elem c = 0; c < n; ++c) {
      if (in[static_cast<std::size_t>(b) * n + c]) add(a, c);
      if (in[static_cast<std::size_t>(c) * n + a]) add(c, b);
    }
  }
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (in[static_cast<std::size_t>(a) * n + b]) out.emplace_back(a, b);
  return out;
}

}  // namespace relrep
