#include "relrep/repbuild.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "relrep/validate.hpp"

namespace relrep {

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::string out;
  for (std::size_t i = 0; i < violations.size() && i < 3; ++i) out += (i ? "; " : "") + describe(violations[i]);
  if (violations.size() > 3) out += "; ... (" + std::to_string(violations.size()) + " in total)";
  return out;
}

void require_total(const FinStructure& s) {
  if (!s.total()) throw Error("structure has undefined table entries");
}

void require_associative(const FinStructure& s, const std::string& builder) {
  auto bad = check_equation(s, Law::associativity, 1);
  if (!bad.empty()) {
    const auto& t = bad.front();
    throw Error(builder + ": composition not associative at (" + s.id(t[0]) + ", " + s.id(t[1]) + ", " +
                s.id(t[2]) + ")");
  }
}

RepMap checked(const FinStructure& s, RepMap rep, const std::string& builder) {
  auto violations = verify_representation(s, rep);
  if (!violations.empty()) throw RepresentationFailure(builder, std::move(violations));
  return rep;
}

}  // namespace

RepresentationFailure::RepresentationFailure(const std::string& builder, std::vector<Violation> violations)
    : Error(builder + " map fails verification: " + summarize(violations)), violations_(std::move(violations)) {}

RepMap cayley_rep(const FinStructure& s) {
  const Signature& sig = s.signature();
  if (!sig.has_composition() || sig.domain || sig.range || sig.converse || sig.order || sig.zero || sig.one)
    throw SignatureError("cayley: signature must be composition with at most the identity constant, got " +
                         sig.describe());
  require_total(s);
  require_associative(s, "cayley");
  const auto n = static_cast<Elem>(s.size());

  std::optional<Elem> unit = s.constant(Constant::identity);
  if (!unit) {
    for (Elem u = 0; u < n && !unit; ++u) {
      bool two_sided = true;
      for (Elem a = 0; a < n && two_sided; ++a) two_sided = s.compose(u, a) == a && s.compose(a, u) == a;
      if (two_sided) unit = u;
    }
  }
  // Point k stands for element k; point n (if present) is the adjoined unit.
  const std::size_t base = unit ? n : n + 1;
  RepMap rep{base, {}};
  for (Elem a = 0; a < n; ++a) {
    Rel r(base);
    for (Elem x = 0; x < n; ++x) r.insert(x, s.compose(x, a));
    if (!unit) r.insert(n, a);
    rep.assignment.push_back(std::move(r));
  }
  return checked(s, std::move(rep), "cayley");
}

RepMap zareckii_rep(const FinStructure& s) {
  const Signature& sig = s.signature();
  if (sig.composition != CompositionKind::angelic || !sig.order || sig.domain || sig.range || sig.converse ||
      sig.zero || sig.one || sig.identity)
    throw SignatureError("zareckii: signature must be {<=, ;}, got " + sig.describe());
  require_total(s);
  ValidationReport report = validate_structure(s);
  for (const Finding& f : report.findings)
    if (f.status == Severity::error) throw Error("zareckii: " + f.law + ": " + f.message);
  const auto n = static_cast<Elem>(s.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (a == b || !s.leq(a, b)) continue;
      for (Elem c = 0; c < n; ++c) {
        if (!s.leq(s.compose(c, a), s.compose(c, b)) || !s.leq(s.compose(a, c), s.compose(b, c)))
          throw Error("zareckii: composition not monotone: " + s.id(a) + " <= " + s.id(b) + " but not with " +
                      s.id(c));
      }
    }
  }
  require_associative(s, "zareckii");

  const std::size_t base = n + 1;
  const Elem e = n;
  RepMap rep{base, {}};
  for (Elem a = 0; a < n; ++a) {
    Rel r(base);
    for (Elem x = 0; x <= n; ++x) {
      const Elem xa = x == e ? a : s.compose(x, a);
      for (Elem t = 0; t < n; ++t)
        if (s.leq(t, xa)) r.insert(x, t);
    }
    rep.assignment.push_back(std::move(r));
  }
  return checked(s, std::move(rep), "zareckii");
}

namespace {

void require_closed_set_signature(const FinStructure& s) {
  const Signature& sig = s.signature();
  if (!sig.has_composition() || !sig.domain || !sig.range || !sig.converse)
    throw SignatureError("closed sets need D, R, converse and composition, got " + sig.describe());
  require_total(s);
  const auto n = static_cast<Elem>(s.size());
  std::vector<Elem> dr;
  for (Elem e = 0; e < n; ++e)
    if (s.is_domain_range_element(e)) dr.push_back(e);
  for (Elem x : dr)
    for (Elem y : dr)
      if (s.compose(x, y) != s.compose(y, x))
        throw Error("closed sets: domain elements " + s.id(x) + " and " + s.id(y) + " do not commute");
}

std::optional<Elem> declared_zero(const FinStructure& s) { return s.constant(Constant::zero); }

}  // namespace

std::vector<Elem> closed_set_closure(const FinStructure& s, const std::vector<Elem>& members) {
  if (members.empty()) return {};
  std::vector<Elem> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  Elem d = s.dom(sorted.front()), r = s.rng(sorted.front());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    d = s.compose(d, s.dom(sorted[i]));
    r = s.compose(r, s.rng(sorted[i]));
  }
  const auto n = static_cast<Elem>(s.size());
  std::vector<bool> in(n, false);
  for (Elem a : sorted) {
    Elem p = s.compose(s.compose(d, a), r);
    for (Elem t = 0; t < n; ++t)
      if (s.leq(p, t)) in[t] = true;
  }
  std::vector<Elem> out;
  for (Elem t = 0; t < n; ++t)
    if (in[t]) out.push_back(t);
  return out;
}

std::vector<std::vector<Elem>> closed_sets(const FinStructure& s, ClosedSetOptions options) {
  require_closed_set_signature(s);
  const auto n = static_cast<Elem>(s.size());
  const auto zero = declared_zero(s);

  // Enumerate upsets of the zero-free part by deciding elements in order,
  // propagating up (when in) and down (when out).
  std::vector<int> state(n, -1);  // -1 undecided, 0 out, 1 in
  if (zero) state[*zero] = 0;
  std::vector<std::vector<Elem>> out;
  std::size_t examined = 0;

  std::function<void(Elem)> walk = [&](Elem i) {
    while (i < n && state[i] != -1) ++i;
    if (i == n) {
      std::vector<Elem> members;
      for (Elem e = 0; e < n; ++e)
        if (state[e] == 1) members.push_back(e);
      if (members.empty()) return;
      if (++examined > options.max_upsets)
        throw Inconclusive("closed sets: more than " + std::to_string(options.max_upsets) + " upsets");
      if (closed_set_closure(s, members) == members) {
        if (out.size() == options.max_sets)
          throw Inconclusive("closed sets: more than " + std::to_string(options.max_sets) + " closed sets");
        out.push_back(std::move(members));
      }
      return;
    }
    for (int choice : {1, 0}) {
      std::vector<int> saved = state;
      bool ok = true;
      for (Elem t = 0; t < n && ok; ++t) {
        bool related = choice == 1 ? s.leq(i, t) : s.leq(t, i);
        if (!related) continue;
        if (state[t] == 1 - choice) ok = false;
        state[t] = choice;
      }
      if (ok) walk(i + 1);
      state = std::move(saved);
    }
  };
  walk(0);
  std::sort(out.begin(), out.end());
  return out;
}

RepMap closed_set_map(const FinStructure& s, const std::vector<std::vector<Elem>>& sets) {
  const auto n = static_cast<Elem>(s.size());
  const std::size_t base = std::max<std::size_t>(sets.size(), 1);
  std::vector<std::vector<bool>> member(sets.size(), std::vector<bool>(n, false));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (Elem e : sets[i]) member[i][e] = true;

  RepMap rep{base, {}};
  for (Elem a = 0; a < n; ++a) {
    const Elem ca = s.conv(a);
    Rel r(base);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = 0; j < sets.size(); ++j) {
        bool forward = std::all_of(sets[i].begin(), sets[i].end(), [&](Elem x) { return member[j][s.compose(x, a)]; });
        if (!forward) continue;
        bool back = std::all_of(sets[j].begin(), sets[j].end(), [&](Elem y) { return member[i][s.compose(y, ca)]; });
        if (back) r.insert(i, j);
      }
    }
    rep.assignment.push_back(std::move(r));
  }
  return rep;
}

RepMap closed_set_rep(const FinStructure& s, ClosedSetOptions options) {
  auto sets = closed_sets(s, options);
  if (sets.empty()) throw Error("closed sets: none found");
  return checked(s, closed_set_map(s, sets), "closed-set");
}

namespace {

// Backtracking state for one base size.
class Oracle {
 public:
  Oracle(const FinStructure& s, std::size_t base, std::size_t& steps, std::size_t cap)
      : s_(s), base_(base), steps_(steps), cap_(cap), value_(s.size()) {
    const auto n = static_cast<Elem>(s.size());
    for (Elem a = 0; a < n; ++a) {
      std::vector<Rel> options;
      const bool partial_identity =
          s.is_domain_range_element(a) || (s.constant(Constant::identity) == a) || (s.constant(Constant::zero) == a);
      if (s.constant(Constant::zero) == a) {
        options.push_back(Rel(base));
      } else if (partial_identity) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << base); ++mask) {
          Rel r(base);
          for (std::size_t x = 0; x < base; ++x)
            if ((mask >> x) & 1U) r.insert(x, x);
          options.push_back(std::move(r));
        }
      } else if (s.constant(Constant::one) == a) {
        options = all_relations(base);
        std::erase_if(options, [](const Rel& r) { return !is_equivalence_on_field(r); });
      } else {
        options = all_relations(base);
      }
      options_.push_back(std::move(options));
    }
  }

  std::optional<RepMap> run() {
    if (!search()) return std::nullopt;
    RepMap rep{base_, {}};
    for (auto& v : value_) rep.assignment.push_back(*v);
    return rep;
  }

 private:
  static bool is_equivalence_on_field(const Rel& r) {
    const std::size_t b = r.base();
    for (std::size_t x = 0; x < b; ++x)
      for (std::size_t y = 0; y < b; ++y)
        if (r.contains(x, y) && (!r.contains(y, x) || !r.contains(x, x))) return false;
    return compose_angelic(r, r).subset_of(r);
  }

  // Fixes element e to r, or checks agreement when already fixed.
  bool fix(Elem e, const Rel& r, std::vector<Elem>& trail, std::vector<Elem>& queue) {
    if (value_[e]) return *value_[e] == r;
    if (std::find_if(options_[e].begin(), options_[e].end(), [&](const Rel& o) { return o == r; }) == options_[e].end())
      return false;
    for (Elem f = 0; f < value_.size(); ++f)
      if (value_[f] && *value_[f] == r) return false;  // faithfulness
    value_[e] = r;
    trail.push_back(e);
    queue.push_back(e);
    return true;
  }

  bool propagate(std::vector<Elem>& trail, std::vector<Elem> queue) {
    const Signature& sig = s_.signature();
    const auto n = static_cast<Elem>(s_.size());
    while (!queue.empty()) {
      Elem a = queue.back();
      queue.pop_back();
      const Rel& ra = *value_[a];
      if (sig.domain && !fix(s_.dom(a), dom(ra), trail, queue)) return false;
      if (sig.range && !fix(s_.rng(a), rng(ra), trail, queue)) return false;
      if (sig.converse && !fix(s_.conv(a), converse(ra), trail, queue)) return false;
      if (sig.has_composition()) {
        for (Elem b = 0; b < n; ++b) {
          if (!value_[b]) continue;
          Rel ab = compose(sig.composition, *value_[a], *value_[b]);
          if (!fix(s_.compose(a, b), ab, trail, queue)) return false;
          if (b != a) {
            Rel ba = compose(sig.composition, *value_[b], *value_[a]);
            if (!fix(s_.compose(b, a), ba, trail, queue)) return false;
          }
        }
      }
      if (sig.order) {
        for (Elem b = 0; b < n; ++b) {
          if (!value_[b]) continue;
          if (s_.leq(a, b) != value_[a]->subset_of(*value_[b])) return false;
          if (s_.leq(b, a) != value_[b]->subset_of(*value_[a])) return false;
        }
      }
    }
    return true;
  }

  bool search() {
    const auto n = static_cast<Elem>(s_.size());
    Elem next = n;
    for (Elem e = 0; e < n; ++e) {
      if (!value_[e]) {
        next = e;
        break;
      }
    }
    if (next == n) {
      RepMap rep{base_, {}};
      for (auto& v : value_) rep.assignment.push_back(*v);
      return verify_representation(s_, rep).empty();
    }
    for (const Rel& r : options_[next]) {
      if (++steps_ > cap_) throw Inconclusive("oracle step cap of " + std::to_string(cap_) + " reached");
      std::vector<Elem> trail, queue;
      bool ok = fix(next, r, trail, queue) && propagate(trail, queue);
      if (ok && search()) return true;
      for (Elem e : trail) value_[e].reset();
    }
    return false;
  }

  const FinStructure& s_;
  std::size_t base_;
  std::size_t& steps_;
  std::size_t cap_;
  std::vector<std::optional<Rel>> value_;
  std::vector<std::vector<Rel>> options_;
};

}  // namespace

OracleResult brute_force_search(const FinStructure& s, OracleOptions options) {
  require_total(s);
  if (options.max_base > 4) throw Error("oracle: bases above 4 are out of reach for exhaustive search");
  OracleResult result;
  std::size_t steps = 0;
  for (std::size_t base = 1; base <= options.max_base; ++base) {
    Oracle oracle(s, base, steps, options.step_cap);
    if (auto rep = oracle.run()) {
      result.representation = std::move(rep);
      return result;
    }
    result.searched_up_to = base;
  }
  return result;
}

nlohmann::ordered_json repmap_to_json(const FinStructure& s, const RepMap& rep) {
  nlohmann::ordered_json j;
  j["base"] = rep.base;
  j["assignment"] = nlohmann::ordered_json::object();
  for (Elem e = 0; e < rep.assignment.size(); ++e) {
    auto pairs = nlohmann::ordered_json::array();
    for (auto [x, y] : rep.assignment[e].pairs()) pairs.push_back({x, y});
    j["assignment"][s.id(e)] = std::move(pairs);
  }
  return j;
}

RepMap repmap_from_json(const FinStructure& s, const nlohmann::json& j) {
  try {
    RepMap rep;
    rep.base = j.at("base").get<std::size_t>();
    if (rep.base == 0) throw Error("representation base must be positive");
    const auto& assignment = j.at("assignment");
    for (Elem e = 0; e < s.size(); ++e) {
      if (!assignment.contains(s.id(e))) throw Error("representation has no relation for " + s.id(e));
      Rel r(rep.base);
      for (const auto& p : assignment.at(s.id(e))) {
        auto x = p.at(0).get<std::size_t>(), y = p.at(1).get<std::size_t>();
        if (x >= rep.base || y >= rep.base) throw Error("pair outside the base in " + s.id(e));
        r.insert(x, y);
      }
      rep.assignment.push_back(std::move(r));
    }
    for (const auto& [key, value] : assignment.items()) (void)s.at(key);
    return rep;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed representation: ") + e.what());
  }
}

std::string repmap_to_dot(const FinStructure& s, const RepMap& rep, std::optional<Elem> only) {
  std::ostringstream out;
  out << "digraph \"" << s.name() << (only ? "_" + s.id(*only) : std::string()) << "\" {\n";
  for (std::size_t x = 0; x < rep.base; ++x) out << "  p" << x << " [label=\"" << x << "\"];\n";
  for (std::size_t x = 0; x < rep.base; ++x) {
    for (std::size_t y = 0; y < rep.base; ++y) {
      std::string label;
      for (Elem e = 0; e < rep.assignment.size(); ++e) {
        if (only && e != *only) continue;
        if (!rep.assignment[e].contains(x, y)) continue;
        if (!label.empty()) label += ",";
        label += s.id(e);
      }
      if (!label.empty()) out << "  p" << x << " -> p" << y << " [label=\"" << label << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace relrep
