#include "relrep/representation.hpp"

#include <unordered_map>

namespace relrep {

namespace {

constexpr std::size_t kMaxViolations = 1000;

bool is_equivalence_on_field(const Rel& r) {
  const std::size_t n = r.base();
  std::vector<bool> field(n, false);
  for (auto [x, y] : r.pairs()) field[x] = field[y] = true;
  for (std::size_t x = 0; x < n; ++x)
    if (field[x] && !r.contains(x, x)) return false;
  for (auto [x, y] : r.pairs())
    if (!r.contains(y, x)) return false;
  return compose_angelic(r, r).subset_of(r);
}

}  // namespace

std::string describe(const Violation& v) {
  std::string out = v.clause;
  if (!v.elements.empty()) {
    out += " [";
    for (std::size_t i = 0; i < v.elements.size(); ++i) out += (i ? " " : "") + v.elements[i];
    out += "]";
  }
  if (!v.detail.empty()) out += ": " + v.detail;
  return out;
}

std::vector<Violation> verify_representation(const FinStructure& s, const RepMap& rep) {
  std::vector<Violation> out;
  auto add = [&](std::string clause, std::vector<Elem> where, std::string detail) {
    if (out.size() >= kMaxViolations) return;
    Violation v{std::move(clause), {}, std::move(detail)};
    for (Elem e : where) v.elements.push_back(s.id(e));
    out.push_back(std::move(v));
  };

  const std::size_t n = s.size();
  if (rep.assignment.size() != n) {
    out.push_back({"shape", {}, "assignment has " + std::to_string(rep.assignment.size()) + " entries for " +
                                    std::to_string(n) + " elements"});
    return out;
  }
  for (Elem a = 0; a < n; ++a) {
    if (rep[a].base() != rep.base) {
      add("shape", {a}, "relation over base " + std::to_string(rep[a].base()));
      return out;
    }
  }
  if (!s.total()) {
    out.push_back({"shape", {}, "structure has undefined table entries"});
    return out;
  }

  std::unordered_map<Rel, Elem, RelHash> seen;
  for (Elem a = 0; a < n; ++a) {
    auto [it, fresh] = seen.emplace(rep[a], a);
    if (!fresh) add("faithful", {it->second, a}, "distinct elements share relation " + rep[a].to_string());
  }

  const Signature& sig = s.signature();
  for (Elem a = 0; a < n; ++a) {
    if (sig.domain && dom(rep[a]) != rep[s.dom(a)]) add("domain", {a}, "D(a) is not interpreted as dom");
    if (sig.range && rng(rep[a]) != rep[s.rng(a)]) add("range", {a}, "R(a) is not interpreted as rng");
    if (sig.converse && converse(rep[a]) != rep[s.conv(a)]) add("converse", {a}, "converse mismatch");
  }
  if (sig.has_composition()) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (compose(sig.composition, rep[a], rep[b]) != rep[s.compose(a, b)])
          add("compose", {a, b}, "composition mismatch");
  }
  if (sig.order) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (s.leq(a, b) != rep[a].subset_of(rep[b]))
          add("order", {a, b}, s.leq(a, b) ? "a <= b but not included" : "included but not a <= b");
  }
  if (auto z = s.constant(Constant::zero); z && !rep[*z].empty()) add("zero", {*z}, "zero is not empty");
  if (auto i = s.constant(Constant::identity)) {
    const Rel& iota = rep[*i];
    if (!iota.subset_of(Rel::identity(rep.base))) add("identity", {*i}, "not a partial identity");
    for (Elem a = 0; a < n; ++a)
      if (compose_angelic(iota, rep[a]) != rep[a] || compose_angelic(rep[a], iota) != rep[a])
        add("identity", {*i, a}, "not a two-sided unit");
  }
  if (auto o = s.constant(Constant::one)) {
    const Rel& top = rep[*o];
    if (!is_equivalence_on_field(top)) add("one", {*o}, "not an equivalence on its field");
    for (Elem a = 0; a < n; ++a)
      if (!rep[a].subset_of(top)) add("one", {*o, a}, "does not contain element");
  }
  return out;
}

}  // namespace relrep
