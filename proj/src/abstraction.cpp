#include "relrep/abstraction.hpp"

#include <unordered_map>

#include "relrep/error.hpp"

namespace relrep {

ProperAbstraction abstract_proper(const std::vector<Rel>& rels, const Signature& signature, const std::string& name) {
  signature.check();
  if (rels.empty()) throw Error("cannot abstract an empty set of relations");
  const std::size_t base = rels.front().base();

  std::unordered_map<Rel, Elem, RelHash> index;
  std::vector<std::string> ids;
  for (const Rel& r : rels) {
    if (r.base() != base) throw BaseMismatch(base, r.base());
    auto [it, fresh] = index.emplace(r, static_cast<Elem>(ids.size()));
    if (!fresh) throw Error("duplicate relation " + r.to_string());
    ids.push_back("e" + std::to_string(ids.size()));
  }

  auto lookup = [&](const Rel& r, const char* op) {
    auto it = index.find(r);
    if (it == index.end()) throw Error(std::string("set not closed under ") + op + ": missing " + r.to_string());
    return it->second;
  };

  FinStructure s(name, signature, std::move(ids));
  const auto n = static_cast<Elem>(rels.size());
  for (Elem a = 0; a < n; ++a) {
    if (signature.domain) s.set_dom(a, lookup(dom(rels[a]), "D"));
    if (signature.range) s.set_rng(a, lookup(rng(rels[a]), "R"));
    if (signature.converse) s.set_conv(a, lookup(converse(rels[a]), "converse"));
    if (signature.has_composition()) {
      const char* op = signature.composition == CompositionKind::demonic ? "*" : ";";
      for (Elem b = 0; b < n; ++b) s.set_compose(a, b, lookup(compose(signature.composition, rels[a], rels[b]), op));
    }
    if (signature.order)
      for (Elem b = 0; b < n; ++b) s.set_leq(a, b, rels[a].subset_of(rels[b]));
  }
  if (signature.zero) s.set_constant(Constant::zero, lookup(Rel(base), "zero"));
  if (signature.one) s.set_constant(Constant::one, lookup(Rel::universal(base), "one"));
  if (signature.identity) s.set_constant(Constant::identity, lookup(Rel::identity(base), "identity"));

  return {std::move(s), RepMap{base, rels}};
}

std::vector<Elem> forced_partial_functions(const FinStructure& s) {
  const Signature& sig = s.signature();
  if (!sig.domain || !sig.range || !sig.has_composition())
    throw SignatureError("partial-function analysis needs D, R and composition");
  const std::size_t n = s.size();
  std::vector<bool> forced(n, false);
  for (Elem t = 0; t < n; ++t) {
    forced[s.dom(t)] = true;
    forced[s.rng(t)] = true;
  }
  if (sig.order && sig.identity) {
    Elem id = *s.constant(Constant::identity);
    for (Elem f = 0; f < n; ++f)
      if (s.leq(f, id)) forced[f] = true;
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      Elem ab = s.compose(a, b);
      if (s.dom(ab) == ab) forced[s.compose(s.rng(a), b)] = true;
    }
  }
  std::vector<Elem> out;
  for (Elem e = 0; e < n; ++e)
    if (forced[e]) out.push_back(e);
  return out;
}

}  // namespace relrep
