#include <array>

#include "relrep/family.hpp"

namespace relrep {

namespace {

constexpr std::array<const char*, 12> kPerIndex = {"m",  "eps", "a",   "b",   "c",  "d",
                                                   "cd", "ac",  "acd", "cdb", "db", "ab"};

}  // namespace

std::string sn_id(SnKind kind, std::size_t i) {
  return std::string(kPerIndex[static_cast<std::size_t>(kind)]) + "_" + std::to_string(i);
}

FinStructure gen_sn(std::size_t n) {
  const std::size_t N = 2 * n + 1;
  std::vector<std::string> ids = {"0", "d", "r"};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < kPerIndex.size(); ++k) ids.push_back(sn_id(static_cast<SnKind>(k), i));

  FinStructure s("S_" + std::to_string(n), Signature::domain_range(CompositionKind::demonic), std::move(ids));
  const Elem zero = 0, d = 1, r = 2;
  auto at = [&](SnKind k, std::size_t i) {
    return static_cast<Elem>(3 + (i % N) * kPerIndex.size() + static_cast<std::size_t>(k));
  };
  using K = SnKind;

  std::vector<Elem> dr = {zero, d, r};
  for (std::size_t i = 0; i < N; ++i) {
    dr.push_back(at(K::m, i));
    dr.push_back(at(K::eps, i));
  }
  for (Elem e : dr) {
    s.set_dom(e, e);
    s.set_rng(e, e);
  }
  for (std::size_t i = 0; i < N; ++i) {
    const Elem m = at(K::m, i), eps = at(K::eps, i);
    for (K k : {K::a, K::ac, K::acd, K::ab}) s.set_dom(at(k, i), d);
    for (K k : {K::c, K::b, K::cdb, K::cd}) s.set_dom(at(k, i), m);
    for (K k : {K::d, K::db}) s.set_dom(at(k, i), eps);
    for (K k : {K::a, K::d, K::cd, K::acd}) s.set_rng(at(k, i), m);
    for (K k : {K::c, K::ac}) s.set_rng(at(k, i), eps);
    for (K k : {K::ab, K::cdb, K::db, K::b}) s.set_rng(at(k, i), r);
  }

  // Everything not listed below is 0.
  const Elem count = static_cast<Elem>(s.size());
  for (Elem x = 0; x < count; ++x)
    for (Elem y = 0; y < count; ++y) s.set_compose(x, y, zero);
  // Domain-range elements are idempotent; distinct ones compose to 0.
  for (Elem e : dr) s.set_compose(e, e, e);
  // Mandatory compositions with a domain-range element: D(x)∘x = x = x∘R(x).
  for (Elem x = 0; x < count; ++x) {
    s.set_compose(s.dom(x), x, x);
    s.set_compose(x, s.rng(x), x);
  }
  for (std::size_t i = 0; i < N; ++i) {
    auto set = [&](K lhs, K rhs, K out, std::size_t out_index) { s.set_compose(at(lhs, i), at(rhs, i), at(out, out_index)); };
    set(K::d, K::c, K::eps, i);
    set(K::c, K::d, K::cd, i);
    set(K::cd, K::cd, K::cd, i);
    set(K::a, K::cdb, K::ab, i + 1);
    set(K::acd, K::cdb, K::ab, i + 1);
    set(K::ac, K::db, K::ab, i + 1);
    set(K::acd, K::b, K::ab, i + 1);
    set(K::cd, K::c, K::c, i);
    set(K::d, K::cd, K::d, i);
    set(K::a, K::b, K::ab, i);
    set(K::a, K::c, K::ac, i);
    set(K::a, K::cd, K::acd, i);
    set(K::c, K::db, K::cdb, i);
    set(K::d, K::b, K::db, i);
    set(K::ac, K::d, K::acd, i);
    set(K::acd, K::c, K::ac, i);
    set(K::cd, K::b, K::cdb, i);
  }
  return s;
}

}  // namespace relrep
