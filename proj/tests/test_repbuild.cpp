#include <doctest.h>

#include <algorithm>

#include "relrep/abstraction.hpp"
#include "relrep/dsl.hpp"
#include "relrep/error.hpp"
#include "relrep/family.hpp"
#include "relrep/preorder.hpp"
#include "relrep/repbuild.hpp"
#include "support.hpp"

using namespace relrep;

namespace {

FinStructure group2() {
  return parse_structure(
      "structure z2\nsignature compose=angelic id\nelements 1 a\nconst id = 1\n"
      "compose 1 1 = 1\ncompose 1 a = a\ncompose a 1 = a\ncompose a a = 1\nend\n");
}

FinStructure nilpotent2() {
  return parse_structure(
      "structure nil\nsignature compose=angelic\nelements a z\ndefault compose = z\nend\n");
}

// Partial function {(0,1)} and its converse over two points, closed under
// every operation of the ordered domain signature.
ProperAbstraction partial_function_algebra() {
  Signature sig = Signature::domain_range(CompositionKind::angelic);
  sig.converse = sig.order = sig.zero = sig.one = sig.identity = true;
  Rel f(2, {{0, 1}});
  return abstract_proper(generate_concrete(2, {f, converse(f)}, sig), sig, "pf");
}

bool verifies(const FinStructure& s, const RepMap& rep) { return verify_representation(s, rep).empty(); }

}  // namespace

TEST_CASE("verifier") {
  const Signature drs = Signature::domain_range(CompositionKind::demonic);
  auto p = abstract_proper(all_relations(2), drs);
  CHECK(verifies(p.structure, p.representation));

  RepMap same = p.representation;
  same.assignment[1] = same.assignment[0];
  auto v = verify_representation(p.structure, same);
  CHECK(std::any_of(v.begin(), v.end(), [](const Violation& x) { return x.clause == "faithful"; }));

  FinStructure s = gen_sn(1);
  RepMap empty{2, std::vector<Rel>(s.size(), Rel(2))};
  auto w = verify_representation(s, empty);
  CHECK_FALSE(w.empty());
  CHECK_FALSE(describe(w.front()).empty());

  RepMap wrong_base{1, std::vector<Rel>(s.size(), Rel(2))};
  CHECK_FALSE(verify_representation(s, wrong_base).empty());
}

TEST_CASE("cayley") {
  FinStructure g = group2();
  RepMap rep = cayley_rep(g);
  CHECK(rep.base == 2);
  CHECK(rep[g.at("a")] == Rel(2, {{0, 1}, {1, 0}}));
  CHECK(verifies(g, rep));

  FinStructure one = parse_structure("structure s\nsignature compose=angelic\nelements e\ncompose e e = e\nend\n");
  CHECK(verifies(one, cayley_rep(one)));

  FinStructure nil = nilpotent2();
  RepMap n = cayley_rep(nil);
  CHECK(n.base == 3);
  CHECK(verifies(nil, n));

  FinStructure nonassoc = parse_structure(
      "structure na\nsignature compose=angelic\nelements a b\ncompose a a = b\ncompose a b = b\n"
      "compose b a = b\ncompose b b = a\nend\n");
  CHECK_THROWS_AS(cayley_rep(nonassoc), Error);
  CHECK_THROWS_AS(cayley_rep(gen_sn(1)), SignatureError);
}

TEST_CASE("zareckii") {
  FinStructure a = parse_structure("structure a\nsignature compose=angelic le\nelements a\ncompose a a = a\nend\n");
  RepMap rep = zareckii_rep(a);
  CHECK(rep.base == 2);
  CHECK(rep[0] == Rel(2, {{0, 0}, {1, 0}}));

  Signature sig;
  sig.composition = CompositionKind::angelic;
  sig.order = true;
  auto p = abstract_proper(generate_concrete(2, {Rel(2, {{0, 1}}), Rel(2, {{0, 0}, {1, 1}, {0, 1}})}, sig), sig);
  const FinStructure& s = p.structure;
  RepMap z = zareckii_rep(s);
  CHECK(z.base == s.size() + 1);
  CHECK(verifies(s, z));
  const Node e = static_cast<Node>(s.size());
  for (Elem x = 0; x < s.size(); ++x)
    for (Elem y = 0; y < s.size(); ++y)
      if (!s.leq(x, y)) {
        CHECK(z[x].contains(e, x));
        CHECK_FALSE(z[y].contains(e, x));
      }

  FinStructure bad = parse_structure(
      "structure z2o\nsignature compose=angelic le\nelements u g\ncompose u u = u\ncompose u g = g\n"
      "compose g u = g\ncompose g g = u\nle u g\nend\n");
  CHECK_THROWS_WITH_AS(zareckii_rep(bad), doctest::Contains("monotone"), Error);
  CHECK_THROWS_AS(zareckii_rep(group2()), SignatureError);
}

TEST_CASE("closed sets") {
  FinStructure one = parse_structure(
      "structure o\nsignature compose=angelic D R conv\nelements e\ndomain e = e\nrange e = e\n"
      "converse e = e\ncompose e e = e\nend\n");
  CHECK(closed_sets(one) == std::vector<std::vector<Elem>>{{0}});

  auto p = partial_function_algebra();
  const FinStructure& s = p.structure;
  const Elem zero = *s.constant(Constant::zero);
  auto sets = closed_sets(s);
  REQUIRE_FALSE(sets.empty());
  for (const auto& S : sets) {
    CHECK_FALSE(S.empty());
    CHECK(std::find(S.begin(), S.end(), zero) == S.end());
    CHECK(closed_set_closure(s, S) == S);
    for (Elem x : S)
      for (Elem y = 0; y < s.size(); ++y)
        if (s.leq(x, y)) CHECK(std::binary_search(S.begin(), S.end(), y));
  }
  for (Elem a = 0; a < s.size(); ++a) {
    if (a == zero) continue;
    auto c = closed_set_closure(s, {a});
    CHECK(std::binary_search(c.begin(), c.end(), a));
  }

  RepMap rho = closed_set_rep(s);
  CHECK(rho.base == sets.size());
  CHECK(verifies(s, rho));

  auto index = [&](const std::vector<Elem>& S) {
    return static_cast<std::size_t>(std::find(sets.begin(), sets.end(), S) - sets.begin());
  };
  for (Elem a = 0; a < s.size(); ++a) {
    if (a == zero) continue;
    std::size_t from = index(closed_set_closure(s, {s.dom(a)})), to = index(closed_set_closure(s, {a}));
    REQUIRE(from < sets.size());
    REQUIRE(to < sets.size());
    CHECK(rho[a].contains(from, to));
  }
  const Elem id = *s.constant(Constant::identity);
  for (std::size_t x = 0; x < sets.size(); ++x)
    for (std::size_t y = 0; y < sets.size(); ++y) CHECK(rho[id].contains(x, y) == (x == y));

  CHECK_THROWS_AS(closed_sets(gen_sn(1)), SignatureError);
  CHECK_THROWS_AS(closed_sets(s, ClosedSetOptions{1, 1u << 20}), Inconclusive);
}

TEST_CASE("closed-set builder on small concrete algebras") {
  Signature sig = Signature::domain_range(CompositionKind::angelic);
  sig.converse = sig.order = true;
  auto all = all_relations(2);
  for (std::size_t i = 0; i < all.size(); ++i) {
    auto p = abstract_proper(generate_concrete(2, {all[i]}, sig), sig);
    INFO(all[i].to_string());
    CHECK(verifies(p.structure, closed_set_rep(p.structure)));
  }
}

TEST_CASE("brute-force oracle") {
  OracleResult one = brute_force_search(testing::one_element());
  REQUIRE(one.representation);
  CHECK(one.representation->base == 1);

  FinStructure ea = parse_structure(
      "structure ea\nsignature compose=demonic D R\nelements e a\ndomain e = e\ndomain a = e\n"
      "range e = e\nrange a = e\ncompose e e = e\ncompose e a = a\ncompose a e = a\ncompose a a = e\nend\n");
  OracleResult r = brute_force_search(ea);
  if (r.representation) CHECK(verifies(ea, *r.representation));
  else CHECK(r.searched_up_to == 3);

  FinStructure c = testing::cycle4();
  REQUIRE(find_prec_cycle(c));
  OracleResult none = brute_force_search(c, {3});
  CHECK_FALSE(none.representation);
  CHECK(none.searched_up_to == 3);

  for (const auto& p : testing::proper_drs(2)) {
    if (p.structure.size() > 6) continue;
    OracleResult q = brute_force_search(p.structure, {2});
    REQUIRE(q.representation);
    REQUIRE(verifies(p.structure, *q.representation));
  }

  CHECK_THROWS_AS(brute_force_search(c, {5}), Error);
  CHECK_THROWS_AS(brute_force_search(gen_sn(1), {3, 10}), Inconclusive);
}

TEST_CASE("representation JSON and DOT") {
  auto p = partial_function_algebra();
  RepMap rep = closed_set_rep(p.structure);
  auto j = repmap_to_json(p.structure, rep);
  CHECK(j["base"] == rep.base);
  CHECK(repmap_from_json(p.structure, nlohmann::json::parse(j.dump())) == rep);
  CHECK_THROWS_AS(repmap_from_json(p.structure, nlohmann::json::parse(R"({"base":2,"assignment":{}})")), Error);
  std::string dot = repmap_to_dot(p.structure, rep, Elem{0});
  CHECK(dot.rfind("digraph", 0) == 0);
}
