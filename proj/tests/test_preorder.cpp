#include <doctest.h>

#include <algorithm>

#include "relrep/abstraction.hpp"
#include "relrep/error.hpp"
#include "relrep/family.hpp"
#include "relrep/preorder.hpp"
#include "support.hpp"

using namespace relrep;

namespace {

bool has_pair(const std::vector<PrecStep>& steps, Elem s, Elem t) {
  return std::any_of(steps.begin(), steps.end(), [&](const PrecStep& p) { return p.s == s && p.t == t; });
}

// Brute-force least fixpoint of the base and sandwich/transitivity clauses.
std::vector<std::vector<bool>> naive_closure(const FinStructure& s) {
  const std::size_t n = s.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (Elem u = 0; u < n; ++u)
    for (Elem v = 0; v < n; ++v) {
      Elem uv = s.compose(u, v);
      if (s.dom(uv) != uv) continue;
      Elem a = s.rng(s.compose(u, s.dom(v)));
      rel[a][s.compose(s.compose(a, v), u)] = true;
    }
  for (bool changed = true; changed;) {
    changed = false;
    auto set = [&](Elem a, Elem b) {
      if (!rel[a][b]) rel[a][b] = changed = true;
    };
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        if (!rel[a][b]) continue;
        for (Elem u = 0; u < n; ++u)
          for (Elem v = 0; v < n; ++v) set(s.compose(s.compose(u, a), v), s.compose(s.compose(u, b), v));
        for (Elem c = 0; c < n; ++c)
          if (rel[b][c]) set(a, c);
      }
  }
  return rel;
}

}  // namespace

TEST_CASE("base pairs") {
  FinStructure s = gen_sn(1);
  auto base = prec_base(s);
  CHECK(has_pair(base, s.at("m_0"), s.at("cd_0")));
  CHECK_FALSE(has_pair(base, s.at("ab_0"), s.at("ab_1")));
  PrecStep witness{StepKind::base, s.at("m_0"), s.at("cd_0"), {s.at("d_0"), s.at("c_0")}};
  CHECK(step_equations_hold(s, witness));

  FinStructure one = testing::one_element();
  auto b1 = prec_base(one);
  REQUIRE(b1.size() == 1);
  CHECK(b1[0].witnesses == std::vector<Elem>{0, 0});
}

TEST_CASE("closure on S_1") {
  FinStructure s = gen_sn(1);
  PrecClosure c(s);
  for (int i = 0; i < 3; ++i) {
    Elem a = s.at("ab_" + std::to_string(i)), b = s.at("ab_" + std::to_string((i + 1) % 3));
    CHECK(c.contains(a, b));
  }
  CHECK(c.contains(s.at("ab_0"), s.at("ab_2")));
  CHECK(c.depth(s.at("m_0"), s.at("cd_0")) == 1);
  CHECK(c.depth(s.at("ab_0"), s.at("ab_1")) == 2);

  PrecClosure one(testing::one_element());
  CHECK(one.pairs() == std::vector<std::pair<Elem, Elem>>{{0, 0}});
}

TEST_CASE("closure equals the brute-force fixpoint and is transitive") {
  std::vector<FinStructure> corpus = {gen_sn(1), testing::cycle4(), testing::one_element()};
  for (const auto& p : testing::proper_drs(2)) corpus.push_back(p.structure);
  for (const FinStructure& s : corpus) {
    PrecClosure c(s);
    auto expected = naive_closure(s);
    for (Elem a = 0; a < s.size(); ++a)
      for (Elem b = 0; b < s.size(); ++b) REQUIRE(c.contains(a, b) == expected[a][b]);
    for (const PrecStep& st : prec_base(s)) REQUIRE(c.contains(st.s, st.t));
    REQUIRE(c.rounds() <= s.size() * s.size());
  }
}

TEST_CASE("derivations replay step by step") {
  FinStructure s = gen_sn(1);
  PrecClosure c(s);
  for (auto [a, b] : c.pairs()) {
    auto d = c.derivation(a, b);
    REQUIRE(!d.empty());
    REQUIRE(d.back().s == a);
    REQUIRE(d.back().t == b);
    for (const PrecStep& st : d) REQUIRE(step_equations_hold(s, st));
  }
}

TEST_CASE("cycle certificates") {
  FinStructure s = gen_sn(1);
  auto c = find_prec_cycle(s);
  REQUIRE(c);
  CHECK(c->cycle == std::vector<Elem>{s.at("ab_0"), s.at("ab_1"), s.at("ab_2")});
  CHECK(replay_certificate(s, *c));

  CHECK_FALSE(find_prec_cycle(testing::one_element()));
  auto full = abstract_proper(all_relations(2), Signature::domain_range(CompositionKind::demonic));
  CHECK_FALSE(find_prec_cycle(full.structure));

  FinStructure s2 = gen_sn(2);
  auto c2 = find_prec_cycle(s2);
  REQUIRE(c2);
  CHECK(c2->cycle.size() == 5);
  CHECK(replay_certificate(s2, *c2));
}

TEST_CASE("tampered certificates are rejected") {
  FinStructure s = gen_sn(1);
  auto c = find_prec_cycle(s);
  REQUIRE(c);

  CycleCertificate swapped = *c;
  for (PrecStep& st : swapped.derivations[0])
    if (st.kind == StepKind::sandwich) std::swap(st.witnesses[2], st.witnesses[3]);
  CHECK_FALSE(replay_certificate(s, swapped));

  CycleCertificate short_cycle = *c;
  short_cycle.cycle.pop_back();
  CHECK_FALSE(replay_certificate(s, short_cycle));

  // Read left to right, ab_0 ⪯ ab_1 rests on (a_0*cd_0)*b_0 = acd_0*b_0 = ab_1.
  FinStructure broken = s;
  broken.set_compose(s.at("acd_0"), s.at("b_0"), s.at("ab_0"));
  CHECK_FALSE(replay_certificate(broken, *c));
}

TEST_CASE("certificate JSON round trip") {
  FinStructure s = gen_sn(1);
  auto c = find_prec_cycle(s);
  REQUIRE(c);
  auto j = certificate_to_json(s, *c);
  CHECK(j["cycle"] == nlohmann::json({"ab_0", "ab_1", "ab_2"}));
  CycleCertificate back = certificate_from_json(s, nlohmann::json::parse(j.dump()));
  CHECK(back.cycle == c->cycle);
  CHECK(back.derivations == c->derivations);
  CHECK_THROWS_AS(certificate_from_json(s, nlohmann::json::parse(R"({"cycle":["nope"],"derivations":[[]]})")), Error);
}

TEST_CASE("one-sided closure only adds pairs") {
  for (const FinStructure& s : {gen_sn(1), testing::cycle4()}) {
    PrecClosure two(s), one(s, PrecOptions{true});
    for (auto [a, b] : two.pairs()) CHECK(one.contains(a, b));
  }
}

TEST_CASE("triangle closure") {
  CHECK(triangle_closure(testing::one_element(), TriangleVariant::demonic) ==
        std::vector<std::pair<Elem, Elem>>{{0, 0}});

  FinStructure s = gen_sn(1);
  auto t = triangle_closure(s, TriangleVariant::demonic);
  Elem ab = s.at("ab_0");
  CHECK(std::binary_search(t.begin(), t.end(), std::pair(ab, ab)));

  const Signature drs = Signature::domain_range(CompositionKind::angelic);
  auto p = abstract_proper(generate_concrete(2, {Rel(2, {{0, 1}})}, drs), drs);
  const FinStructure& f = p.structure;
  auto ta = triangle_closure(f, TriangleVariant::angelic);
  for (Elem a = 0; a < f.size(); ++a)
    for (Elem b = 0; b < f.size(); ++b) {
      std::pair gen(f.compose(f.dom(a), f.dom(b)), f.dom(b));
      REQUIRE(std::binary_search(ta.begin(), ta.end(), gen));
    }
  CHECK_THROWS_AS(triangle_closure(f, TriangleVariant::demonic), SignatureError);
}

TEST_CASE("wrong signature") {
  const Signature ang = Signature::domain_range(CompositionKind::angelic);
  auto p = abstract_proper(generate_concrete(1, {Rel::identity(1)}, ang), ang);
  CHECK_THROWS_AS(prec_base(p.structure), SignatureError);
  CHECK_THROWS_AS(find_prec_cycle(p.structure), SignatureError);
}
