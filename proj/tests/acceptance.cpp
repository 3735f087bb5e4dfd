// One line per acceptance criterion; exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <iostream>
#include <sstream>
#include <string>

#include "relrep/abstraction.hpp"
#include "relrep/cli.hpp"
#include "relrep/error.hpp"
#include "relrep/family.hpp"
#include "relrep/game.hpp"
#include "relrep/preorder.hpp"
#include "relrep/repbuild.hpp"
#include "relrep/saturate.hpp"
#include "relrep/solver.hpp"
#include "relrep/validate.hpp"
#include "sn_table.hpp"
#include "support.hpp"

using namespace relrep;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

// 1. Bit-matrix operations against set-based definitions, every pair, bases 1-3.
Outcome definitional() {
  std::size_t pairs = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    auto all = all_relations(n);
    std::vector<testing::Pairs> sets;
    for (const Rel& r : all) sets.push_back(testing::as_set(r));
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (testing::as_set(dom(all[i])) != testing::naive_dom(sets[i], n)) return fail("dom " + all[i].to_string());
      if (testing::as_set(rng(all[i])) != testing::naive_rng(sets[i], n)) return fail("rng " + all[i].to_string());
      for (std::size_t j = 0; j < all.size(); ++j, ++pairs) {
        if (testing::as_set(compose_demonic(all[i], all[j])) != testing::naive_demonic(sets[i], sets[j], n))
          return fail("demonic " + all[i].to_string() + " " + all[j].to_string());
        if (refines_demonic(all[i], all[j]) != testing::naive_refines(sets[i], sets[j], n))
          return fail("refines " + all[i].to_string() + " " + all[j].to_string());
      }
    }
  }
  return {true, std::to_string(pairs) + " pairs"};
}

// 2. D(s*D(t))*s = s*D(t) on the full {D,R,*} algebra of each base.
Outcome soundness_axiom() {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto p = abstract_proper(all_relations(n), Signature::domain_range(CompositionKind::demonic));
    auto bad = check_equation(p.structure, Law::demonic_domain_soundness, 1);
    if (!bad.empty()) return fail("base " + std::to_string(n));
  }
  return {true, "bases 1-3, 2+16+512 elements"};
}

// 3. ⊑ is a partial order on every relation set of bases 1-3.
Outcome partial_order() {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto all = all_relations(n);
    const std::size_t k = all.size();
    std::vector<std::vector<bool>> le(k, std::vector<bool>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) le[i][j] = refines_demonic(all[i], all[j]);
    for (std::size_t i = 0; i < k; ++i) {
      if (!le[i][i]) return fail("not reflexive at " + all[i].to_string());
      for (std::size_t j = 0; j < k; ++j) {
        if (!le[i][j]) continue;
        if (i != j && le[j][i]) return fail("not antisymmetric");
        for (std::size_t m = 0; m < k; ++m)
          if (le[j][m] && !le[i][m]) return fail("not transitive");
      }
    }
  }
  return {true, "reflexive, antisymmetric, transitive"};
}

// 4. S_1: size, well-formedness, every displayed value, the ab-cycle.
Outcome sn_pipeline() {
  FinStructure s = gen_sn(1);
  if (s.size() != 39) return fail("size " + std::to_string(s.size()));
  if (validate_structure(s).error_count() != 0) return fail("well-formedness errors");
  auto facts = testing::sn_displayed(1);
  for (const auto& f : facts) {
    Elem got = f.op == "D" ? s.dom(s.at(f.x)) : f.op == "R" ? s.rng(s.at(f.x)) : s.compose(s.at(f.x), s.at(f.y));
    if (got != s.at(f.value)) return fail(f.op + " " + f.x + " " + f.y + " gives " + s.id(got));
  }
  auto c = find_prec_cycle(s);
  if (!c) return fail("no cycle");
  if (c->cycle != std::vector<Elem>{s.at("ab_0"), s.at("ab_1"), s.at("ab_2")}) return fail("wrong cycle");
  if (!replay_certificate(s, *c)) return fail("certificate does not replay");
  return {true, std::to_string(facts.size()) + " displayed values, cycle ab_0 ab_1 ab_2 replays"};
}

// 5. Every derived ⪯ pair is a ⊑ pair under the identity representation.
Outcome prec_soundness() {
  // Every subset of the relations on one or two points that is closed under
  // D, R and *, i.e. every proper structure over those bases.
  const Signature sig = Signature::domain_range(CompositionKind::demonic);
  std::vector<ProperAbstraction> corpus;
  for (std::size_t n = 1; n <= 2; ++n) {
    auto all = all_relations(n);
    for (std::uint32_t mask = 1; mask < (1u << all.size()); ++mask) {
      std::vector<Rel> rels;
      for (std::size_t i = 0; i < all.size(); ++i)
        if (mask >> i & 1) rels.push_back(all[i]);
      std::sort(rels.begin(), rels.end());
      if (generate_concrete(n, rels, sig) == rels) corpus.push_back(abstract_proper(rels, sig));
    }
  }
  std::size_t checked = 0;
  for (const auto& p : corpus) {
    PrecClosure c(p.structure);
    for (auto [a, b] : c.pairs()) {
      if (!refines_demonic(p.representation[a], p.representation[b]))
        return fail(p.structure.name() + ": " + p.structure.id(a) + " " + p.structure.id(b));
      ++checked;
    }
  }
  return {true, std::to_string(corpus.size()) + " structures, " + std::to_string(checked) + " pairs"};
}

// 6. Solver verdicts and monotonicity in n.
Outcome solver() {
  if (!exists_wins(testing::one_element(), 3)) return fail("one-element structure, 3 moves");
  FinStructure s1 = gen_sn(1);
  if (!exists_wins(s1, 1)) return fail("S_1, 1 move");

  std::vector<std::pair<FinStructure, std::size_t>> corpus = {
      {testing::one_element(), 3}, {testing::cycle4(), 3}, {s1, 2}};
  auto proper = testing::proper_drs(2);
  std::set<std::size_t> sizes;
  for (auto it = proper.rbegin(); it != proper.rend() && corpus.size() < 7; ++it)
    if (sizes.insert(it->structure.size()).second) corpus.push_back({it->structure, 3});
  auto small = testing::small_drs_structures();
  for (std::size_t i = 1; i < small.size() && corpus.size() < 10; i += small.size() / 3)
    corpus.push_back({small[i], 3});
  if (corpus.size() != 10) return fail("corpus has " + std::to_string(corpus.size()) + " structures");

  std::string verdicts;
  for (const auto& [s, top] : corpus) {
    bool prev = true;
    verdicts += " " + s.name() + ":";
    for (std::size_t n = 0; n <= top; ++n) {
      bool w = exists_wins(s, n);
      verdicts += w ? "1" : "0";
      if (w && !prev) return fail(s.name() + " wins at " + std::to_string(n) + " but not before");
      prev = w;
    }
  }
  return {true, "10 structures, verdicts for n=0..:" + verdicts};
}

// 7. The scripted strategy against random ∀ play.
Outcome strategy_simulation() {
  std::string detail;
  for (std::size_t n : {1u, 2u}) {
    FinStructure s = gen_sn(n);
    auto st = sn_strategy(n, s);
    std::size_t bad = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      RandomForall forall(seed);
      Transcript t = playout(s, n, forall, *st);
      bool clean = t.exists_survived;
      for (const Move& m : t.moves) clean = clean && m.consistent;
      bad += !clean;
    }
    if (bad) return fail("n=" + std::to_string(n) + ": " + std::to_string(bad) + " lost playouts");
    detail += "n=" + std::to_string(n) + " 1000/1000 ";
  }
  return {true, detail + "survived"};
}

// 8. The three builders on their designated inputs.
Outcome builders() {
  Signature ord;
  ord.composition = CompositionKind::angelic;
  ord.order = true;
  const std::vector<std::vector<Rel>> gens = {
      {Rel(2, {{0, 1}})},
      {Rel(2, {{0, 1}}), Rel(2, {{1, 0}})},
      {Rel(2, {{0, 1}}), Rel::identity(2)},
      {Rel(2, {{0, 1}, {1, 0}})},
      {Rel(2, {{0, 0}}), Rel(2, {{1, 1}}), Rel(2, {{1, 0}})},
  };
  std::set<std::vector<Rel>> distinct;
  std::string sizes;
  for (const auto& g : gens) {
    auto rels = generate_concrete(2, g, ord);
    distinct.insert(rels);
    auto p = abstract_proper(rels, ord, "ordered");
    RepMap z = zareckii_rep(p.structure);
    if (z.base != p.structure.size() + 1) return fail("zareckii base " + std::to_string(z.base));
    if (!verify_representation(p.structure, z).empty()) return fail("zareckii does not verify");
    sizes += std::to_string(p.structure.size()) + " ";
  }
  if (distinct.size() != gens.size()) return fail("ordered semigroups not distinct");

  Signature full = Signature::domain_range(CompositionKind::angelic);
  full.converse = full.order = full.zero = full.one = full.identity = true;
  Rel f(2, {{0, 1}});
  auto pf = abstract_proper(generate_concrete(2, {f, converse(f)}, full), full, "pf");
  RepMap rho = closed_set_rep(pf.structure);
  if (!verify_representation(pf.structure, rho).empty()) return fail("closed-set map does not verify");

  FinStructure z2 = parse_structure(
      "structure z2\nsignature compose=angelic id\nelements 1 a\nconst id = 1\n"
      "compose 1 1 = 1\ncompose 1 a = a\ncompose a 1 = a\ncompose a a = 1\nend\n");
  FinStructure nil = parse_structure("structure nil\nsignature compose=angelic\nelements a z\ndefault compose = z\nend\n");
  for (const FinStructure* s : {&z2, &nil})
    if (!verify_representation(*s, cayley_rep(*s)).empty()) return fail("cayley on " + s->name());

  return {true, "zareckii on sizes " + sizes + "| closed sets: " + std::to_string(pf.structure.size()) +
                    " elements, base " + std::to_string(rho.base) + " | cayley on z2, nil"};
}

// 9. Oracle, saturation and the cycle finder on every small {D,R,*} table.
Outcome cross_oracle() {
  auto all = testing::small_drs_structures();
  std::size_t cycles = 0, oracle_reps = 0, sat_reps = 0, inconclusive = 0;
  for (const FinStructure& s : all) {
    const bool cycle = find_prec_cycle(s).has_value();
    cycles += cycle;
    OracleResult o = brute_force_search(s, {2});
    SaturationResult r = saturate_and_extract(s);
    inconclusive += r.status == SaturationStatus::inconclusive;
    if (o.representation) {
      ++oracle_reps;
      if (!verify_representation(s, *o.representation).empty()) return fail(s.name() + ": oracle map fails");
      if (cycle) return fail(s.name() + ": oracle representation despite a cycle");
    }
    if (r.representation) {
      ++sat_reps;
      if (!verify_representation(s, *r.representation).empty()) return fail(s.name() + ": extracted map fails");
      if (cycle) return fail(s.name() + ": extracted representation despite a cycle");
    }
  }
  return {true, std::to_string(all.size()) + " structures, " + std::to_string(cycles) + " with cycles, " +
                    std::to_string(oracle_reps) + " oracle / " + std::to_string(sat_reps) +
                    " saturation representations, " + std::to_string(inconclusive) + " saturation inconclusive"};
}

// 10. Every subcommand twice, same bytes out.
Outcome determinism() {
  const std::string d = std::string(RELREP_TEST_DATA) + "/";
  auto run = [](const std::vector<std::string>& args, const std::string& input) {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return std::to_string(code) + "\x1f" + out.str() + "\x1f" + err.str();
  };
  auto body = [&](const std::vector<std::string>& args, const std::string& input = "") {
    std::string r = run(args, input);
    return r.substr(r.find('\x1f') + 1, r.rfind('\x1f') - r.find('\x1f') - 1);
  };
  const std::string sn1 = body({"gen-sn", "1"});
  std::string zrep = body({"--json", "rep", "zareckii", d + "chain.alg"});
  std::string orep = body({"--json", "oracle", d + "one.alg"});
  orep = nlohmann::json::parse(orep)["representation"].dump();
  std::string net = body({"--json", "saturate", d + "one.alg"});
  net = nlohmann::json::parse(net)["networks"][0].dump();
  const std::string script = "init ab_0 ab_2\nwitness 0 1 a_0 b_0\n";

  const std::vector<std::pair<std::vector<std::string>, std::string>> commands = {
      {{"gen-sn", "1"}, ""},
      {{"gen-sn", "2"}, ""},
      {{"validate", "-"}, sn1},
      {{"--json", "validate", d + "cycle4.alg"}, ""},
      {{"cycle", d + "s1.alg"}, ""},
      {{"--json", "cycle", "-"}, sn1},
      {{"cycle", d + "cycle4.alg", "--one-sided"}, ""},
      {{"triangle", d + "s1.alg", "--variant", "demonic"}, ""},
      {{"--json", "triangle", d + "pf.alg", "--variant", "angelic"}, ""},
      {{"game", "solve", d + "s1.alg", "-n", "1"}, ""},
      {{"--json", "--jobs", "4", "game", "solve", d + "s1.alg", "-n", "2"}, ""},
      {{"game", "play", d + "s1.alg", "--role", "forall", "-n", "1", "--machine", "sn"}, script},
      {{"--json", "game", "play", d + "s1.alg", "--role", "forall", "-n", "1"}, script},
      {{"--seed", "5", "game", "play", d + "s1.alg", "--role", "exists", "-n", "1"}, "nref-ab\nfresh\n0\n"},
      {{"saturate", d + "one.alg"}, ""},
      {{"--json", "saturate", d + "s1.alg", "--node-cap", "5", "--step-cap", "300"}, ""},
      {{"rep", "cayley", d + "z2.alg"}, ""},
      {{"--json", "rep", "zareckii", d + "chain.alg"}, ""},
      {{"rep", "closed-set", d + "pf.alg"}, ""},
      {{"rep", "verify", d + "chain.alg", "-"}, zrep},
      {{"oracle", d + "cycle4.alg", "--max-base", "3"}, ""},
      {{"--json", "oracle", d + "one.alg"}, ""},
      {{"export", "dot", d + "s1.alg"}, ""},
      {{"export", "dot", d + "one.alg", "--repmap", "-"}, orep},
      {{"export", "dot", d + "one.alg", "--network", "-"}, net},
      {{"validate", d + "bad.alg"}, ""},
  };
  for (const auto& [args, input] : commands) {
    std::string a = run(args, input), b = run(args, input);
    if (a != b) {
      std::string line;
      for (const auto& x : args) line += x + " ";
      return fail("differs: " + line);
    }
  }
  return {true, std::to_string(commands.size()) + " command lines"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "relation operations match their definitions", 60, definitional},
      {2, "domain soundness law on full relation algebras", 60, soundness_axiom},
      {3, "refinement is a partial order", 60, partial_order},
      {4, "S_1 tables and refinement cycle", 10, sn_pipeline},
      {5, "refinement preorder sound for proper structures", 300, prec_soundness},
      {6, "game solver verdicts and monotonicity", 600, solver},
      {7, "scripted strategy survives random play", 300, strategy_simulation},
      {8, "representation builders verify", 60, builders},
      {9, "oracle and saturation agree", 600, cross_oracle},
      {10, "CLI output is deterministic", 600, determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && secs > c.limit_s) o = fail("took longer than " + std::to_string(static_cast<int>(c.limit_s)) + " s");
    failed += !o.pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs/%gs", secs, c.limit_s);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << " [" << timing << "] " << o.detail
              << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criterion(s) failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
