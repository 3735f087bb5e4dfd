#include <doctest.h>

#include <sstream>

#include "json.hpp"
#include "relrep/cli.hpp"

using namespace relrep;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(RELREP_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("gen-sn piped into validate") {
  Run g = run({"gen-sn", "1"});
  REQUIRE(g.code == 0);
  Run v = run({"validate", "-"}, g.out);
  CHECK(v.code == 0);
  CHECK(v.out.find("S_1: 0 error(s)") != std::string::npos);
}

TEST_CASE("cycle certificate as JSON") {
  Run r = run({"cycle", data("s1.alg"), "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["cycle"] == nlohmann::json({"ab_0", "ab_1", "ab_2"}));
  Run none = run({"cycle", data("one.alg")});
  CHECK(none.code == 1);
  CHECK(none.out == "no cycle\n");
}

TEST_CASE("certificate check from a file on stdin") {
  Run r = run({"--json", "cycle", data("s1.alg")});
  REQUIRE(r.code == 0);
  Run ok = run({"cycle", data("s1.alg"), "--check", "-"}, r.out);
  CHECK(ok.code == 0);
  CHECK(ok.out == "certificate valid\n");
  Run other = run({"cycle", data("cycle4.alg"), "--check", "-"}, r.out);
  CHECK(other.code == 2);
}

TEST_CASE("game solve") {
  Run r = run({"game", "solve", data("s1.alg"), "-n", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "exists-wins\n");
  Run c = run({"game", "solve", data("cycle4.alg"), "-n", "1", "--json"});
  CHECK(c.code == 1);
  CHECK(nlohmann::json::parse(c.out)["verdict"] == "forall-wins");
  Run sig = run({"game", "solve", data("z2.alg"), "-n", "1"});
  CHECK(sig.code == 2);
  CHECK(sig.err.find("{D,R,*}") != std::string::npos);
}

TEST_CASE("game play with replay") {
  Run first = run({"--json", "game", "play", data("s1.alg"), "--role", "forall", "-n", "1", "--machine", "sn"},
                  "init ab_0 ab_2\nwitness 0 1 a_0 b_0\n");
  REQUIRE(first.code == 0);
  CHECK(first.out.find("\"verdict\":\"exists-survives\"") != std::string::npos);
  Run again = run({"--json", "game", "play", data("s1.alg"), "--role", "forall", "-n", "1", "--machine", "sn",
                   "--replay", "-"},
                  first.out);
  CHECK(again.out == first.out);

  Run as_exists = run({"--seed", "7", "game", "play", data("one.alg"), "--role", "exists", "-n", "1"});
  CHECK(as_exists.code == 0);
  CHECK(as_exists.out.find("exists-survives") != std::string::npos);
}

TEST_CASE("representations") {
  Run z = run({"--json", "rep", "zareckii", data("chain.alg")});
  REQUIRE(z.code == 0);
  CHECK(nlohmann::json::parse(z.out)["base"] == 3);
  Run v = run({"rep", "verify", data("chain.alg"), "-"}, z.out);
  CHECK(v.code == 0);
  CHECK(v.out == "representation verified\n");

  auto tampered = nlohmann::json::parse(z.out);
  tampered["assignment"]["b"] = tampered["assignment"]["t"];
  Run bad = run({"rep", "verify", data("chain.alg"), "-"}, tampered.dump());
  CHECK(bad.code == 1);

  CHECK(run({"rep", "cayley", data("z2.alg")}).code == 0);
  CHECK(run({"rep", "closed-set", data("pf.alg")}).code == 0);
  CHECK(run({"rep", "cayley", data("s1.alg")}).code == 2);
  CHECK(run({"rep", "zareckii", data("z2.alg")}).code == 2);
}

TEST_CASE("oracle and saturation") {
  Run o = run({"oracle", data("cycle4.alg"), "--max-base", "2"});
  CHECK(o.code == 1);
  CHECK(o.out == "none up to base 2\n");
  Run s = run({"saturate", data("one.alg")});
  CHECK(s.code == 0);
  Run capped = run({"saturate", data("s1.alg"), "--node-cap", "5", "--step-cap", "100"});
  CHECK(capped.code == 3);
}

TEST_CASE("export dot") {
  Run plain = run({"export", "dot", data("s1.alg")});
  CHECK(plain.code == 0);
  CHECK(plain.out.rfind("digraph", 0) == 0);
  Run rep = run({"--json", "oracle", data("one.alg")});
  auto j = nlohmann::json::parse(rep.out);
  Run dot = run({"export", "dot", data("one.alg"), "--repmap", "-", "--element", "e"}, j["representation"].dump());
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("digraph", 0) == 0);
}

TEST_CASE("usage and input errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"game", "solve", data("s1.alg")}).code == 2);
  Run parse = run({"validate", data("bad.alg")});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("bad.alg:4:") != std::string::npos);
  CHECK(run({"validate", data("missing.alg")}).code == 2);
  CHECK(run({"triangle", data("s1.alg"), "--variant", "sideways"}).code == 2);
  Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("Subcommands:") != std::string::npos);
}
