#include "relrep/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "relrep/dsl.hpp"
#include "relrep/error.hpp"
#include "relrep/family.hpp"
#include "relrep/game.hpp"
#include "relrep/play.hpp"
#include "relrep/preorder.hpp"
#include "relrep/repbuild.hpp"
#include "relrep/saturate.hpp"
#include "relrep/solver.hpp"
#include "relrep/validate.hpp"

namespace relrep {

namespace {

using ojson = nlohmann::ordered_json;

struct Globals {
  bool json = false;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

class Io {
 public:
  Io(std::istream& in, std::ostream& out, std::ostream& err) : in(in), out(out), err(err) {}

  std::string slurp(const std::string& path) {
    if (path == "-") {
      if (stdin_used_) throw Error("standard input used twice");
      stdin_used_ = true;
      std::ostringstream buf;
      buf << in.rdbuf();
      return buf.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
  }

  FinStructure structure(const std::string& path) {
    try {
      return parse_structure(slurp(path));
    } catch (const ParseError& e) {
      // file:line:col: message
      throw Error((path == "-" ? std::string("<stdin>") : path) + ":" + e.what());
    }
  }

  nlohmann::json json_file(const std::string& path) {
    try {
      return nlohmann::json::parse(slurp(path));
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(path + ": " + e.what());
    }
  }

  std::istream& in;
  std::ostream& out;
  std::ostream& err;

 private:
  bool stdin_used_ = false;
};

void print_rep(std::ostream& out, const FinStructure& s, const RepMap& rep) {
  out << "base " << rep.base << "\n";
  for (Elem e = 0; e < s.size(); ++e) out << s.id(e) << " = " << rep[e].to_string() << "\n";
}

int cmd_validate(Io& io, const Globals& g, const std::string& file) {
  FinStructure s = io.structure(file);
  ValidationReport report = validate_structure(s);
  if (g.json) {
    ojson j;
    j["structure"] = s.name();
    j["level"] = to_string(report.level);
    j["errors"] = report.error_count();
    j["warnings"] = report.warning_count();
    ojson findings = ojson::array();
    for (const Finding& f : report.findings) {
      ojson x;
      x["law"] = f.law;
      x["status"] = to_string(f.status);
      x["counterexample"] = f.counterexample;
      x["message"] = f.message;
      findings.push_back(x);
    }
    j["findings"] = findings;
    io.out << j.dump(2) << "\n";
  } else {
    for (const Finding& f : report.findings) {
      io.out << to_string(f.status) << " " << f.law;
      if (!f.counterexample.empty()) {
        io.out << " [";
        for (std::size_t i = 0; i < f.counterexample.size(); ++i) io.out << (i ? " " : "") << f.counterexample[i];
        io.out << "]";
      }
      if (!f.message.empty()) io.out << ": " << f.message;
      io.out << "\n";
    }
    io.out << s.name() << ": " << report.error_count() << " error(s), " << report.warning_count() << " warning(s)\n";
  }
  return report.error_count() == 0 ? kVerdict : kNegative;
}

int cmd_cycle(Io& io, const Globals& g, const std::string& file, bool one_sided, const std::string& check) {
  FinStructure s = io.structure(file);
  require_game_signature(s);
  if (!check.empty()) {
    CycleCertificate c = certificate_from_json(s, io.json_file(check));
    bool ok = replay_certificate(s, c);
    if (g.json) {
      ojson j;
      j["valid"] = ok;
      io.out << j.dump() << "\n";
    } else {
      io.out << (ok ? "certificate valid" : "certificate invalid") << "\n";
    }
    return ok ? kVerdict : kNegative;
  }
  PrecOptions options;
  options.one_sided = one_sided;
  auto cert = find_prec_cycle(s, options);
  if (!cert) {
    if (g.json)
      io.out << "{\"cycle\":null}\n";
    else
      io.out << "no cycle\n";
    return kNegative;
  }
  if (g.json) {
    io.out << certificate_to_json(s, *cert).dump(2) << "\n";
    return kVerdict;
  }
  io.out << "cycle:";
  for (Elem e : cert->cycle) io.out << " " << s.id(e);
  io.out << "\n";
  for (std::size_t i = 0; i < cert->cycle.size(); ++i) {
    const Elem a = cert->cycle[i], b = cert->cycle[(i + 1) % cert->cycle.size()];
    io.out << s.id(a) << " <= " << s.id(b) << ":\n";
    for (const PrecStep& st : cert->derivations[i]) {
      io.out << "  " << to_string(st.kind) << " " << s.id(st.s) << " <= " << s.id(st.t);
      if (!st.witnesses.empty()) {
        io.out << " by";
        for (Elem w : st.witnesses) io.out << " " << s.id(w);
      }
      io.out << "\n";
    }
  }
  return kVerdict;
}

int cmd_triangle(Io& io, const Globals& g, const std::string& file, const std::string& variant) {
  FinStructure s = io.structure(file);
  auto pairs = triangle_closure(s, variant == "angelic" ? TriangleVariant::angelic : TriangleVariant::demonic);
  if (g.json) {
    ojson j;
    j["variant"] = variant;
    ojson list = ojson::array();
    for (auto [a, b] : pairs) list.push_back({s.id(a), s.id(b)});
    j["pairs"] = list;
    io.out << j.dump(2) << "\n";
  } else {
    for (auto [a, b] : pairs) io.out << s.id(a) << " " << s.id(b) << "\n";
  }
  return kVerdict;
}

int cmd_solve(Io& io, const Globals& g, const std::string& file, std::size_t n, bool prune) {
  FinStructure s = io.structure(file);
  SolverOptions options;
  options.prune_redundant = prune;
  options.jobs = g.jobs;
  const bool wins = exists_wins(s, n, options);
  const char* verdict = wins ? "exists-wins" : "forall-wins";
  if (g.json) {
    ojson j;
    j["structure"] = s.name();
    j["moves"] = n;
    j["verdict"] = verdict;
    io.out << j.dump() << "\n";
  } else {
    io.out << verdict << "\n";
  }
  return wins ? kVerdict : kNegative;
}

// S_n has 3 + 12(2n+1) elements.
std::optional<std::size_t> sn_index(const FinStructure& s) {
  if (s.size() < 15 || (s.size() - 3) % 12 != 0) return std::nullopt;
  std::size_t N = (s.size() - 3) / 12;
  if (N % 2 == 0) return std::nullopt;
  return (N - 1) / 2;
}

int cmd_play(Io& io, const Globals& g, const std::string& file, const std::string& role, std::size_t n,
             const std::string& machine, const std::string& replay) {
  FinStructure s = io.structure(file);
  require_game_signature(s);
  PlaySetup setup;
  setup.human = role == "forall" ? Role::forall : Role::exists;
  setup.moves = n;
  setup.json = g.json;

  std::unique_ptr<ExistsStrategy> exists;
  if (machine == "sn") {
    auto k = sn_index(s);
    if (!k) throw SignatureError("--machine sn needs a structure generated by gen-sn");
    exists = sn_strategy(*k, s);
  } else if (machine == "first") {
    exists = std::make_unique<FirstConsistentExists>();
  } else {
    SolverOptions options;
    options.jobs = 1;
    exists = std::make_unique<SolverExists>(s, options);
  }
  RandomForall forall(g.seed);
  setup.machine_exists = exists.get();
  setup.machine_forall = &forall;

  if (!replay.empty()) {
    std::istringstream transcript(io.slurp(replay));
    std::string lines;
    for (const std::string& line : replay_inputs(s, setup.human, transcript)) lines += line + "\n";
    std::istringstream script(lines);
    play_interactive(s, setup, script, io.out);
  } else {
    play_interactive(s, setup, io.in, io.out);
  }
  return kVerdict;
}

int cmd_saturate(Io& io, const Globals& g, const std::string& file, std::size_t node_cap, std::size_t step_cap) {
  FinStructure s = io.structure(file);
  require_game_signature(s);
  SaturationOptions options;
  options.node_cap = node_cap;
  options.step_cap = step_cap;
  SaturationResult r = saturate_and_extract(s, options);
  if (g.json) {
    ojson j;
    j["status"] = to_string(r.status);
    j["detail"] = r.detail;
    ojson nets = ojson::array();
    for (const Network& net : r.networks) nets.push_back(network_to_json(net, s));
    j["networks"] = nets;
    j["representation"] = r.representation ? repmap_to_json(s, *r.representation) : ojson(nullptr);
    io.out << j.dump(2) << "\n";
  } else {
    io.out << to_string(r.status);
    if (!r.detail.empty()) io.out << ": " << r.detail;
    io.out << "\n";
    if (r.representation) print_rep(io.out, s, *r.representation);
  }
  switch (r.status) {
    case SaturationStatus::success:
      return kVerdict;
    case SaturationStatus::failed:
      return kNegative;
    case SaturationStatus::inconclusive:
      return kInconclusive;
  }
  return kVerdict;
}

int cmd_rep_build(Io& io, const Globals& g, const std::string& builder, const std::string& file) {
  FinStructure s = io.structure(file);
  RepMap rep;
  try {
    if (builder == "cayley")
      rep = cayley_rep(s);
    else if (builder == "zareckii")
      rep = zareckii_rep(s);
    else
      rep = closed_set_rep(s);
  } catch (const RepresentationFailure& e) {
    io.err << "relrep: " << e.what() << "\n";
    for (const Violation& v : e.violations()) io.err << "  " << describe(v) << "\n";
    return kNegative;
  } catch (const SignatureError&) {
    throw;
  } catch (const Inconclusive&) {
    throw;
  } catch (const Error& e) {
    // The structure does not meet the builder's requirements.
    io.err << "relrep: " << e.what() << "\n";
    return kNegative;
  }
  if (g.json)
    io.out << repmap_to_json(s, rep).dump() << "\n";
  else
    print_rep(io.out, s, rep);
  return kVerdict;
}

int cmd_rep_verify(Io& io, const Globals& g, const std::string& file, const std::string& repfile) {
  FinStructure s = io.structure(file);
  RepMap rep = repmap_from_json(s, io.json_file(repfile));
  auto violations = verify_representation(s, rep);
  if (g.json) {
    ojson j;
    j["valid"] = violations.empty();
    ojson list = ojson::array();
    for (const Violation& v : violations) {
      ojson x;
      x["clause"] = v.clause;
      x["elements"] = v.elements;
      x["detail"] = v.detail;
      list.push_back(x);
    }
    j["violations"] = list;
    io.out << j.dump(2) << "\n";
  } else if (violations.empty()) {
    io.out << "representation verified\n";
  } else {
    for (const Violation& v : violations) io.out << describe(v) << "\n";
  }
  return violations.empty() ? kVerdict : kNegative;
}

int cmd_oracle(Io& io, const Globals& g, const std::string& file, std::size_t max_base) {
  FinStructure s = io.structure(file);
  OracleOptions options;
  options.max_base = max_base;
  OracleResult r = brute_force_search(s, options);
  if (g.json) {
    ojson j;
    j["searched_up_to"] = r.searched_up_to;
    j["representation"] = r.representation ? repmap_to_json(s, *r.representation) : ojson(nullptr);
    io.out << j.dump() << "\n";
  } else if (r.representation) {
    print_rep(io.out, s, *r.representation);
  } else {
    io.out << "none up to base " << r.searched_up_to << "\n";
  }
  return r.representation ? kVerdict : kNegative;
}

std::string prec_dot(const FinStructure& s) {
  PrecClosure closure(s);
  std::ostringstream out;
  out << "digraph \"" << s.name() << "\" {\n";
  for (Elem e = 0; e < s.size(); ++e) out << "  n" << e << " [label=\"" << s.id(e) << "\"];\n";
  for (auto [a, b] : closure.pairs())
    if (a != b) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

int cmd_export_dot(Io& io, const std::string& file, const std::string& repfile, const std::string& netfile,
                   const std::string& element) {
  FinStructure s = io.structure(file);
  if (!repfile.empty()) {
    RepMap rep = repmap_from_json(s, io.json_file(repfile));
    std::optional<Elem> only;
    if (!element.empty()) {
      only = s.find(element);
      if (!only) throw Error("unknown element " + element);
    }
    io.out << repmap_to_dot(s, rep, only);
  } else if (!netfile.empty()) {
    io.out << network_to_dot(network_from_json(s, io.json_file(netfile)), s);
  } else {
    io.out << prec_dot(s);
  }
  return kVerdict;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite relation structures: validation, refinement cycles, games and representations", "relrep"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--seed", g.seed, "Seed for randomized play")->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads for the game solver")->check(CLI::Range(1u, 256u));

  std::string file, file2, variant = "demonic", role, machine = "solver", replay, check, repfile, netfile, element;
  std::size_t n = 0, moves = 1, node_cap = 8, step_cap = 20000, max_base = 3;
  bool one_sided = false, prune = false;

  auto* validate = app.add_subcommand("validate", "Check well-formedness and lint laws");
  validate->add_option("file", file, "Structure file or -")->required();

  auto* gensn = app.add_subcommand("gen-sn", "Print the structure S_n");
  gensn->add_option("n", n, "Family index")->required()->check(CLI::Range(1, 1000));

  auto* cycle = app.add_subcommand("cycle", "Find a refinement-preorder cycle with a certificate");
  cycle->add_option("file", file, "Structure file or -")->required();
  cycle->add_flag("--one-sided", one_sided, "Also close under one-sided monotonicity");
  cycle->add_option("--check", check, "Replay a certificate instead of searching");

  auto* triangle = app.add_subcommand("triangle", "Closure of the triangle relation");
  triangle->add_option("file", file, "Structure file or -")->required();
  triangle->add_option("--variant", variant, "angelic or demonic")
      ->check(CLI::IsMember({"angelic", "demonic"}))
      ->capture_default_str();

  auto* game = app.add_subcommand("game", "The representation game");
  game->require_subcommand(1);
  auto* solve = game->add_subcommand("solve", "Decide whether exists survives n moves");
  solve->add_option("file", file, "Structure file or -")->required();
  solve->add_option("-n", moves, "Moves after the init move")->required();
  solve->add_flag("--prune", prune, "Skip challenges already answered");
  auto* play = game->add_subcommand("play", "Play against a machine strategy");
  play->add_option("file", file, "Structure file or -")->required();
  play->add_option("--role", role, "Side played by the user")->required()->check(CLI::IsMember({"forall", "exists"}));
  play->add_option("-n", moves, "Moves after the init move")->required();
  play->add_option("--machine", machine, "Machine exists strategy")
      ->check(CLI::IsMember({"solver", "sn", "first"}))
      ->capture_default_str();
  play->add_option("--replay", replay, "Feed the user moves of a JSON-lines transcript");

  auto* saturate = app.add_subcommand("saturate", "Build a representation by saturating networks");
  saturate->add_option("file", file, "Structure file or -")->required();
  saturate->add_option("--node-cap", node_cap, "Nodes per network")->capture_default_str();
  saturate->add_option("--step-cap", step_cap, "Search steps before giving up")->capture_default_str();

  auto* rep = app.add_subcommand("rep", "Representation builders and verification");
  rep->require_subcommand(1);
  std::string builder;
  for (const char* name : {"cayley", "zareckii", "closed-set"}) {
    auto* sub = rep->add_subcommand(name, std::string("Build the ") + name + " representation");
    sub->add_option("file", file, "Structure file or -")->required();
    sub->callback([&builder, name] { builder = name; });
  }
  auto* verify = rep->add_subcommand("verify", "Check a representation map");
  verify->add_option("file", file, "Structure file or -")->required();
  verify->add_option("repmap", file2, "Representation JSON")->required();

  auto* oracle = app.add_subcommand("oracle", "Exhaustive search for a small representation");
  oracle->add_option("file", file, "Structure file or -")->required();
  oracle->add_option("--max-base", max_base, "Largest base tried")->capture_default_str()->check(CLI::Range(1, 4));

  auto* exp = app.add_subcommand("export", "Graph output");
  exp->require_subcommand(1);
  auto* dot = exp->add_subcommand("dot", "DOT for a structure's preorder, a representation or a network");
  dot->add_option("file", file, "Structure file or -")->required();
  auto* rep_opt = dot->add_option("--repmap", repfile, "Representation JSON");
  dot->add_option("--network", netfile, "Network JSON")->excludes(rep_opt);
  dot->add_option("--element", element, "Only this element's relation")->needs(rep_opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kVerdict : kUsage;
  }

  Io io(in, out, err);
  try {
    if (*validate) return cmd_validate(io, g, file);
    if (*gensn) {
      out << serialize_structure(gen_sn(n));
      return kVerdict;
    }
    if (*cycle) return cmd_cycle(io, g, file, one_sided, check);
    if (*triangle) return cmd_triangle(io, g, file, variant);
    if (*solve) return cmd_solve(io, g, file, moves, prune);
    if (*play) return cmd_play(io, g, file, role, moves, machine, replay);
    if (*saturate) return cmd_saturate(io, g, file, node_cap, step_cap);
    if (*verify) return cmd_rep_verify(io, g, file, file2);
    if (*rep) return cmd_rep_build(io, g, builder, file);
    if (*oracle) return cmd_oracle(io, g, file, max_base);
    if (*dot) return cmd_export_dot(io, file, repfile, netfile, element);
  } catch (const Inconclusive& e) {
    err << "relrep: inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const Error& e) {
    err << "relrep: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "relrep: " << e.what() << "\n";
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace relrep
