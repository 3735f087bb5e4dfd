#include "relrep/validate.hpp"

#include <algorithm>
#include <array>

#include "relrep/error.hpp"

namespace relrep {

namespace {

constexpr std::array kAllLaws = {Law::demonic_domain_soundness, Law::domain_idempotent, Law::range_idempotent,
                                 Law::domain_absorption,        Law::range_absorption,  Law::associativity};

// Two sides of a law under an assignment.
std::pair<Elem, Elem> sides(const FinStructure& s, Law law, const Assignment& v) {
  switch (law) {
    case Law::demonic_domain_soundness: {
      Elem lhs_inner = s.compose(v[0], s.dom(v[1]));
      return {s.compose(s.dom(lhs_inner), v[0]), lhs_inner};
    }
    case Law::domain_idempotent:
      return {s.dom(s.dom(v[0])), s.dom(v[0])};
    case Law::range_idempotent:
      return {s.rng(s.rng(v[0])), s.rng(v[0])};
    case Law::domain_absorption:
      return {s.compose(s.dom(v[0]), v[0]), v[0]};
    case Law::range_absorption:
      return {s.compose(v[0], s.rng(v[0])), v[0]};
    case Law::associativity:
      return {s.compose(s.compose(v[0], v[1]), v[2]), s.compose(v[0], s.compose(v[1], v[2]))};
  }
  return {0, 0};
}

}  // namespace

std::string law_id(Law law) {
  switch (law) {
    case Law::demonic_domain_soundness:
      return "demonic-domain-soundness";
    case Law::domain_idempotent:
      return "domain-idempotent";
    case Law::range_idempotent:
      return "range-idempotent";
    case Law::domain_absorption:
      return "domain-absorption";
    case Law::range_absorption:
      return "range-absorption";
    case Law::associativity:
      return "associativity";
  }
  return "?";
}

std::optional<Law> law_from_id(std::string_view id) {
  for (Law l : kAllLaws)
    if (law_id(l) == id) return l;
  return std::nullopt;
}

std::size_t law_arity(Law law) {
  switch (law) {
    case Law::demonic_domain_soundness:
      return 2;
    case Law::associativity:
      return 3;
    default:
      return 1;
  }
}

bool law_applies(Law law, const Signature& sig) {
  switch (law) {
    case Law::demonic_domain_soundness:
      return sig.composition == CompositionKind::demonic && sig.domain;
    case Law::domain_idempotent:
      return sig.domain;
    case Law::range_idempotent:
      return sig.range;
    case Law::domain_absorption:
      return sig.domain && sig.has_composition();
    case Law::range_absorption:
      return sig.range && sig.has_composition();
    case Law::associativity:
      return sig.has_composition();
  }
  return false;
}

std::vector<Law> lint_laws(const Signature& sig) {
  std::vector<Law> out;
  for (Law l : {Law::domain_idempotent, Law::range_idempotent, Law::domain_absorption, Law::range_absorption,
                Law::associativity})
    if (law_applies(l, sig)) out.push_back(l);
  return out;
}

std::vector<Assignment> check_equation(const FinStructure& s, Law law, std::size_t limit) {
  if (!law_applies(law, s.signature()))
    throw SignatureError("law " + law_id(law) + " needs operations missing from " + s.signature().describe());
  if (!s.total()) throw Error("structure has undefined table entries");

  std::vector<Assignment> out;
  const std::size_t k = law_arity(law);
  const std::size_t n = s.size();
  Assignment v(k, 0);
  while (out.size() < limit) {
    auto [lhs, rhs] = sides(s, law, v);
    if (lhs != rhs) out.push_back(v);
    // Odometer over n^k assignments, last variable fastest.
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++v[i] < n) break;
      v[i] = 0;
      if (i == 0) return out;
    }
    if (k == 0) break;
  }
  return out;
}

std::string to_string(Severity s) {
  switch (s) {
    case Severity::ok:
      return "ok";
    case Severity::warning:
      return "warning";
    case Severity::error:
      return "error";
  }
  return "?";
}

std::size_t ValidationReport::error_count() const {
  return static_cast<std::size_t>(
      std::count_if(findings.begin(), findings.end(), [](const Finding& f) { return f.status == Severity::error; }));
}

std::size_t ValidationReport::warning_count() const {
  return static_cast<std::size_t>(std::count_if(findings.begin(), findings.end(),
                                                [](const Finding& f) { return f.status == Severity::warning; }));
}

bool ValidationReport::has_error(std::string_view law) const {
  return std::any_of(findings.begin(), findings.end(),
                     [&](const Finding& f) { return f.status == Severity::error && f.law == law; });
}

ValidationReport validate_structure(const FinStructure& s) {
  ValidationReport report;
  const Signature& sig = s.signature();
  const std::size_t n = s.size();

  auto error = [&](std::string law, std::vector<Elem> where, std::string message) {
    Finding f{std::move(law), Severity::error, {}, std::move(message)};
    for (Elem e : where) f.counterexample.push_back(s.id(e));
    report.findings.push_back(std::move(f));
  };

  try {
    sig.check();
  } catch (const SignatureError& e) {
    error("signature", {}, e.what());
  }

  if (!s.total()) error("totality", {}, "table has undefined entries");

  if (sig.converse && s.total()) {
    for (Elem a = 0; a < n; ++a) {
      if (s.conv(s.conv(a)) != a) {
        error("converse-involution", {a}, "converse is not an involution");
        break;
      }
    }
  }

  if (sig.order) {
    for (Elem a = 0; a < n; ++a) {
      if (!s.leq(a, a)) {
        error("order-reflexive", {a}, "order not reflexive");
        break;
      }
    }
    [&] {
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          if (a != b && s.leq(a, b) && s.leq(b, a)) return error("order-antisymmetric", {a, b}, "order not antisymmetric");
    }();
    [&] {
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          if (s.leq(a, b))
            for (Elem c = 0; c < n; ++c)
              if (s.leq(b, c) && !s.leq(a, c)) return error("order-transitive", {a, b, c}, "order not transitive");
    }();
  }

  if (s.total()) {
    for (Law law : lint_laws(sig)) {
      auto bad = check_equation(s, law, 1);
      Finding f{law_id(law), Severity::ok, {}, "holds"};
      if (!bad.empty()) {
        f.status = Severity::warning;
        f.message = "fails";
        for (Elem e : bad.front()) f.counterexample.push_back(s.id(e));
      }
      report.findings.push_back(std::move(f));
    }
  }

  if (report.error_count() > 0) {
    report.level = Severity::error;
  } else if (report.warning_count() > 0) {
    report.level = Severity::warning;
  }
  return report;
}

}  // namespace relrep
