#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relrep/structure.hpp"

namespace relrep {

// Ground laws checked by enumeration over all variable assignments.
enum class Law {
  demonic_domain_soundness,  // D(s*D(t))*s = s*D(t)
  domain_idempotent,         // D(D(x)) = D(x)
  range_idempotent,          // R(R(x)) = R(x)
  domain_absorption,         // D(x)∘x = x
  range_absorption,          // x∘R(x) = x
  associativity,             // (x∘y)∘z = x∘(y∘z)
};

std::string law_id(Law law);
std::optional<Law> law_from_id(std::string_view id);
std::size_t law_arity(Law law);
// Laws that hold in every proper structure whose signature supports them.
std::vector<Law> lint_laws(const Signature& sig);
bool law_applies(Law law, const Signature& sig);

using Assignment = std::vector<Elem>;

// Every assignment of elements to the law's variables (in order) where the
// two sides differ. Throws SignatureError when the law uses an operation
// the structure does not have. `limit` bounds the returned list.
std::vector<Assignment> check_equation(const FinStructure& s, Law law, std::size_t limit = SIZE_MAX);

enum class Severity { ok, warning, error };

struct Finding {
  std::string law;
  Severity status = Severity::ok;
  std::vector<std::string> counterexample;
  std::string message;
};

struct ValidationReport {
  Severity level = Severity::ok;
  std::vector<Finding> findings;

  std::size_t error_count() const;
  std::size_t warning_count() const;
  bool has_error(std::string_view law) const;
};

// Errors for malformed structures (undefined entries, converse not an
// involution, order not a partial order, bad constants, bad signature);
// warnings for lint laws that fail. Passing lint laws are listed with
// status ok.
ValidationReport validate_structure(const FinStructure& s);

std::string to_string(Severity s);

}  // namespace relrep
