#pragma once

#include <string>
#include <vector>

#include "relrep/rel.hpp"
#include "relrep/structure.hpp"

namespace relrep {

// An assignment of one relation per element (declaration order), all over
// the same base.
struct RepMap {
  std::size_t base = 0;
  std::vector<Rel> assignment;

  const Rel& operator[](Elem e) const { return assignment.at(e); }
  bool operator==(const RepMap&) const = default;
};

struct Violation {
  std::string clause;  // e.g. "faithful", "compose", "domain", "order", "zero"
  std::vector<std::string> elements;
  std::string detail;
};

// Empty iff `rep` is an isomorphism of `s` onto a proper structure: injective,
// commuting with every signature operation, order as inclusion, zero as the
// empty relation, identity as a partial identity that is a two-sided unit,
// one as an equivalence relation on its field containing every element.
std::vector<Violation> verify_representation(const FinStructure& s, const RepMap& rep);

std::string describe(const Violation& v);

}  // namespace relrep
