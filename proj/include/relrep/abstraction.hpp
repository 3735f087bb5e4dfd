#pragma once

#include <string>
#include <vector>

#include "relrep/rel.hpp"
#include "relrep/representation.hpp"
#include "relrep/structure.hpp"

namespace relrep {

struct ProperAbstraction {
  FinStructure structure;
  RepMap representation;  // element -> its relation; a representation by construction
};

// Reads the abstract tables off a set of relations closed under the
// signature's operations. Element k is named "e<k>" and stands for rels[k].
// The order, when present, is inclusion. Throws Error naming the operation
// when the set is not closed or a constant's relation is missing.
ProperAbstraction abstract_proper(const std::vector<Rel>& rels, const Signature& signature,
                                  const std::string& name = "proper");

// Elements that every representation maps to a partial function, detected
// from the tables alone: values of D and R, elements below the identity
// constant (when order and identity are present), and every R(a)∘b with
// D(a∘b) = a∘b. Result is sorted.
std::vector<Elem> forced_partial_functions(const FinStructure& s);

}  // namespace relrep
