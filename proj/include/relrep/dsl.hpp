#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "relrep/structure.hpp"

namespace relrep {

// Line-oriented structure format:
//
//   structure <name>
//   signature compose=<angelic|demonic|none> [D] [R] [conv] [le] [zero] [one] [id]
//   elements <id> <id> ...
//   domain <x> = <y>      range <x> = <y>      converse <x> = <y>
//   compose <x> <y> = <z> default compose = <z>
//   le <x> <y>
//   const zero|one|id = <x>
//   end
//
// `#` starts a comment. Reflexive order pairs are implied; no other closure is
// applied. Throws ParseError (with line and column) on any violation,
// including an incomplete table with no `default compose`.
FinStructure parse_structure(std::string_view text);
FinStructure parse_structure(std::istream& in);

// Deterministic text form accepted by parse_structure. The most frequent
// composition value is written as `default compose` when that is shorter.
std::string serialize_structure(const FinStructure& s);

}  // namespace relrep
