#include "relrep/signature.hpp"

#include "relrep/error.hpp"

namespace relrep {

std::string to_string(CompositionKind kind) {
  switch (kind) {
    case CompositionKind::angelic:
      return "angelic";
    case CompositionKind::demonic:
      return "demonic";
    case CompositionKind::none:
      break;
  }
  return "none";
}

void Signature::check() const {
  if (composition == CompositionKind::demonic) {
    if (converse) throw SignatureError("demonic composition cannot be combined with converse");
    if (!domain) throw SignatureError("demonic composition requires D");
  }
}

std::string Signature::describe() const {
  std::string out = "{";
  auto item = [&](bool on, const char* name) {
    if (!on) return;
    if (out.size() > 1) out += ",";
    out += name;
  };
  item(zero, "0");
  item(one, "1");
  item(domain, "D");
  item(range, "R");
  item(order, "<=");
  item(identity, "1'");
  item(converse, "conv");
  item(composition == CompositionKind::angelic, ";");
  item(composition == CompositionKind::demonic, "*");
  return out + "}";
}

}  // namespace relrep
