#pragma once

#include <string>

namespace relrep {

enum class CompositionKind { none, angelic, demonic };

// Which operations, relations and constants a structure carries.
struct Signature {
  CompositionKind composition = CompositionKind::none;
  bool domain = false;
  bool range = false;
  bool converse = false;
  bool order = false;
  bool zero = false;
  bool one = false;
  bool identity = false;

  bool operator==(const Signature&) const = default;

  bool has_composition() const { return composition != CompositionKind::none; }

  // Throws SignatureError when the combination is not one we support:
  // demonic composition needs D and excludes converse.
  void check() const;

  // Human-readable form, e.g. "{D,R,*}".
  std::string describe() const;

  static Signature domain_range(CompositionKind kind) {
    Signature s;
    s.composition = kind;
    s.domain = s.range = true;
    return s;
  }
};

std::string to_string(CompositionKind kind);

}  // namespace relrep
