#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "relrep/signature.hpp"

namespace relrep {

// Index of an element in its structure's declaration order.
using Elem = std::uint32_t;
inline constexpr Elem kUndefined = std::numeric_limits<Elem>::max();

enum class Constant { zero, one, identity };

// A finite abstract structure: element ids plus operation tables indexed by
// declaration order. Tables of operations absent from the signature are empty.
// Entries may be kUndefined while a structure is being assembled; the parser
// never returns such a structure and validate_structure reports them.
class FinStructure {
 public:
  FinStructure() = default;
  FinStructure(std::string name, Signature signature, std::vector<std::string> elements);

  const std::string& name() const { return name_; }
  const Signature& signature() const { return signature_; }
  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(Elem e) const { return ids_.at(e); }
  std::optional<Elem> find(std::string_view id) const;
  // Like find, but throws Error("unknown element ...").
  Elem at(std::string_view id) const;

  Elem compose(Elem a, Elem b) const { return compose_[static_cast<std::size_t>(a) * size() + b]; }
  Elem dom(Elem a) const { return dom_[a]; }
  Elem rng(Elem a) const { return rng_[a]; }
  Elem conv(Elem a) const { return conv_[a]; }
  bool leq(Elem a, Elem b) const {
    if (!signature_.order) return a == b;
    return leq_[static_cast<std::size_t>(a) * size() + b] != 0;
  }
  std::optional<Elem> constant(Constant c) const;

  void set_compose(Elem a, Elem b, Elem c) { compose_[static_cast<std::size_t>(a) * size() + b] = c; }
  void set_dom(Elem a, Elem b);
  void set_rng(Elem a, Elem b);
  void set_conv(Elem a, Elem b) { conv_[a] = b; }
  void set_leq(Elem a, Elem b, bool on = true) { leq_[static_cast<std::size_t>(a) * size() + b] = on ? 1 : 0; }
  void set_constant(Constant c, Elem e);

  void rename(std::string name) { name_ = std::move(name); }

  // Elements in the image of D or R.
  bool is_domain_range_element(Elem e) const { return image_count_[e] != 0; }

  // True when every table entry present in the signature is defined.
  bool total() const;

  bool operator==(const FinStructure& other) const;

 private:
  std::string name_;
  Signature signature_;
  std::vector<std::string> ids_;
  std::unordered_map<std::string, Elem> index_;
  std::vector<Elem> compose_;
  std::vector<Elem> dom_;
  std::vector<Elem> rng_;
  std::vector<Elem> conv_;
  std::vector<std::uint8_t> leq_;
  std::optional<Elem> zero_;
  std::optional<Elem> one_;
  std::optional<Elem> identity_;
  // How often each element occurs as a value of D or R.
  std::vector<std::uint32_t> image_count_;
};

std::string to_string(Constant c);

}  // namespace relrep
