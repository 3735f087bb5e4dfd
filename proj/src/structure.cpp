#include "relrep/structure.hpp"

#include "relrep/error.hpp"

namespace relrep {

std::string to_string(Constant c) {
  switch (c) {
    case Constant::zero:
      return "zero";
    case Constant::one:
      return "one";
    case Constant::identity:
      return "id";
  }
  return "?";
}

FinStructure::FinStructure(std::string name, Signature signature, std::vector<std::string> elements)
    : name_(std::move(name)), signature_(signature), ids_(std::move(elements)) {
  const std::size_t n = ids_.size();
  for (Elem e = 0; e < n; ++e) {
    if (!index_.emplace(ids_[e], e).second) throw Error("duplicate element id '" + ids_[e] + "'");
  }
  if (signature_.has_composition()) compose_.assign(n * n, kUndefined);
  if (signature_.domain) dom_.assign(n, kUndefined);
  if (signature_.range) rng_.assign(n, kUndefined);
  if (signature_.converse) conv_.assign(n, kUndefined);
  if (signature_.order) leq_.assign(n * n, 0);
  image_count_.assign(n, 0);
}

std::optional<Elem> FinStructure::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem FinStructure::at(std::string_view id) const {
  if (auto e = find(id)) return *e;
  throw Error("unknown element '" + std::string(id) + "'");
}

void FinStructure::set_dom(Elem a, Elem b) {
  if (dom_[a] != kUndefined) --image_count_[dom_[a]];
  dom_[a] = b;
  if (b != kUndefined) ++image_count_[b];
}

void FinStructure::set_rng(Elem a, Elem b) {
  if (rng_[a] != kUndefined) --image_count_[rng_[a]];
  rng_[a] = b;
  if (b != kUndefined) ++image_count_[b];
}

std::optional<Elem> FinStructure::constant(Constant c) const {
  switch (c) {
    case Constant::zero:
      return zero_;
    case Constant::one:
      return one_;
    case Constant::identity:
      return identity_;
  }
  return std::nullopt;
}

void FinStructure::set_constant(Constant c, Elem e) {
  switch (c) {
    case Constant::zero:
      zero_ = e;
      break;
    case Constant::one:
      one_ = e;
      break;
    case Constant::identity:
      identity_ = e;
      break;
  }
}

bool FinStructure::total() const {
  auto defined = [](const std::vector<Elem>& v) {
    for (Elem e : v)
      if (e == kUndefined) return false;
    return true;
  };
  if (!defined(compose_) || !defined(dom_) || !defined(rng_) || !defined(conv_)) return false;
  if (signature_.zero && !zero_) return false;
  if (signature_.one && !one_) return false;
  if (signature_.identity && !identity_) return false;
  return true;
}

bool FinStructure::operator==(const FinStructure& other) const {
  return name_ == other.name_ && signature_ == other.signature_ && ids_ == other.ids_ &&
         compose_ == other.compose_ && dom_ == other.dom_ && rng_ == other.rng_ && conv_ == other.conv_ &&
         leq_ == other.leq_ && zero_ == other.zero_ && one_ == other.one_ && identity_ == other.identity_;
}

}  // namespace relrep
