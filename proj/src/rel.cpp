#include "relrep/rel.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <unordered_set>

#include "relrep/error.hpp"

namespace relrep {

namespace {

std::size_t words_for(std::size_t base) { return (base + 63) / 64; }

void require_same_base(const Rel& r, const Rel& s) {
  if (r.base() != s.base()) throw BaseMismatch(r.base(), s.base());
}

}  // namespace

Rel::Rel(std::size_t base) : base_(base), stride_(words_for(base)), words_(base * words_for(base), 0) {
  if (base == 0) throw Error("base must have at least one point");
}

Rel::Rel(std::size_t base, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) : Rel(base) {
  for (auto [x, y] : pairs) {
    if (x >= base || y >= base) {
      throw Error("pair (" + std::to_string(x) + "," + std::to_string(y) + ") outside base " +
                  std::to_string(base));
    }
    insert(x, y);
  }
}

Rel Rel::identity(std::size_t base) {
  Rel r(base);
  for (std::size_t x = 0; x < base; ++x) r.insert(x, x);
  return r;
}

Rel Rel::universal(std::size_t base) {
  Rel r(base);
  for (std::size_t x = 0; x < base; ++x)
    for (std::size_t y = 0; y < base; ++y) r.insert(x, y);
  return r;
}

Rel Rel::from_code(std::size_t base, std::uint64_t code) {
  Rel r(base);
  for (std::size_t i = 0; i < base * base; ++i)
    if ((code >> i) & 1u) r.insert(i / base, i % base);
  return r;
}

bool Rel::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Rel::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Rel::has_successor(std::size_t x) const {
  const auto* rx = row(x);
  for (std::size_t k = 0; k < stride_; ++k)
    if (rx[k]) return true;
  return false;
}

bool Rel::subset_of(const Rel& other) const {
  require_same_base(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> Rel::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < base_; ++x)
    for (std::size_t y = 0; y < base_; ++y)
      if (contains(x, y)) out.emplace_back(x, y);
  return out;
}

std::strong_ordering Rel::operator<=>(const Rel& other) const {
  if (auto c = base_ <=> other.base_; c != 0) return c;
  if (auto c = count() <=> other.count(); c != 0) return c;
  // Same cardinality: the first differing cell decides. The relation holding
  // the earlier pair sorts first.
  for (std::size_t x = 0; x < base_; ++x) {
    for (std::size_t y = 0; y < base_; ++y) {
      bool a = contains(x, y);
      bool b = other.contains(x, y);
      if (a != b) return a ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

std::size_t Rel::hash() const {
  std::size_t h = base_ * 0x9e3779b97f4a7c15ULL;
  for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string Rel::to_string() const {
  std::string out = "{";
  bool first = true;
  for (auto [x, y] : pairs()) {
    if (!first) out += ",";
    first = false;
    out += "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  }
  out += "}";
  return out;
}

Rel compose_angelic(const Rel& r, const Rel& s) {
  require_same_base(r, s);
  Rel out(r.base());
  for (std::size_t x = 0; x < r.base(); ++x) {
    auto* dst = out.row(x);
    for (std::size_t y = 0; y < r.base(); ++y) {
      if (!r.contains(x, y)) continue;
      const auto* src = s.row(y);
      for (std::size_t k = 0; k < out.stride_; ++k) dst[k] |= src[k];
    }
  }
  return out;
}

Rel compose_demonic(const Rel& r, const Rel& s) {
  require_same_base(r, s);
  Rel out = compose_angelic(r, s);
  // A point keeps its row only if every r-successor lies in the domain of s.
  for (std::size_t x = 0; x < r.base(); ++x) {
    bool total = true;
    for (std::size_t z = 0; z < r.base() && total; ++z)
      if (r.contains(x, z) && !s.has_successor(z)) total = false;
    if (!total) {
      auto* dst = out.row(x);
      std::fill(dst, dst + out.stride_, 0);
    }
  }
  return out;
}

Rel compose(CompositionKind kind, const Rel& r, const Rel& s) {
  switch (kind) {
    case CompositionKind::angelic:
      return compose_angelic(r, s);
    case CompositionKind::demonic:
      return compose_demonic(r, s);
    case CompositionKind::none:
      break;
  }
  throw SignatureError("signature has no composition");
}

Rel dom(const Rel& r) {
  Rel out(r.base());
  for (std::size_t x = 0; x < r.base(); ++x)
    if (r.has_successor(x)) out.insert(x, x);
  return out;
}

Rel rng(const Rel& r) {
  Rel out(r.base());
  for (std::size_t x = 0; x < r.base(); ++x)
    for (std::size_t y = 0; y < r.base(); ++y)
      if (r.contains(x, y)) out.insert(y, y);
  return out;
}

Rel converse(const Rel& r) {
  Rel out(r.base());
  for (auto [x, y] : r.pairs()) out.insert(y, x);
  return out;
}

bool refines_demonic(const Rel& r, const Rel& s) {
  require_same_base(r, s);
  Rel ds = dom(s);
  return ds.subset_of(dom(r)) && compose_angelic(ds, r).subset_of(s);
}

Rel parse_rel(std::string_view text, std::size_t base) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> Rel {
    throw ParseError(1, pos + 1, "relation literal: " + what);
  };
  auto expect = [&](char c) {
    if (pos >= t.size() || t[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  };
  auto number = [&]() -> std::size_t {
    std::size_t start = pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    if (start == pos) fail("expected a point index");
    return std::stoul(t.substr(start, pos - start));
  };

  Rel out(base);
  expect('{');
  if (pos < t.size() && t[pos] == '}') {
    ++pos;
  } else {
    while (true) {
      expect('(');
      std::size_t x = number();
      expect(',');
      std::size_t y = number();
      expect(')');
      if (x >= base || y >= base) fail("point outside base " + std::to_string(base));
      out.insert(x, y);
      if (pos < t.size() && t[pos] == ',') {
        ++pos;
        continue;
      }
      expect('}');
      break;
    }
  }
  if (pos != t.size()) fail("trailing characters");
  return out;
}

std::vector<Rel> generate_concrete(std::size_t base, const std::vector<Rel>& generators,
                                   const Signature& signature, std::size_t cap) {
  std::vector<Rel> found;
  std::unordered_set<Rel, RelHash> seen;
  std::deque<std::size_t> pending;

  auto add = [&](Rel r) {
    if (r.base() != base) throw BaseMismatch(base, r.base());
    if (seen.contains(r)) return;
    if (found.size() >= cap)
      throw Inconclusive("closure exceeds cap of " + std::to_string(cap) + " relations");
    seen.insert(r);
    found.push_back(std::move(r));
    pending.push_back(found.size() - 1);
  };

  for (const auto& g : generators) add(g);
  if (signature.zero) add(Rel(base));
  if (signature.one) add(Rel::universal(base));
  if (signature.identity) add(Rel::identity(base));

  while (!pending.empty()) {
    std::size_t i = pending.front();
    pending.pop_front();
    // Copy: `found` may reallocate while we add.
    Rel r = found[i];
    if (signature.domain) add(dom(r));
    if (signature.range) add(rng(r));
    if (signature.converse) add(converse(r));
    if (signature.has_composition()) {
      for (std::size_t j = 0; j <= i; ++j) {
        Rel s = found[j];
        add(compose(signature.composition, r, s));
        add(compose(signature.composition, s, r));
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<Rel> all_relations(std::size_t base) {
  if (base * base >= 63) throw Error("too many relations to enumerate");
  std::vector<Rel> out;
  const std::uint64_t total = std::uint64_t{1} << (base * base);
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) out.push_back(Rel::from_code(base, code));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace relrep
