#pragma once

// The displayed D/R values and products of S_n, written out by hand per index.

#include <string>
#include <vector>

namespace testing {

struct SnFact {
  std::string op;  // "D", "R" or "*"
  std::string x, y;  // y empty for D and R
  std::string value;
};

inline std::vector<SnFact> sn_displayed(std::size_t n) {
  const std::size_t N = 2 * n + 1;
  std::vector<SnFact> out;
  for (std::size_t i = 0; i < N; ++i) {
    auto at = [&](const char* k) { return std::string(k) + "_" + std::to_string(i); };
    const std::string next = "ab_" + std::to_string((i + 1) % N);
    for (const char* k : {"a", "ac", "acd", "ab"}) out.push_back({"D", at(k), "", "d"});
    for (const char* k : {"c", "b", "cdb"}) out.push_back({"D", at(k), "", at("m")});
    for (const char* k : {"a", "d", "cd"}) out.push_back({"R", at(k), "", at("m")});
    for (const char* k : {"d", "db"}) out.push_back({"D", at(k), "", at("eps")});
    for (const char* k : {"c", "ac"}) out.push_back({"R", at(k), "", at("eps")});
    for (const char* k : {"ab", "cdb", "db", "b"}) out.push_back({"R", at(k), "", "r"});

    out.push_back({"*", at("d"), at("c"), at("eps")});
    out.push_back({"*", at("c"), at("d"), at("cd")});
    out.push_back({"*", at("cd"), at("cd"), at("cd")});
    out.push_back({"*", at("a"), at("cdb"), next});
    out.push_back({"*", at("acd"), at("cdb"), next});
    out.push_back({"*", at("ac"), at("db"), next});
    out.push_back({"*", at("acd"), at("b"), next});
    out.push_back({"*", at("cd"), at("c"), at("c")});
    out.push_back({"*", at("d"), at("cd"), at("d")});
    out.push_back({"*", at("a"), at("b"), at("ab")});
    out.push_back({"*", at("a"), at("c"), at("ac")});
    out.push_back({"*", at("a"), at("cd"), at("acd")});
    out.push_back({"*", at("c"), at("db"), at("cdb")});
    out.push_back({"*", at("d"), at("b"), at("db")});
    out.push_back({"*", at("ac"), at("d"), at("acd")});
    out.push_back({"*", at("acd"), at("c"), at("ac")});
    out.push_back({"*", at("cd"), at("b"), at("cdb")});
  }
  // Domain-range elements: idempotent, pairwise disjoint.
  std::vector<std::string> dr = {"0", "d", "r"};
  for (std::size_t i = 0; i < N; ++i) {
    dr.push_back("m_" + std::to_string(i));
    dr.push_back("eps_" + std::to_string(i));
  }
  for (const auto& x : dr)
    for (const auto& y : dr) out.push_back({"*", x, y, x == y ? x : "0"});
  return out;
}

}  // namespace testing
