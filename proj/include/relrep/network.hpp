#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "relrep/structure.hpp"

namespace relrep {

using Node = std::uint32_t;

// A game network over a fixed structure: nodes 0..k-1 and two labelings of
// node pairs by element sets. Node ids are nominal: two networks that differ
// by a renaming are different networks. The fresh node x+ is always id k.
class Network {
 public:
  Network() = default;
  explicit Network(std::size_t elements, std::size_t nodes = 0);

  std::size_t element_count() const { return elements_; }
  std::size_t node_count() const { return nodes_; }
  Node fresh() const { return static_cast<Node>(nodes_); }

  bool top(Node x, Node y, Elem a) const { return test(top_, x, y, a); }
  bool bot(Node x, Node y, Elem a) const { return test(bot_, x, y, a); }
  std::vector<Elem> top_labels(Node x, Node y) const { return labels(top_, x, y); }
  std::vector<Elem> bot_labels(Node x, Node y) const { return labels(bot_, x, y); }

  // In-place versions of +top / +bot. x and y must be existing nodes or fresh().
  void put_top(Node x, Node y, Elem a);
  void put_bot(Node x, Node y, Elem a);

  // Raw words of one label set, for hashing and canonical forms.
  const std::uint64_t* top_words(Node x, Node y) const { return &top_[cell(x, y)]; }
  const std::uint64_t* bot_words(Node x, Node y) const { return &bot_[cell(x, y)]; }
  std::size_t words_per_label() const { return words_; }

  // Same network with node p[i] renamed to i (p is a permutation of nodes).
  Network permuted(const std::vector<Node>& order) const;

  bool operator==(const Network&) const = default;

 private:
  std::size_t cell(Node x, Node y) const { return (static_cast<std::size_t>(x) * nodes_ + y) * words_; }
  bool test(const std::vector<std::uint64_t>& bits, Node x, Node y, Elem a) const;
  std::vector<Elem> labels(const std::vector<std::uint64_t>& bits, Node x, Node y) const;
  void grow_to(std::size_t nodes);
  void put(std::vector<std::uint64_t>& bits, Node x, Node y, Elem a);

  std::size_t elements_ = 0;
  std::size_t words_ = 0;
  std::size_t nodes_ = 0;
  std::vector<std::uint64_t> top_;
  std::vector<std::uint64_t> bot_;
};

// ⊤ and ⊥ disjoint on every pair, and D/R values only on loops.
bool consistent(const Network& n, const FinStructure& s);

// ({x}, ⊥(x,x) = {b}, ⊤(x,x) = {a}).
Network net_ref(const FinStructure& s, Elem a, Elem b);
// ({x,y}, ⊥(x,y) = {b}, ⊤(x,y) = {a}).
Network net_nref(const FinStructure& s, Elem a, Elem b);
// One node, a on its loop, nothing forbidden.
Network net_single(const FinStructure& s, Elem a);

Network add_top(const Network& n, Node x, Node y, Elem a);
Network add_bot(const Network& n, Node x, Node y, Elem a);

// n1's nodes are among n2's and every label of n1 is contained in n2's.
bool extends(const Network& n1, const Network& n2);

// Nodes in order; solid edges for ⊤, dashed for ⊥.
std::string network_to_dot(const Network& n, const FinStructure& s, const std::string& name = "network");
nlohmann::ordered_json network_to_json(const Network& n, const FinStructure& s);
Network network_from_json(const FinStructure& s, const nlohmann::json& j);

}  // namespace relrep
