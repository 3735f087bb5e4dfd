#include "relrep/network.hpp"

#include <sstream>

#include "relrep/error.hpp"

namespace relrep {

Network::Network(std::size_t elements, std::size_t nodes)
    : elements_(elements), words_((elements + 63) / 64), nodes_(0) {
  if (words_ == 0) words_ = 1;
  grow_to(nodes);
}

bool Network::test(const std::vector<std::uint64_t>& bits, Node x, Node y, Elem a) const {
  if (x >= nodes_ || y >= nodes_ || a >= elements_) return false;
  return (bits[cell(x, y) + a / 64] >> (a % 64)) & 1U;
}

std::vector<Elem> Network::labels(const std::vector<std::uint64_t>& bits, Node x, Node y) const {
  std::vector<Elem> out;
  if (x >= nodes_ || y >= nodes_) return out;
  const std::size_t base = cell(x, y);
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t word = bits[base + w];
    while (word != 0) {
      int bit = __builtin_ctzll(word);
      out.push_back(static_cast<Elem>(w * 64 + bit));
      word &= word - 1;
    }
  }
  return out;
}

void Network::grow_to(std::size_t nodes) {
  if (nodes <= nodes_) return;
  std::vector<std::uint64_t> top(nodes * nodes * words_, 0), bot(nodes * nodes * words_, 0);
  for (std::size_t x = 0; x < nodes_; ++x) {
    for (std::size_t y = 0; y < nodes_; ++y) {
      const std::size_t from = (x * nodes_ + y) * words_;
      const std::size_t to = (x * nodes + y) * words_;
      for (std::size_t w = 0; w < words_; ++w) {
        top[to + w] = top_[from + w];
        bot[to + w] = bot_[from + w];
      }
    }
  }
  top_ = std::move(top);
  bot_ = std::move(bot);
  nodes_ = nodes;
}

void Network::put(std::vector<std::uint64_t>& bits, Node x, Node y, Elem a) {
  if (a >= elements_) throw Error("label " + std::to_string(a) + " outside the structure");
  if (x > nodes_ || y > nodes_) throw Error("node " + std::to_string(std::max(x, y)) + " is neither present nor fresh");
  if (x == nodes_ || y == nodes_) grow_to(nodes_ + 1);
  bits[cell(x, y) + a / 64] |= std::uint64_t{1} << (a % 64);
}

void Network::put_top(Node x, Node y, Elem a) { put(top_, x, y, a); }
void Network::put_bot(Node x, Node y, Elem a) { put(bot_, x, y, a); }

Network Network::permuted(const std::vector<Node>& order) const {
  Network out(elements_, nodes_);
  for (std::size_t i = 0; i < nodes_; ++i) {
    for (std::size_t j = 0; j < nodes_; ++j) {
      const std::size_t from = cell(order[i], order[j]);
      const std::size_t to = out.cell(static_cast<Node>(i), static_cast<Node>(j));
      for (std::size_t w = 0; w < words_; ++w) {
        out.top_[to + w] = top_[from + w];
        out.bot_[to + w] = bot_[from + w];
      }
    }
  }
  return out;
}

bool consistent(const Network& n, const FinStructure& s) {
  const auto k = static_cast<Node>(n.node_count());
  const std::size_t words = n.words_per_label();
  for (Node x = 0; x < k; ++x) {
    for (Node y = 0; y < k; ++y) {
      const std::uint64_t* top = n.top_words(x, y);
      const std::uint64_t* bot = n.bot_words(x, y);
      for (std::size_t w = 0; w < words; ++w)
        if (top[w] & bot[w]) return false;
      if (x == y) continue;
      for (Elem a : n.top_labels(x, y))
        if (s.is_domain_range_element(a)) return false;
    }
  }
  return true;
}

Network net_ref(const FinStructure& s, Elem a, Elem b) {
  Network n(s.size(), 1);
  n.put_top(0, 0, a);
  n.put_bot(0, 0, b);
  return n;
}

Network net_nref(const FinStructure& s, Elem a, Elem b) {
  Network n(s.size(), 2);
  n.put_top(0, 1, a);
  n.put_bot(0, 1, b);
  return n;
}

Network net_single(const FinStructure& s, Elem a) {
  Network n(s.size(), 1);
  n.put_top(0, 0, a);
  return n;
}

Network add_top(const Network& n, Node x, Node y, Elem a) {
  Network out = n;
  out.put_top(x, y, a);
  return out;
}

Network add_bot(const Network& n, Node x, Node y, Elem a) {
  Network out = n;
  out.put_bot(x, y, a);
  return out;
}

bool extends(const Network& n1, const Network& n2) {
  if (n1.element_count() != n2.element_count()) return false;
  if (n1.node_count() > n2.node_count()) return false;
  const auto k = static_cast<Node>(n1.node_count());
  const std::size_t words = n1.words_per_label();
  for (Node x = 0; x < k; ++x) {
    for (Node y = 0; y < k; ++y) {
      const std::uint64_t *t1 = n1.top_words(x, y), *t2 = n2.top_words(x, y);
      const std::uint64_t *b1 = n1.bot_words(x, y), *b2 = n2.bot_words(x, y);
      for (std::size_t w = 0; w < words; ++w)
        if ((t1[w] & ~t2[w]) || (b1[w] & ~b2[w])) return false;
    }
  }
  return true;
}

namespace {

std::string join_ids(const FinStructure& s, const std::vector<Elem>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += s.id(labels[i]);
  }
  return out;
}

}  // namespace

std::string network_to_dot(const Network& n, const FinStructure& s, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  const auto k = static_cast<Node>(n.node_count());
  for (Node x = 0; x < k; ++x) out << "  n" << x << " [label=\"" << x << "\"];\n";
  for (Node x = 0; x < k; ++x) {
    for (Node y = 0; y < k; ++y) {
      auto top = n.top_labels(x, y);
      if (!top.empty()) out << "  n" << x << " -> n" << y << " [label=\"" << join_ids(s, top) << "\"];\n";
      auto bot = n.bot_labels(x, y);
      if (!bot.empty())
        out << "  n" << x << " -> n" << y << " [style=dashed, label=\"" << join_ids(s, bot) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

nlohmann::ordered_json network_to_json(const Network& n, const FinStructure& s) {
  nlohmann::ordered_json j;
  j["nodes"] = n.node_count();
  auto edges = [&](bool top) {
    auto arr = nlohmann::ordered_json::array();
    const auto k = static_cast<Node>(n.node_count());
    for (Node x = 0; x < k; ++x) {
      for (Node y = 0; y < k; ++y) {
        auto labels = top ? n.top_labels(x, y) : n.bot_labels(x, y);
        if (labels.empty()) continue;
        nlohmann::ordered_json e;
        e["from"] = x;
        e["to"] = y;
        e["labels"] = nlohmann::ordered_json::array();
        for (Elem a : labels) e["labels"].push_back(s.id(a));
        arr.push_back(std::move(e));
      }
    }
    return arr;
  };
  j["top"] = edges(true);
  j["bot"] = edges(false);
  return j;
}

Network network_from_json(const FinStructure& s, const nlohmann::json& j) {
  try {
    Network n(s.size(), j.at("nodes").get<std::size_t>());
    for (const char* key : {"top", "bot"}) {
      if (!j.contains(key)) continue;
      for (const auto& e : j.at(key)) {
        auto x = e.at("from").get<Node>(), y = e.at("to").get<Node>();
        if (x >= n.node_count() || y >= n.node_count()) throw Error("edge endpoint outside the node set");
        for (const auto& id : e.at("labels")) {
          Elem a = s.at(id.get<std::string>());
          if (key[0] == 't')
            n.put_top(x, y, a);
          else
            n.put_bot(x, y, a);
        }
      }
    }
    return n;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed network: ") + e.what());
  }
}

}  // namespace relrep
