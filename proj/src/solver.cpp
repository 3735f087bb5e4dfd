#include "relrep/solver.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <thread>

#include "relrep/error.hpp"

namespace relrep {

namespace {

using Words = std::vector<std::uint64_t>;

void append(Words& out, const std::uint64_t* words, std::size_t count) { out.insert(out.end(), words, words + count); }

// Dense ranks of the signatures, in signature order.
std::vector<std::size_t> rank(const std::vector<Words>& sigs) {
  std::vector<Words> sorted = sigs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::size_t> out(sigs.size());
  for (std::size_t i = 0; i < sigs.size(); ++i)
    out[i] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sigs[i]) - sorted.begin());
  return out;
}

Words encode(const Network& n, const std::vector<Node>& order) {
  const std::size_t w = n.words_per_label();
  Words out;
  out.reserve(1 + order.size() * order.size() * w * 2);
  out.push_back(order.size());
  for (Node i : order) {
    for (Node j : order) {
      append(out, n.top_words(i, j), w);
      append(out, n.bot_words(i, j), w);
    }
  }
  return out;
}

constexpr std::size_t kPermutationBudget = 40320;

}  // namespace

std::vector<Node> canonical_order(const Network& n) {
  const auto k = static_cast<Node>(n.node_count());
  const std::size_t w = n.words_per_label();
  std::vector<Words> sigs(k);
  for (Node x = 0; x < k; ++x) {
    append(sigs[x], n.top_words(x, x), w);
    append(sigs[x], n.bot_words(x, x), w);
  }
  std::vector<std::size_t> color = rank(sigs);
  std::size_t classes = k == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  while (true) {
    for (Node x = 0; x < k; ++x) {
      std::vector<Words> around;
      for (Node y = 0; y < k; ++y) {
        if (y == x) continue;
        Words t{color[y]};
        append(t, n.top_words(x, y), w);
        append(t, n.bot_words(x, y), w);
        append(t, n.top_words(y, x), w);
        append(t, n.bot_words(y, x), w);
        around.push_back(std::move(t));
      }
      std::sort(around.begin(), around.end());
      Words sig{color[x]};
      for (const Words& t : around) append(sig, t.data(), t.size());
      sigs[x] = std::move(sig);
    }
    std::vector<std::size_t> next = rank(sigs);
    std::size_t next_classes = k == 0 ? 0 : *std::max_element(next.begin(), next.end()) + 1;
    color = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }

  std::vector<Node> order(k);
  for (Node x = 0; x < k; ++x) order[x] = x;
  std::stable_sort(order.begin(), order.end(), [&](Node a, Node b) { return color[a] < color[b]; });

  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && color[order[j]] == color[order[i]]) ++j;
    if (j - i > 1) cells.emplace_back(i, j);
    i = j;
  }
  std::size_t budget = 1;
  for (auto [lo, hi] : cells) {
    for (std::size_t f = 2; f <= hi - lo; ++f) budget *= f;
    if (budget > kPermutationBudget) break;
  }
  if (cells.empty() || k >= 9 || budget > kPermutationBudget) return order;

  std::vector<Node> best = order;
  Words best_key = encode(n, order);
  std::vector<Node> cur = order;
  std::function<void(std::size_t)> walk = [&](std::size_t c) {
    if (c == cells.size()) {
      Words key = encode(n, cur);
      if (key < best_key) {
        best_key = std::move(key);
        best = cur;
      }
      return;
    }
    auto [lo, hi] = cells[c];
    std::sort(cur.begin() + lo, cur.begin() + hi);
    do {
      walk(c + 1);
    } while (std::next_permutation(cur.begin() + lo, cur.begin() + hi));
  };
  walk(0);
  return best;
}

std::vector<std::uint64_t> canonical_key(const Network& n) { return encode(n, canonical_order(n)); }

std::size_t KeyHash::operator()(const std::vector<std::uint64_t>& key) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ key.size();
  for (std::uint64_t v : key) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

GameSolver::GameSolver(const FinStructure& s, SolverOptions options) : s_(s), options_(options) {
  require_game_signature(s);
}

bool GameSolver::survives(const Network& n, std::size_t moves) {
  if (!consistent(n, s_)) return false;
  if (moves == 0) return true;
  auto key = canonical_key(n);
  const auto m = static_cast<std::int32_t>(moves);
  if (auto it = memo_.find(key); it != memo_.end()) {
    if (it->second.wins_up_to >= m) return true;
    if (it->second.loses_from >= 0 && it->second.loses_from <= m) return false;
  }
  if (memo_.size() >= options_.memo_cap)
    throw Inconclusive("game solver memo cap of " + std::to_string(options_.memo_cap) + " entries reached");

  PlayState state;
  state.structure = &s_;
  state.network = n;
  state.moves_left = moves;
  state.started = true;
  bool ok = true;
  for (const Challenge& ch : legal_challenges(state)) {
    if (options_.prune_redundant && is_redundant(n, s_, ch)) continue;
    bool answered = false;
    for (const Response& r : responses_for(state, ch)) {
      if (survives(apply(n, s_, ch, r), moves - 1)) {
        answered = true;
        break;
      }
    }
    if (!answered) {
      ok = false;
      break;
    }
  }
  Entry& e = memo_[std::move(key)];
  if (ok) {
    e.wins_up_to = std::max(e.wins_up_to, m);
  } else if (e.loses_from < 0 || m < e.loses_from) {
    e.loses_from = m;
  }
  return ok;
}

std::optional<Response> GameSolver::winning_response(const PlayState& state, const Challenge& ch) {
  const std::size_t left = ch.kind == ChallengeKind::init ? state.moves_left
                           : state.moves_left == 0     ? 0
                                                       : state.moves_left - 1;
  for (const Response& r : responses_for(state, ch))
    if (survives(apply(state.network, s_, ch, r), left)) return r;
  return std::nullopt;
}

bool GameSolver::exists_wins(std::size_t moves) {
  PlayState start = start_game(s_, moves);
  for (const Challenge& ch : legal_challenges(start))
    if (!winning_response(start, ch)) return false;
  return true;
}

bool exists_wins(const FinStructure& s, std::size_t n, SolverOptions options) {
  require_game_signature(s);
  if (options.jobs <= 1) return GameSolver(s, options).exists_wins(n);

  // Init pairs are independent; each worker keeps its own memo.
  PlayState start = start_game(s, n);
  const auto inits = legal_challenges(start);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> lost{false};
  std::atomic<bool> capped{false};
  std::string cap_message;
  std::mutex cap_mutex;
  auto worker = [&] {
    GameSolver solver(s, options);
    while (!lost && !capped) {
      std::size_t i = next++;
      if (i >= inits.size()) return;
      try {
        if (!solver.winning_response(start, inits[i])) lost = true;
      } catch (const Inconclusive& e) {
        std::lock_guard lock(cap_mutex);
        cap_message = e.what();
        capped = true;
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned j = 0; j < options.jobs; ++j) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  // A definite loss found by any worker settles the verdict.
  if (lost) return false;
  if (capped) throw Inconclusive(cap_message);
  return true;
}

std::optional<Response> SolverExists::respond(const PlayState& state, const Challenge& ch) {
  if (auto r = solver_.winning_response(state, ch)) return r;
  return fallback_.respond(state, ch);
}

}  // namespace relrep
