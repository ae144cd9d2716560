#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "antimagic/graph.hpp"

namespace antimagic {

namespace {

void grow_clique(const Graph& g, std::vector<int>& cur, std::vector<int> cand, std::vector<int>& best) {
  if (cur.size() > best.size()) best = cur;
  while (!cand.empty()) {
    if (cur.size() + cand.size() <= best.size()) return;
    int v = cand.back();
    cand.pop_back();
    std::vector<int> next;
    for (int w : cand)
      if (g.adjacent(v, w)) next.push_back(w);
    cur.push_back(v);
    grow_clique(g, cur, std::move(next), best);
    cur.pop_back();
  }
}

std::vector<int> max_clique(const Graph& g) {
  std::vector<int> cand(g.order()), cur, best;
  std::iota(cand.begin(), cand.end(), 0);
  grow_clique(g, cur, cand, best);
  return best;
}

struct Dsatur {
  const Graph& g;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  int best;
  std::vector<int> color;

  int saturation(int v) const {
    std::uint64_t seen = 0;
    for (int w : g.neighbors(v))
      if (color[w] >= 0) seen |= std::uint64_t{1} << color[w];
    return std::popcount(seen);
  }

  int pick() const {
    int best_v = -1, best_s = -1, best_d = -1;
    for (int v = 0; v < g.order(); ++v) {
      if (color[v] >= 0) continue;
      int s = saturation(v), d = g.degree(v);
      if (s > best_s || (s == best_s && d > best_d)) {
        best_v = v;
        best_s = s;
        best_d = d;
      }
    }
    return best_v;
  }

  void run(int used, int colored) {
    if (++nodes > budget) throw Error(Errc::budget_exhausted, "chromatic number search exceeded node budget");
    if (used >= best) return;
    if (colored == g.order()) {
      best = used;
      return;
    }
    int v = pick();
    for (int c = 0; c <= used && c < best - 1; ++c) {
      bool ok = true;
      for (int w : g.neighbors(v))
        if (color[w] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[v] = c;
      run(std::max(used, c + 1), colored + 1);
      color[v] = -1;
    }
  }
};

}  // namespace

int clique_number(const Graph& g) { return static_cast<int>(max_clique(g).size()); }

int greedy_colors(const Graph& g) {
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> color(g.order(), -1);
  int used = 0;
  for (int v : order) {
    std::vector<char> taken(used + 1, 0);
    for (int w : g.neighbors(v))
      if (color[w] >= 0) taken[color[w]] = 1;
    int c = 0;
    while (taken[c]) ++c;
    color[v] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

int chromatic_number(const Graph& g, ColoringBudget budget) {
  if (g.order() == 0) return 0;
  if (g.order() > 64) throw Error(Errc::precondition, "chromatic_number supports at most 64 vertices");
  auto clique = max_clique(g);
  int lower = static_cast<int>(clique.size());
  Dsatur d{g, budget.nodes, 0, greedy_colors(g), std::vector<int>(g.order(), -1)};
  if (lower == d.best) return lower;
  for (size_t i = 0; i < clique.size(); ++i) d.color[clique[i]] = static_cast<int>(i);
  d.run(lower, lower);
  return d.best;
}

bool is_k_colorable(const Graph& g, int k) {
  if (k <= 0) return g.order() == 0;
  std::vector<int> color(g.order(), -1);
  std::function<bool(int, int)> go = [&](int v, int used) -> bool {
    if (v == g.order()) return true;
    for (int c = 0; c < k && c <= used; ++c) {
      bool ok = true;
      for (int w : g.neighbors(v))
        if (w < v && color[w] == c) ok = false;
      if (!ok) continue;
      color[v] = c;
      if (go(v + 1, std::max(used, c + 1))) return true;
    }
    color[v] = -1;
    return false;
  };
  return go(0, 0);
}

std::vector<std::vector<int>> independent_sets(const Graph& g, int max_size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> go = [&](int from) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) >= max_size) return;
    for (int v = from; v < g.order(); ++v) {
      bool ok = true;
      for (int u : cur)
        if (g.adjacent(u, v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(v);
      go(v + 1);
      cur.pop_back();
    }
  };
  go(0);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace antimagic
