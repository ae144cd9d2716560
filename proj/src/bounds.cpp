#include <algorithm>
#include <numeric>

#include "antimagic/solver.hpp"

namespace antimagic {

namespace {

Sum pairs_sum(int q) { return static_cast<Sum>(q) * (q + 1) / 2; }

// sizes of the two sides of a connected bipartite graph
std::optional<std::pair<int, int>> sides(const Graph& g) {
  std::vector<int> side;
  if (g.order() < 2 || !g.connected() || !g.bipartite(&side)) return std::nullopt;
  int a = static_cast<int>(std::count(side.begin(), side.end(), 0));
  return std::make_pair(a, g.order() - a);
}

}  // namespace

bool has_spanning_copy(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() < h.size()) return false;
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto e : h.edges())
      if (!g.adjacent(perm[e.u], perm[e.v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

LowerBound lower_bound(const Graph& g) {
  LowerBound lb;
  int chi = chromatic_number(g);
  lb.fired.push_back({"chromatic", chi, {{"chi", chi}}});
  lb.bound = chi;
  if (auto s = sides(g)) {
    auto [a, b] = *s;
    Sum c = pairs_sum(g.size());
    if (a == b) {
      lb.fired.push_back({"bipartite-equal-sides", 3, {{"side1", a}, {"side2", b}}});
    } else if (c % a != 0 || c % b != 0) {
      lb.fired.push_back({"bipartite-divisibility", 3, {{"side1", a}, {"side2", b}, {"half_total", c}}});
    }
    if (a == 4 && b == 4 && g.size() >= 12 && g.size() <= 14 && has_spanning_copy(g, prism(4)))
      lb.fired.push_back({"cube-4+4", 4, {{"side1", a}, {"side2", b}, {"size", g.size()}}});
  }
  for (const auto& c : lb.fired) lb.bound = std::max(lb.bound, c.bound);
  return lb;
}

bool recheck(const Graph& g, const Certificate& c) {
  if (c.rule == "chromatic") return c.bound <= 1 || !is_k_colorable(g, c.bound - 1);
  if (c.rule == "exhaustive" || c.rule == "class-sum") return false;  // not independently re-checkable here
  std::vector<int> side;
  if (!g.connected() || !g.bipartite(&side)) return false;
  int a = static_cast<int>(std::count(side.begin(), side.end(), 0)), b = g.order() - a;
  Sum half = pairs_sum(g.size());
  // A 2-coloring of a connected bipartite graph has the sides as classes and
  // each side collects every label once: |V1| x = |V2| y = q(q+1)/2.
  if (c.rule == "bipartite-equal-sides") return c.bound <= 3 && a == b;
  if (c.rule == "bipartite-divisibility") return c.bound <= 3 && (half % a != 0 || half % b != 0);
  if (c.rule == "cube-4+4")
    return c.bound <= 4 && a == 4 && b == 4 && g.size() >= 12 && g.size() <= 14 && has_spanning_copy(g, prism(4));
  return false;
}

}  // namespace antimagic
