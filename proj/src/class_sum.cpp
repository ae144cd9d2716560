#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include "antimagic/solver.hpp"

namespace antimagic {

namespace {

using Mask = std::uint64_t;

class UnionSets {
 public:
  UnionSets(int q, int r) : q_(q), r_(r) {}

  // unions of n pairwise disjoint r-subsets of [1,q], each summing to x
  const std::vector<Mask>& get(int n, Sum x) {
    auto key = std::make_pair(n, x);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const auto& subs = subsets(x);
    std::set<Mask> out;
    std::function<void(size_t, int, Mask)> pack = [&](size_t from, int left, Mask acc) {
      if (left == 0) {
        out.insert(acc);
        return;
      }
      for (size_t i = from; i < subs.size(); ++i)
        if (!(subs[i] & acc)) pack(i + 1, left - 1, acc | subs[i]);
    };
    pack(0, n, 0);
    return cache_[key] = std::vector<Mask>(out.begin(), out.end());
  }

 private:
  const std::vector<Mask>& subsets(Sum x) {
    auto it = subs_.find(x);
    if (it != subs_.end()) return it->second;
    std::vector<Mask> out;
    std::function<void(int, int, Sum, Mask)> go = [&](int from, int left, Sum s, Mask m) {
      if (left == 0) {
        if (s == x) out.push_back(m);
        return;
      }
      for (int L = from; L <= q_; ++L) {
        if (s + L * left > x) break;
        go(L + 1, left - 1, s + L, m | (Mask{1} << (L - 1)));
      }
    };
    go(1, r_, 0, 0);
    return subs_[x] = out;
  }

  int q_, r_;
  std::map<Sum, std::vector<Mask>> subs_;
  std::map<std::pair<int, Sum>, std::vector<Mask>> cache_;
};

// Each label sits on one edge, hence in exactly two class unions, and
// classes c,d share exactly e(c,d) labels.
bool systems_exist(UnionSets& us, int q, const std::vector<int>& sizes, const std::vector<Sum>& targets,
                   const std::vector<std::vector<int>>& between) {
  int t = static_cast<int>(sizes.size());
  Mask full = q == 64 ? ~Mask{0} : (Mask{1} << q) - 1;
  if (t == 1) return q == 0;
  std::vector<const std::vector<Mask>*> opts(t);
  for (int c = 0; c < t; ++c) {
    opts[c] = &us.get(sizes[c], targets[c]);
    if (opts[c]->empty()) return false;
  }
  // the class with the most options is derived rather than enumerated
  std::vector<int> ord(t);
  for (int c = 0; c < t; ++c) ord[c] = c;
  std::sort(ord.begin(), ord.end(), [&](int a, int b) { return opts[a]->size() < opts[b]->size(); });
  int last = ord.back();
  std::vector<Mask> chosen(t, 0);
  std::function<bool(int, Mask, Mask)> go = [&](int k, Mask ones, Mask twos) -> bool {
    if (k == t - 1) {
      if ((ones | twos) != full) return false;
      Mask u = ones;
      for (int j = 0; j < t - 1; ++j)
        if (std::popcount(u & chosen[ord[j]]) != between[last][ord[j]]) return false;
      return std::binary_search(opts[last]->begin(), opts[last]->end(), u);
    }
    int c = ord[k];
    for (Mask u : *opts[c]) {
      if (u & twos) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j)
        if (std::popcount(u & chosen[ord[j]]) != between[c][ord[j]]) ok = false;
      if (!ok) continue;
      chosen[c] = u;
      if (go(k + 1, ones ^ u, twos | (ones & u))) return true;
    }
    return false;
  };
  return go(0, 0, 0);
}

}  // namespace

ClassSumReport class_sum_feasible(const Graph& g, int t) {
  auto reg = g.regularity();
  if (!reg) throw Error(Errc::precondition, "class-sum analysis needs a regular graph");
  if (t < 1 || t > 4) throw Error(Errc::precondition, "class-sum analysis supports 1 <= t <= 4");
  if (g.size() > 64) throw Error(Errc::precondition, "class-sum analysis supports at most 64 edges");
  int q = g.size(), r = *reg;
  ClassSumReport rep;
  auto parts = independent_partitions(g, t);
  rep.partitions = parts.size();
  rep.verdict = Feasibility::infeasible;
  if (parts.empty()) return rep;

  UnionSets us(q, r);
  Sum total = static_cast<Sum>(q) * (q + 1);
  Sum lo = static_cast<Sum>(r) * (r + 1) / 2, hi = static_cast<Sum>(r) * (2 * q - r + 1) / 2;
  std::map<std::vector<std::pair<int, Sum>>, size_t> case_index;
  std::set<std::pair<std::vector<int>, std::vector<std::vector<int>>>> done;

  for (const auto& cls : parts) {
    std::vector<int> sizes(t, 0);
    std::vector<std::vector<int>> between(t, std::vector<int>(t, 0));
    for (int v = 0; v < g.order(); ++v) ++sizes[cls[v]];
    for (auto e : g.edges()) {
      ++between[cls[e.u]][cls[e.v]];
      ++between[cls[e.v]][cls[e.u]];
    }
    if (!done.insert({sizes, between}).second) continue;

    std::vector<Sum> x(t);
    std::function<bool(int, Sum)> pick = [&](int c, Sum acc) -> bool {
      if (c == t - 1) {
        Sum rest = total - acc;
        if (rest % sizes[c] != 0) return false;
        x[c] = rest / sizes[c];
        if (x[c] < lo || x[c] > hi) return false;
        for (int d = 0; d < c; ++d)
          if (x[d] == x[c]) return false;
        std::vector<std::pair<int, Sum>> key;
        for (int d = 0; d < t; ++d) key.push_back({sizes[d], x[d]});
        std::sort(key.begin(), key.end());
        bool ok = systems_exist(us, q, sizes, x, between);
        auto it = case_index.find(key);
        if (it == case_index.end()) {
          ClassSumCase cs;
          for (auto& [n, s] : key) {
            cs.sizes.push_back(n);
            cs.targets.push_back(s);
          }
          cs.consistent = ok;
          case_index[key] = rep.cases.size();
          rep.cases.push_back(cs);
        } else if (ok) {
          rep.cases[it->second].consistent = true;
        }
        return ok;
      }
      for (Sum v = lo; v <= hi; ++v) {
        if (acc + v * sizes[c] > total) break;
        bool dup = false;
        for (int d = 0; d < c; ++d) dup = dup || x[d] == v;
        if (dup) continue;
        x[c] = v;
        if (pick(c + 1, acc + v * sizes[c])) return true;
      }
      return false;
    };
    if (pick(0, 0)) {
      rep.verdict = Feasibility::unknown;
      return rep;
    }
  }
  return rep;
}

}  // namespace antimagic
