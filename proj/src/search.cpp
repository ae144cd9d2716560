#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <thread>

#include "antimagic/solver.hpp"

namespace antimagic {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::found:
      return "found";
    case Outcome::none:
      return "none";
    case Outcome::budget:
      return "budget";
  }
  return "?";
}

std::vector<std::vector<int>> independent_partitions(const Graph& g, int t) {
  std::vector<std::vector<int>> out;
  int p = g.order();
  if (t < 1 || t > p) return out;
  std::vector<int> cls(p, -1);
  std::function<void(int, int)> go = [&](int v, int used) {
    if (p - v < t - used) return;
    if (v == p) {
      if (used == t) out.push_back(cls);
      return;
    }
    for (int c = 0; c <= used && c < t; ++c) {
      bool ok = true;
      for (int w : g.neighbors(v))
        if (w < v && cls[w] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cls[v] = c;
      go(v + 1, std::max(used, c + 1));
      cls[v] = -1;
    }
  };
  go(0, 0);
  return out;
}

namespace {

// Edges are grouped by vertex so each vertex completes (and its class
// sum gets pinned) as early as possible. The next vertex is the one with
// fewest unplaced edges, preferring a class not reached yet, then the
// higher degree; its edges go by degree-sum of their ends, descending.
std::vector<int> edge_order(const Graph& g, const std::vector<int>& cls) {
  std::vector<char> placed(g.size(), 0), done(g.order(), 0);
  std::vector<char> seen_class(g.order() + 1, 0);
  std::vector<int> left(g.order());
  for (int v = 0; v < g.order(); ++v) left[v] = g.degree(v);
  std::vector<int> order;
  auto dsum = [&](int e) { return g.degree(g.edges()[e].u) + g.degree(g.edges()[e].v); };
  while (static_cast<int>(order.size()) < g.size()) {
    int best = -1;
    auto better = [&](int v, int b) {
      if (left[v] != left[b]) return left[v] < left[b];
      if (seen_class[cls[v]] != seen_class[cls[b]]) return !seen_class[cls[v]];
      return g.degree(v) > g.degree(b);
    };
    for (int v = 0; v < g.order(); ++v)
      if (!done[v] && left[v] > 0 && (best < 0 || better(v, best))) best = v;
    std::vector<int> es;
    for (int e : g.incident(best))
      if (!placed[e]) es.push_back(e);
    std::stable_sort(es.begin(), es.end(), [&](int a, int b) { return dsum(a) > dsum(b); });
    for (int e : es) {
      placed[e] = 1;
      order.push_back(e);
      --left[g.edges()[e].u];
      --left[g.edges()[e].v];
    }
    done[best] = 1;
    seen_class[cls[best]] = 1;
  }
  return order;
}

class Dfs {
 public:
  Dfs(const Graph& g, const std::vector<int>& order, const std::vector<int>& cls,
      const std::vector<std::optional<Sum>>& fixed, std::uint64_t budget, bool sweep = false)
      : g_(g), order_(order), cls_(cls), budget_(budget), sweep_(sweep) {
    q_ = g.size();
    t_ = static_cast<int>(fixed.size());
    full_ = q_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << q_) - 1;
    total_ = static_cast<Sum>(q_) * (q_ + 1);
    target_.assign(t_, 0);
    known_.assign(t_, 0);
    members_.assign(t_, {});
    for (int v = 0; v < g.order(); ++v) members_[cls_[v]].push_back(v);
    partial_.assign(g.order(), 0);
    rem_.assign(g.order(), 0);
    for (int v = 0; v < g.order(); ++v) rem_[v] = g.degree(v);
    labels_.assign(q_, 0);
    unknown_ = t_;
    ok_ = true;
    for (int c = 0; c < t_ && ok_; ++c)
      if (fixed[c]) ok_ = known_[c] ? target_[c] == *fixed[c] : set_target(c, *fixed[c]);
    for (int v = 0; v < g.order() && ok_; ++v)
      if (rem_[v] == 0) ok_ = known_[cls_[v]] ? target_[cls_[v]] == 0 : set_target(cls_[v], 0);
  }

  Outcome run() {
    if (!ok_) return Outcome::none;
    if (go(0)) return Outcome::found;
    return exhausted_ ? Outcome::budget : Outcome::none;
  }

  const Labels& labels() const { return labels_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool range_ok(int w) const {
    Sum need = target_[cls_[w]] - partial_[w];
    int k = rem_[w];
    if (k == 0) return need == 0;
    std::uint64_t avail = ~used_ & full_;
    if (std::popcount(avail) < k) return false;
    if (k == 1) return need >= 1 && need <= q_ && ((avail >> (need - 1)) & 1);
    if (k == 2) {
      for (std::uint64_t a = avail; a; a &= a - 1) {
        Sum x = std::countr_zero(a) + 1, y = need - x;
        if (y <= x) break;
        if (y <= q_ && ((avail >> (y - 1)) & 1)) return true;
      }
      return false;
    }
    Sum lo = 0, hi = 0;
    std::uint64_t a = avail;
    for (int i = 0; i < k; ++i) {
      lo += std::countr_zero(a) + 1;
      a &= a - 1;
    }
    a = avail;
    for (int i = 0; i < k; ++i) {
      int top = 63 - std::countl_zero(a);
      hi += top + 1;
      a &= ~(std::uint64_t{1} << top);
    }
    return need >= lo && need <= hi;
  }

  bool set_target(int c, Sum x) {
    for (int d = 0; d < t_; ++d)
      if (known_[d] && target_[d] == x) return false;
    target_[c] = x;
    known_[c] = 1;
    --unknown_;
    log_.push_back(c);
    for (int w : members_[c])
      if (!range_ok(w)) return false;
    if (unknown_ == 1) {
      int last = -1;
      Sum rest = total_;
      for (int d = 0; d < t_; ++d) {
        if (known_[d])
          rest -= static_cast<Sum>(members_[d].size()) * target_[d];
        else
          last = d;
      }
      Sum n = static_cast<Sum>(members_[last].size());
      if (rest < 0 || rest % n != 0) return false;
      return set_target(last, rest / n);
    }
    return true;
  }

  void unset_to(size_t mark) {
    while (log_.size() > mark) {
      known_[log_.back()] = 0;
      ++unknown_;
      log_.pop_back();
    }
  }

  bool touch(int w) {
    int c = cls_[w];
    if (rem_[w] == 0 && !known_[c]) return set_target(c, partial_[w]);
    if (known_[c]) return range_ok(w);
    return true;
  }

  bool go(int pos) {
    if (pos == q_) return true;
    int e = order_[pos];
    int u = g_.edges()[e].u, v = g_.edges()[e].v;
    std::optional<Sum> forced;
    for (int w : {u, v}) {
      if (rem_[w] == 1 && known_[cls_[w]]) {
        Sum need = target_[cls_[w]] - partial_[w];
        if (forced && *forced != need) return false;
        forced = need;
      }
    }
    std::uint64_t avail = ~used_ & full_;
    if (forced) {
      Sum f = *forced;
      if (f < 1 || f > q_ || !((avail >> (f - 1)) & 1)) return false;
      avail = std::uint64_t{1} << (f - 1);
    }
    while (avail) {
      int top = 63 - std::countl_zero(avail);
      avail &= ~(std::uint64_t{1} << top);
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      Sum L = top + 1;
      used_ |= std::uint64_t{1} << top;
      partial_[u] += L;
      partial_[v] += L;
      --rem_[u];
      --rem_[v];
      labels_[e] = L;
      size_t mark = log_.size();
      bool ok = touch(u) && touch(v);
      // with targets pinned up front, a used label can strand any vertex
      if (ok && sweep_)
        for (int w = 0; w < g_.order() && ok; ++w)
          if (rem_[w] > 0 && known_[cls_[w]]) ok = range_ok(w);
      if (ok && go(pos + 1)) return true;
      unset_to(mark);
      used_ &= ~(std::uint64_t{1} << top);
      partial_[u] -= L;
      partial_[v] -= L;
      ++rem_[u];
      ++rem_[v];
      if (exhausted_) return false;
    }
    return false;
  }

  const Graph& g_;
  const std::vector<int>& order_;
  std::vector<int> cls_;
  std::uint64_t budget_;
  bool sweep_;
  int q_ = 0, t_ = 0;
  std::uint64_t full_ = 0, used_ = 0;
  Sum total_ = 0;
  std::vector<Sum> target_;
  std::vector<char> known_;
  std::vector<std::vector<int>> members_;
  std::vector<Sum> partial_;
  std::vector<int> rem_;
  Labels labels_;
  std::vector<int> log_;
  int unknown_ = 0;
  bool ok_ = true;
  bool exhausted_ = false;
  std::uint64_t nodes_ = 0;
};

void require_searchable(const Graph& g) {
  if (g.size() > 64) throw Error(Errc::precondition, "labeling search supports at most 64 edges");
}

}  // namespace

SearchResult find_labeling_fixed(const Graph& g, const std::vector<int>& classes,
                                 const std::vector<std::optional<Sum>>& targets, std::uint64_t node_budget) {
  require_searchable(g);
  if (static_cast<int>(classes.size()) != g.order())
    throw Error(Errc::precondition, "class vector does not match the vertex count");
  int t = static_cast<int>(targets.size());
  std::vector<char> nonempty(t, 0);
  for (int v = 0; v < g.order(); ++v) {
    if (classes[v] < 0 || classes[v] >= t) throw Error(Errc::precondition, "class index out of range");
    nonempty[classes[v]] = 1;
  }
  for (auto e : g.edges())
    if (classes[e.u] == classes[e.v]) throw Error(Errc::precondition, "classes must be independent sets");
  SearchResult res;
  res.partitions = 1;
  if (std::count(nonempty.begin(), nonempty.end(), 0)) return res;
  auto order = edge_order(g, classes);
  Dfs d(g, order, classes, targets, node_budget, true);
  res.outcome = d.run();
  res.nodes = d.nodes();
  if (res.outcome == Outcome::found) res.labels = d.labels();
  return res;
}

SearchResult find_labeling(const Graph& g, int t, const SearchBudget& budget) {
  require_searchable(g);
  SearchResult res;
  auto parts = independent_partitions(g, t);
  res.partitions = parts.size();
  if (parts.empty()) return res;
  std::vector<std::optional<Sum>> free_targets(t);

  std::vector<Outcome> outcome(parts.size(), Outcome::none);
  std::vector<Labels> found(parts.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{parts.size()};
  std::atomic<std::uint64_t> nodes{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= parts.size() || i > best.load()) return;
      auto order = edge_order(g, parts[i]);
      Dfs d(g, order, parts[i], free_targets, budget.nodes_per_partition);
      outcome[i] = d.run();
      nodes += d.nodes();
      if (outcome[i] == Outcome::found) {
        found[i] = d.labels();
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  int threads = std::max(1, budget.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  res.nodes = nodes.load();
  std::size_t b = best.load();
  if (b < parts.size()) {
    res.outcome = Outcome::found;
    res.labels = found[b];
    return res;
  }
  res.outcome = std::count(outcome.begin(), outcome.end(), Outcome::budget) ? Outcome::budget : Outcome::none;
  return res;
}

}  // namespace antimagic
