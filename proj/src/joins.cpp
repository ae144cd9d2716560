#include "antimagic/joins.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "antimagic/solver.hpp"

namespace antimagic {

namespace {

struct Base {
  int p = 0;
  int r = 0;  // degree
  Sum q = 0;
  int t = 0;
};

Base check_base(const Graph& g, const Labels& f) {
  auto reg = g.regularity();
  if (!reg) throw Error(Errc::precondition, "base graph must be regular");
  auto ic = induced(g, f);
  if (!ic.local_antimagic) throw Error(Errc::invalid_labeling, "base labeling is not local antimagic");
  return {g.order(), *reg, g.size(), ic.count()};
}

Rectangle checked(Rectangle r) {
  auto rep = validate_rectangle(r);
  if (!rep.ok) throw Error(Errc::invalid_labeling, "rectangle failed validation");
  return r;
}

RectangleUse use_of(const std::string& role, const Rectangle& r) { return {role, r.kind, r.rows, r.cols, r.offset}; }

// edges of prev keep their labels (plus shift) inside the larger host
void carry(const Graph& prev, const Labels& f, const Graph& host, Sum shift, int first_vertex, Labels& out) {
  for (int e = 0; e < prev.size(); ++e) {
    auto [u, v] = prev.edges()[e];
    out[host.edge_index(first_vertex + u, first_vertex + v)] = f[e] + shift;
  }
}

void place(const Rectangle& r, const std::vector<int>& rows, int col0, const Graph& host, Labels& out) {
  for (int i = 0; i < r.rows; ++i)
    for (int j = 0; j < r.cols; ++j) out[host.edge_index(rows[i], col0 + j)] = r.at(i, j);
}

std::vector<int> range(int from, int to) {
  std::vector<int> v;
  for (int i = from; i < to; ++i) v.push_back(i);
  return v;
}

int sign(Sum x) { return (x > 0) - (x < 0); }

// pairwise comparisons among vs are the same before and after
bool same_order(const std::vector<Sum>& before, const std::vector<Sum>& after, const std::vector<int>& vs) {
  for (size_t a = 0; a < vs.size(); ++a)
    for (size_t b = a + 1; b < vs.size(); ++b)
      if (sign(before[vs[a]] - before[vs[b]]) != sign(after[vs[a]] - after[vs[b]])) return false;
  return true;
}

std::vector<Sum> distinct(const std::vector<Sum>& sums, int from, int to) {
  std::set<Sum> s(sums.begin() + from, sums.begin() + to);
  return {s.begin(), s.end()};
}

enum class Pattern { flat, odd_cycle, even_cycle };

// Constants of one added layer in claimed order, nullopt when the layer is
// not uniform in the claimed way. Cycle positions are 1-based in the claims.
std::optional<std::vector<Sum>> layer_constants(const std::vector<Sum>& sums, int start, int len, Pattern pat) {
  std::vector<std::optional<Sum>> slot(pat == Pattern::flat ? 1 : pat == Pattern::odd_cycle ? 3 : 2);
  for (int i = 0; i < len; ++i) {
    int s = 0;
    if (pat == Pattern::odd_cycle) s = i == 0 ? 0 : i % 2 == 1 ? 1 : 2;
    if (pat == Pattern::even_cycle) s = i % 2 == 1 ? 0 : 1;
    Sum x = sums[start + i];
    if (slot[s] && *slot[s] != x) return std::nullopt;
    slot[s] = x;
  }
  std::vector<Sum> out;
  for (auto& s : slot) out.push_back(*s);
  return out;
}

bool strictly(const std::vector<Sum>& chain, bool ascending) {
  for (size_t i = 1; i < chain.size(); ++i)
    if (ascending ? chain[i - 1] >= chain[i] : chain[i - 1] <= chain[i]) return false;
  return true;
}

// Fills the layer/ordering fields of a step of an iterated construction
// whose base has p vertices and whose layers have len vertices each.
void layered_checks(TraceStep& st, const Graph& h, int p, int len, int layers, Pattern pat, bool ascending) {
  auto ic = induced(h, st.labels);
  st.base_sums = distinct(ic.sums, 0, p);
  bool ok = true;
  std::vector<Sum> chain{ascending ? st.base_sums.back() : st.base_sums.front()};
  for (int i = 0; i < layers; ++i) {
    int start = p + i * len;
    auto c = layer_constants(ic.sums, start, len, pat);
    if (!c) {
      ok = false;
      st.layer_sums.push_back(distinct(ic.sums, start, start + len));
      continue;
    }
    st.layer_sums.push_back(*c);
    chain.insert(chain.end(), c->begin(), c->end());
  }
  st.ordering_ok = ok && strictly(chain, ascending);
}

void fill_coloring(TraceStep& st) {
  auto ic = induced(st.graph, st.labels);
  st.local_antimagic = ic.local_antimagic;
  st.colors = ic.count();
}

void check_iterable(const Base& b, int k, int len, const char* what) {
  if (k < 1) throw Error(Errc::precondition, "k must be at least 1");
  if (b.r % 2 != 0 || b.r < 2) throw Error(Errc::precondition, "base graph must be 2r-regular with r >= 1");
  if (b.p < 3) throw Error(Errc::precondition, "base graph needs at least 3 vertices");
  if (len < 2) throw Error(Errc::precondition, std::string(what) + " must have at least 2 vertices");
}

// Join edges from G_{s-1} (P vertices, size Q) to the T new vertices: one
// P x T rectangle when P = T (mod 2), else M for the first p rows and N
// for the rest, N continuing where M ends.
void join_rectangles(TraceStep& st, const Graph& h, int p, int P, int T, Sum Q) {
  if ((P - T) % 2 == 0) {
    auto r = checked(magic_rectangle(P, T, Q));
    place(r, range(0, P), P, h, st.labels);
    st.rectangles.push_back(use_of("all", r));
    return;
  }
  auto m = checked(magic_rectangle(p, T, Q));
  auto n = checked(magic_rectangle(P - p, T, Q + static_cast<Sum>(p) * T));
  place(m, range(0, p), P, h, st.labels);
  place(n, range(p, P), P, h, st.labels);
  st.rectangles.push_back(use_of("M", m));
  st.rectangles.push_back(use_of("N", n));
}

void shape(TraceStep& st, int order, int degree) {
  st.shape_ok = st.graph.order() == order && st.graph.regularity() == degree;
  st.extra["order"] = st.graph.order();
  st.extra["order_formula"] = order;
  st.extra["regularity_formula"] = degree;
}

}  // namespace

bool ConstructionTrace::ok() const {
  return !steps.empty() && std::all_of(steps.begin(), steps.end(), [](const TraceStep& s) { return s.verified(); });
}

nlohmann::ordered_json ConstructionTrace::to_json(bool with_matrices) const {
  nlohmann::ordered_json j;
  j["schema"] = "trace/1";
  j["family"] = family;
  j["ok"] = ok();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& s : steps) {
    nlohmann::ordered_json o;
    o["k"] = s.k;
    o["order"] = s.graph.order();
    o["size"] = s.graph.size();
    if (auto r = s.graph.regularity())
      o["regularity"] = *r;
    else
      o["regularity"] = nullptr;
    o["colors"] = s.colors;
    o["predicted"] = s.predicted;
    o["local_antimagic"] = s.local_antimagic;
    o["classes_preserved"] = s.classes_preserved;
    o["ordering_ok"] = s.ordering_ok;
    o["shape_ok"] = s.shape_ok;
    o["verified"] = s.verified();
    auto rects = nlohmann::ordered_json::array();
    for (const auto& r : s.rectangles)
      rects.push_back({{"role", r.role},
                       {"kind", r.kind == RectKind::magic ? "magic" : "nearly"},
                       {"rows", r.rows},
                       {"cols", r.cols},
                       {"offset", r.offset}});
    o["rectangles"] = rects;
    o["base_sums"] = s.base_sums;
    o["layer_sums"] = s.layer_sums;
    o["extra"] = s.extra;
    if (with_matrices) o["matrix"] = render_matrix(s.graph, s.labels);
    arr.push_back(o);
  }
  j["steps"] = arr;
  return j;
}

ConstructionTrace join_On_iterated(const Graph& g, const Labels& f0, int k) {
  auto b = check_base(g, f0);
  int T = b.p - b.r;
  check_iterable(b, k, T, "the empty graph");
  ConstructionTrace tr{"on-iter", {}};
  Graph cur = g;
  Labels f = f0;
  for (int s = 1; s <= k; ++s) {
    int P = cur.order();
    Sum Q = cur.size();
    TraceStep st;
    st.k = s;
    st.graph = join(cur, empty_graph(T));
    st.labels.assign(st.graph.size(), 0);
    carry(cur, f, st.graph, 0, 0, st.labels);
    join_rectangles(st, st.graph, b.p, P, T, Q);
    fill_coloring(st);
    st.predicted = b.t + s;
    auto before = induced(cur, f).sums;
    st.classes_preserved = same_order(before, induced(st.graph, st.labels).sums, range(0, P));
    layered_checks(st, st.graph, b.p, T, s, Pattern::flat, true);
    shape(st, b.p + s * T, b.r + s * T);
    cur = st.graph;
    f = st.labels;
    tr.steps.push_back(std::move(st));
  }
  return tr;
}

Labels odd_cycle_labeling(int L) {
  if (L < 3 || L % 2 == 0) throw Error(Errc::precondition, "odd cycle labeling needs odd L >= 3");
  Graph c = cycle_graph(L);
  Labels g(L, 0);
  // v_i is vertex i-1; v_{L+1} = v_1
  auto at = [&](int i, int j) -> Sum& { return g[c.edge_index((i - 1) % L, (j - 1) % L)]; };
  for (int j = 1; j <= (L + 1) / 2; ++j) at(2 * j - 1, 2 * j) = j;
  for (int j = 1; j <= (L - 1) / 2; ++j) at(2 * j, 2 * j + 1) = L + 1 - j;
  return g;
}

namespace {

Sum seed_o(Sum n, Sum m) { return 4 * m * m * n + 4 * m * m + m; }
Sum seed_even(Sum n, Sum m) { return 4 * m * n * n + 12 * m * n - 6 * m + 3; }
Sum seed_odd(Sum n, Sum m) { return 4 * m * n * n - 4 * m * n + 2 * n + 10 * m - 1; }
Sum seed_shift(Sum n, Sum m) { return 8 * m * n * n - 4 * m * m * n + 12 * m * n + 5 * m; }

}  // namespace

Labels oc_seed_labeling(int n, int m, std::uint64_t node_budget) {
  if (n < 2 || m < 2) throw Error(Errc::precondition, "seed needs n, m >= 2");
  static std::mutex mu;
  static std::map<std::pair<int, int>, Labels> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({n, m});
    if (it != memo.end()) return it->second;
  }
  Graph g = join(empty_graph(2 * n), cycle_graph(2 * m));
  if (g.size() > 64) throw Error(Errc::budget_exhausted, "seed unavailable: O v C seed too large to search");
  std::vector<int> cls(g.order(), 0);
  for (int j = 0; j < 2 * m; ++j) cls[2 * n + j] = j % 2 == 1 ? 1 : 2;
  std::vector<std::optional<Sum>> targets{seed_o(n, m), seed_even(n, m), seed_odd(n, m)};
  auto res = find_labeling_fixed(g, cls, targets, node_budget);
  if (res.outcome == Outcome::budget) throw Error(Errc::budget_exhausted, "seed unavailable: search budget exhausted");
  if (res.outcome == Outcome::none)
    throw Error(Errc::budget_exhausted, "seed unavailable: no labeling has the stated sums");
  auto ic = induced(g, res.labels);
  for (int v = 0; v < g.order(); ++v)
    if (ic.sums[v] != *targets[cls[v]]) throw Error(Errc::invalid_labeling, "seed search returned wrong sums");
  std::lock_guard<std::mutex> lock(mu);
  memo[{n, m}] = res.labels;
  return res.labels;
}

ConstructionTrace join_cycle_iterated(const Graph& g, const Labels& f0, int k, std::uint64_t seed_budget) {
  auto b = check_base(g, f0);
  int L = b.p - b.r + 2;
  check_iterable(b, k, L, "the cycle");
  bool even = b.p % 2 == 0;
  ConstructionTrace tr{"cycle-iter", {}};
  Graph cur = g;
  Labels f = f0;
  Labels oc = even ? Labels{} : odd_cycle_labeling(L);
  Graph cyc = cycle_graph(L);
  for (int s = 1; s <= k; ++s) {
    int P = cur.order();
    Sum Q = cur.size();
    TraceStep st;
    st.k = s;
    st.graph = join(cur, cyc);
    st.labels.assign(st.graph.size(), 0);
    if (even) {
      int n = P / 2, m = L / 2;
      auto seed = oc_seed_labeling(n, m, seed_budget);
      Graph sg = join(empty_graph(P), cyc);
      carry(sg, seed, st.graph, 0, 0, st.labels);
      carry(cur, f, st.graph, static_cast<Sum>(P + 1) * L, 0, st.labels);
      st.extra["n"] = n;
      st.extra["m"] = m;
    } else {
      carry(cur, f, st.graph, 0, 0, st.labels);
      join_rectangles(st, st.graph, b.p, P, L, Q);
      carry(cyc, oc, st.graph, Q + static_cast<Sum>(P) * L, P, st.labels);
    }
    fill_coloring(st);
    st.predicted = b.t + (even ? 2 : 3) * s;
    auto before = induced(cur, f).sums;
    auto after = induced(st.graph, st.labels).sums;
    st.classes_preserved = same_order(before, after, range(0, P));
    layered_checks(st, st.graph, b.p, L, s, even ? Pattern::even_cycle : Pattern::odd_cycle, !even);
    if (even) {
      int n = P / 2, m = L / 2;
      std::set<Sum> shifts;
      for (int v = 0; v < P; ++v) shifts.insert(after[v] - before[v]);
      auto top = layer_constants(after, P, L, Pattern::even_cycle);
      bool uniform = shifts.size() == 1 && top;
      st.extra["even_constant"] = top ? nlohmann::ordered_json((*top)[0]) : nullptr;
      st.extra["odd_constant"] = top ? nlohmann::ordered_json((*top)[1]) : nullptr;
      st.extra["u_shift"] = shifts.size() == 1 ? nlohmann::ordered_json(*shifts.begin()) : nullptr;
      st.extra["even_formula"] = seed_even(n, m);
      st.extra["odd_formula"] = seed_odd(n, m);
      st.extra["u_shift_formula"] = seed_shift(n, m);
      bool match = uniform && (*top)[0] == seed_even(n, m) && (*top)[1] == seed_odd(n, m) &&
                   *shifts.begin() == seed_shift(n, m);
      st.extra["formulas_hold"] = match;
      st.ordering_ok = st.ordering_ok && match;
    }
    shape(st, b.p + s * L, b.r + s * L);
    cur = st.graph;
    f = st.labels;
    tr.steps.push_back(std::move(st));
  }
  return tr;
}

namespace {

// (ii): no a, b with a, b+1 colors in V1 and a+1, b colors in V2
bool condition_ii(const std::set<Sum>& c1, const std::set<Sum>& c2) {
  bool up = false, down = false;
  for (Sum a : c1) up = up || c2.count(a + 1);
  for (Sum b : c2) down = down || c1.count(b + 1);
  return !(up && down);
}

}  // namespace

ConstructionTrace join_O_odd(const Graph& g, const Labels& f, const std::vector<int>& v1, const std::vector<int>& v2,
                             int n) {
  auto ic = induced(g, f);
  if (!ic.local_antimagic) throw Error(Errc::invalid_labeling, "base labeling is not local antimagic");
  if (g.order() % 2 != 0) throw Error(Errc::precondition, "base graph must have even order 2m");
  int m = g.order() / 2;
  int t = ic.count();
  if (m < 2 || n < 2 || t < 3) throw Error(Errc::precondition, "needs m, n >= 2 and t >= 3");

  std::vector<int> side(g.order(), -1);
  auto mark = [&](const std::vector<int>& vs, int s) {
    for (int v : vs) {
      if (v < 0 || v >= g.order() || side[v] != -1)
        throw Error(Errc::precondition, "condition (i): V1 and V2 must partition the vertices", 1);
      side[v] = s;
    }
  };
  mark(v1, 0);
  mark(v2, 1);
  if (static_cast<int>(v1.size()) != m || static_cast<int>(v2.size()) != m)
    throw Error(Errc::precondition, "condition (i): V1 and V2 must have m vertices each", 1);
  std::set<Sum> c1, c2;
  for (auto& [x, vs] : color_classes(ic)) {
    for (int v : vs)
      if (side[v] != side[vs.front()])
        throw Error(Errc::precondition, "condition (i): a color class is split between V1 and V2", 1);
    (side[vs.front()] == 0 ? c1 : c2).insert(x);
  }
  if (!condition_ii(c1, c2)) throw Error(Errc::precondition, "condition (ii): forbidden color pattern across V1/V2", 2);
  bool cond_iii = 2 * n - 1 > 2 * m || 2 * m >= 2 * n * n - 3 * (n - 1);

  Sum q = g.size();
  int w = 2 * n - 1;
  ConstructionTrace tr{"o-odd", {}};
  TraceStep st;
  st.k = 1;
  st.graph = join(g, empty_graph(w));
  st.labels.assign(st.graph.size(), 0);
  carry(g, f, st.graph, 0, 0, st.labels);
  auto r = checked(nearly_magic_rectangle(2 * m, w, q));
  std::vector<int> rows(2 * m);
  std::vector<int> low(v1), high(v2);
  std::sort(low.begin(), low.end());
  std::sort(high.begin(), high.end());
  std::vector<char> is_low(2 * m, 0);
  for (int i : r.low_rows) is_low[i] = 1;
  for (int i = 0, a = 0, c = 0; i < 2 * m; ++i) rows[i] = is_low[i] ? low[a++] : high[c++];
  place(r, rows, 2 * m, st.graph, st.labels);
  st.rectangles.push_back(use_of("all", r));
  fill_coloring(st);
  st.predicted = t + 1;

  auto after = induced(st.graph, st.labels).sums;
  st.classes_preserved = same_order(ic.sums, after, range(0, 2 * m));
  st.base_sums = distinct(after, 0, 2 * m);
  st.layer_sums.push_back(distinct(after, 2 * m, 2 * m + w));
  std::set<Sum> s1, s2;
  for (int v : v1) s1.insert(after[v] - ic.sums[v]);
  for (int v : v2) s2.insert(after[v] - ic.sums[v]);
  Sum o_formula = 2 * m * q + m * (2 * m * static_cast<Sum>(w) + 1);
  Sum base_shift = w * q + (w * (2 * m * static_cast<Sum>(w) + 1) - 1) / 2;
  bool uniform = s1.size() == 1 && s2.size() == 1 && st.layer_sums[0].size() == 1;
  st.extra["n"] = n;
  st.extra["m"] = m;
  st.extra["o_sum"] = st.layer_sums[0].size() == 1 ? nlohmann::ordered_json(st.layer_sums[0][0]) : nullptr;
  st.extra["shift_low"] = s1.size() == 1 ? nlohmann::ordered_json(*s1.begin()) : nullptr;
  st.extra["shift_high"] = s2.size() == 1 ? nlohmann::ordered_json(*s2.begin()) : nullptr;
  st.extra["o_sum_formula"] = o_formula;
  st.extra["shift_low_formula"] = base_shift;
  st.extra["shift_high_formula"] = base_shift + 1;
  st.extra["condition_iii"] = cond_iii;
  st.ordering_ok = uniform && st.layer_sums[0][0] == o_formula && *s1.begin() == base_shift &&
                   *s2.begin() == base_shift + 1;
  bool degrees = true;
  for (int v = 0; v < 2 * m; ++v) degrees = degrees && st.graph.degree(v) == g.degree(v) + w;
  for (int v = 2 * m; v < 2 * m + w; ++v) degrees = degrees && st.graph.degree(v) == 2 * m;
  st.shape_ok = st.graph.order() == 2 * m + w && degrees;
  tr.steps.push_back(std::move(st));
  return tr;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> color_split(const Graph& g, const Labels& f) {
  auto ic = induced(g, f);
  if (g.order() % 2 != 0) return std::nullopt;
  auto cc = color_classes(ic);
  std::vector<std::pair<Sum, std::vector<int>>> cls(cc.begin(), cc.end());
  int t = static_cast<int>(cls.size()), half = g.order() / 2;
  std::vector<char> pick(t, 0);
  std::optional<std::pair<std::vector<int>, std::vector<int>>> out;
  // V1 holds the lowest color; subsets come in lexicographic order
  std::function<bool(int, int)> go = [&](int i, int size) -> bool {
    if (size == half) {
      std::set<Sum> c1, c2;
      std::vector<int> a, b;
      for (int c = 0; c < t; ++c) {
        (pick[c] ? c1 : c2).insert(cls[c].first);
        auto& dst = pick[c] ? a : b;
        dst.insert(dst.end(), cls[c].second.begin(), cls[c].second.end());
      }
      if (!condition_ii(c1, c2)) return false;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      out = std::make_pair(a, b);
      return true;
    }
    if (i == t || size > half) return false;
    pick[i] = 1;
    if (go(i + 1, size + static_cast<int>(cls[i].second.size()))) return true;
    pick[i] = 0;
    return i > 0 && go(i + 1, size);
  };
  if (t > 0) go(0, 0);
  return out;
}

ConstructionTrace join_O_odd_split(const Graph& g, const Labels& f, int n) {
  auto split = color_split(g, f);
  if (!split) throw Error(Errc::precondition, "no split of the color classes satisfies (i) and (ii)", 1);
  auto tr = join_O_odd(g, f, split->first, split->second, n);
  if (tr.ok()) return tr;
  auto swapped = join_O_odd(g, f, split->second, split->first, n);
  return swapped.ok() ? swapped : tr;
}

ConstructionTrace join_two_regular(const Graph& g1, const Labels& f1, const Graph& g2, const Labels& f2) {
  auto b1 = check_base(g1, f1);
  auto b2 = check_base(g2, f2);
  if ((b1.p - b2.p) % 2 != 0) throw Error(Errc::precondition, "orders must have the same parity");
  Sum p1 = b1.p, p2 = b2.p, r1 = b1.r, r2 = b2.r;
  Sum d = (p2 - p1) * (p1 * p2 + 1) / 2 + (r1 - r2) * p1 * p2 - r2 * b1.q;
  auto s1 = induced(g1, f1), s2 = induced(g2, f2);
  for (Sum a : s1.colors)
    for (Sum c : s2.colors)
      if (c - a == d)
        throw Error(Errc::precondition, "forbidden sum difference: f1+ = " + std::to_string(a) +
                                            ", f2+ = " + std::to_string(c) + " differ by " + std::to_string(d));

  ConstructionTrace tr{"two-regular", {}};
  TraceStep st;
  st.k = 1;
  st.graph = join(g1, g2);
  st.labels.assign(st.graph.size(), 0);
  auto r = checked(magic_rectangle(b1.p, b2.p, 0));
  place(r, range(0, b1.p), b1.p, st.graph, st.labels);
  carry(g1, f1, st.graph, p1 * p2, 0, st.labels);
  carry(g2, f2, st.graph, p1 * p2 + b1.q, b1.p, st.labels);
  st.rectangles.push_back(use_of("all", r));
  fill_coloring(st);
  st.predicted = b1.t + b2.t;

  auto after = induced(st.graph, st.labels).sums;
  std::vector<Sum> before(s1.sums);
  before.insert(before.end(), s2.sums.begin(), s2.sums.end());
  st.classes_preserved = same_order(before, after, range(0, b1.p)) &&
                         same_order(before, after, range(b1.p, b1.p + b2.p));
  st.base_sums = distinct(after, 0, b1.p);
  st.layer_sums.push_back(distinct(after, b1.p, b1.p + b2.p));
  Sum shift1 = p2 * (p1 * p2 + 1) / 2 + r1 * p1 * p2;
  Sum shift2 = p1 * (p1 * p2 + 1) / 2 + r2 * (p1 * p2 + b1.q);
  bool formulas = true;
  for (int v = 0; v < b1.p; ++v) formulas = formulas && after[v] == s1.sums[v] + shift1;
  for (int v = 0; v < b2.p; ++v) formulas = formulas && after[b1.p + v] == s2.sums[v] + shift2;
  std::set<Sum> side1(st.base_sums.begin(), st.base_sums.end());
  bool apart = std::none_of(st.layer_sums[0].begin(), st.layer_sums[0].end(),
                            [&](Sum x) { return side1.count(x) > 0; });
  st.extra["forbidden_difference"] = d;
  st.extra["shift1"] = shift1;
  st.extra["shift2"] = shift2;
  st.ordering_ok = formulas && apart;
  bool degrees = true;
  for (int v = 0; v < b1.p; ++v) degrees = degrees && st.graph.degree(v) == b1.r + b2.p;
  for (int v = 0; v < b2.p; ++v) degrees = degrees && st.graph.degree(b1.p + v) == b2.r + b1.p;
  st.shape_ok = st.graph.order() == b1.p + b2.p && degrees;
  tr.steps.push_back(std::move(st));
  return tr;
}

ConstructionTrace join_self_iterated(const Graph& g, const Labels& f, int k) {
  auto b = check_base(g, f);
  if (k < 1) throw Error(Errc::precondition, "k must be at least 1");
  ConstructionTrace tr{"self-iter", {}};
  TraceStep first;
  first.k = 1;
  first.graph = g;
  first.labels = f;
  fill_coloring(first);
  first.predicted = b.t;
  first.classes_preserved = true;
  first.ordering_ok = true;
  first.base_sums = induced(g, f).colors;
  shape(first, b.p, b.r);
  tr.steps.push_back(first);
  Graph cur = g;
  Labels lab = f;
  for (int s = 2; s <= k; ++s) {
    auto st = join_two_regular(cur, lab, cur, lab).steps.front();
    st.k = s;
    int mult = 1 << (s - 1);
    st.predicted = mult * b.t;
    shape(st, mult * b.p, b.r + (mult - 1) * b.p);
    cur = st.graph;
    lab = st.labels;
    tr.steps.push_back(std::move(st));
  }
  return tr;
}

std::string GVOnVerdict::rule() const {
  if (case_i) return "first(i)";
  if (case_ii) return "first(ii)";
  if (regular_case) return "second";
  return "none";
}

GVOnVerdict applies_GVOn(int m, std::optional<int> r, int n) {
  GVOnVerdict v;
  v.parity = m >= 3 && n >= 1 && (m - n) % 2 == 0;
  if (!v.parity) return v;
  v.case_i = n >= m;
  v.case_ii = 2 * static_cast<Sum>(m) >= static_cast<Sum>(n) * n && n >= 4;
  if (r) {
    Sum mn = static_cast<Sum>(m) * n;
    v.regular_case = m > n && n >= 2 && 2 * mn * *r >= (m - n) * (mn + 1);
  }
  return v;
}

GVOnVerdict applies_GVOn(const Graph& g, int n) { return applies_GVOn(g.order(), g.regularity(), n); }

}  // namespace antimagic
