#include <algorithm>
#include <chrono>
#include <numeric>

#include "antimagic/solver.hpp"

namespace antimagic {

namespace {

bool has_k2_component(const Graph& g) {
  for (auto e : g.edges())
    if (g.degree(e.u) == 1 && g.degree(e.v) == 1) return true;
  return false;
}

}  // namespace

SolveReport solve(const Graph& g, const SolveOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  SolveReport rep;
  auto finish = [&] {
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
  };
  if (g.size() == 0) {
    rep.status = "exact";
    rep.lower = 1;
    rep.upper = 1;
    return finish();
  }
  if (has_k2_component(g)) {
    // both ends of an isolated edge always get the same sum
    rep.status = "none";
    rep.certificates.push_back({"k2-component", 0, nlohmann::ordered_json::object()});
    return finish();
  }

  auto lb = lower_bound(g);
  rep.lower = lb.bound;
  for (const auto& c : lb.fired)
    if (c.bound > 1) rep.certificates.push_back(c);

  if (opts.known_witness) {
    auto ic = induced(g, *opts.known_witness);
    if (!ic.local_antimagic) throw Error(Errc::invalid_labeling, "supplied witness is not local antimagic");
    rep.upper = ic.count();
    rep.witness = *opts.known_witness;
  }

  bool regular = g.regularity().has_value();
  for (int t = lb.bound; t <= g.order(); ++t) {
    if (rep.upper && t >= *rep.upper) break;
    bool excluded = false;
    if (regular && t <= 4) {
      auto cs = class_sum_feasible(g, t);
      if (cs.verdict == Feasibility::infeasible) {
        nlohmann::ordered_json cases = nlohmann::ordered_json::array();
        for (const auto& c : cs.cases) cases.push_back({{"sizes", c.sizes}, {"targets", c.targets}});
        rep.certificates.push_back({"class-sum", t + 1, {{"t", t}, {"partitions", cs.partitions}, {"cases", cases}}});
        excluded = true;
      }
    }
    if (!excluded) {
      auto res = find_labeling(g, t, opts.search);
      rep.nodes += res.nodes;
      if (res.outcome == Outcome::found) {
        rep.upper = t;
        rep.witness = res.labels;
        break;
      }
      if (res.outcome == Outcome::none && static_cast<std::size_t>(g.size()) <= opts.exhaustive_max_size) {
        rep.certificates.push_back({"exhaustive", t + 1, {{"t", t}, {"partitions", res.partitions}, {"nodes", res.nodes}}});
        excluded = true;
      }
    }
    if (excluded && rep.lower == t) rep.lower = t + 1;
  }
  rep.status = rep.upper && *rep.upper == rep.lower ? "exact" : "interval";
  return finish();
}

nlohmann::ordered_json solve_json(const Graph& g, const SolveReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = "solve/1";
  j["graph"] = g.name();
  j["order"] = g.order();
  j["size"] = g.size();
  j["status"] = r.status;
  if (auto v = r.value())
    j["value"] = *v;
  else
    j["value"] = nullptr;
  j["lower"] = r.lower;
  if (r.upper)
    j["upper"] = *r.upper;
  else
    j["upper"] = nullptr;
  auto certs = nlohmann::ordered_json::array();
  for (const auto& c : r.certificates) certs.push_back({{"rule", c.rule}, {"bound", c.bound}, {"params", c.params}});
  j["certificates"] = certs;
  if (!r.witness.empty())
    j["witness"] = labeling_json(g, r.witness);
  else
    j["witness"] = nullptr;
  j["nodes"] = r.nodes;
  return j;
}

bool c3p2_equations_hold(const C3P2Tuple& t) {
  auto [a, b, c, d, e, f, g, h, i] = t;
  return 2 * (a + b + c) + (g + h + i) == 45 && a + b + c == d + e + f && a + i == e + h && b + g == f + i &&
         c + h == d + g;
}

std::vector<C3P2Tuple> enumerate_c3p2() {
  std::vector<C3P2Tuple> out;
  C3P2Tuple t;
  std::iota(t.begin(), t.end(), 1);
  do {
    if (t[5] != *std::min_element(t.begin(), t.begin() + 6)) continue;
    if (c3p2_equations_hold(t)) out.push_back(t);
  } while (std::next_permutation(t.begin(), t.end()));
  std::sort(out.begin(), out.end());
  return out;
}

Labels c3p2_labels(const C3P2Tuple& t) {
  // prism(3): triangle 0,1,2, triangle 3,4,5, spokes i - i+3
  static const int ends[9][2] = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {1, 4}, {2, 5}, {0, 3}};
  Graph host = prism(3);
  Labels out(9);
  for (int k = 0; k < 9; ++k) out[host.edge_index(ends[k][0], ends[k][1])] = t[k];
  return out;
}

}  // namespace antimagic
