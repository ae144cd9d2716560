#include <algorithm>
#include <set>

#include "antimagic/solver.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace antimagic;

namespace {

// every assignment of vertices to t nonempty independent classes, counted
// up to renaming the classes
std::size_t brute_partitions(const Graph& g, int t) {
  int n = g.order();
  std::vector<int> cls(n, 0);
  std::size_t count = 0;
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= t;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (int i = 0; i < n; ++i, c /= t) cls[i] = static_cast<int>(c % t);
    bool ok = true;
    for (auto e : g.edges()) ok = ok && cls[e.u] != cls[e.v];
    std::set<int> used(cls.begin(), cls.end());
    if (ok && static_cast<int>(used.size()) == t) ++count;
  }
  std::size_t fact = 1;
  for (int i = 2; i <= t; ++i) fact *= i;
  return count / fact;
}

std::vector<Graph> small_graphs() {
  return {cycle_graph(4),
          cycle_graph(5),
          cycle_graph(6),
          cycle_graph(7),
          path_graph(4),
          path_graph(5),
          complete_graph(4),
          complete_bipartite(1, 3),
          complete_bipartite(2, 3),
          complete_bipartite(2, 4),
          prism(3),
          add_edge(cycle_graph(5), 0, 2),
          add_edge(cycle_graph(6), 0, 3),
          join(path_graph(3), empty_graph(2))};
}

}  // namespace

TEST_SUITE("solver") {
  TEST_CASE("independent partitions agree with brute force") {
    for (const Graph& g : {cycle_graph(5), cycle_graph(6), prism(3), complete_bipartite(2, 3), path_graph(5)})
      for (int t = 2; t <= 5; ++t) {
        auto parts = independent_partitions(g, t);
        CAPTURE(g.name());
        CAPTURE(t);
        CHECK(parts.size() == brute_partitions(g, t));
        CHECK(std::is_sorted(parts.begin(), parts.end()));
        for (const auto& p : parts) {
          CHECK(p.front() == 0);
          int hi = 0;
          for (int c : p) {
            CHECK(c <= hi + 1);
            hi = std::max(hi, c);
          }
          CHECK(hi == t - 1);
        }
      }
  }

  TEST_CASE("solve agrees with the permutation oracle") {
    for (const Graph& g : small_graphs()) {
      CAPTURE(g.name());
      CAPTURE(edges_to_string(g));
      auto want = oracle::chi_la(g.order(), edges_of(g));
      auto rep = solve(g);
      REQUIRE(want.has_value());
      CHECK(rep.status == "exact");
      CHECK(rep.value() == want);
      auto ic = induced(g, rep.witness);
      CHECK(ic.local_antimagic);
      CHECK(ic.count() == *want);
    }
  }

  TEST_CASE("a K2 component admits no labeling") {
    Graph g = disjoint_union(cycle_graph(4), complete_graph(2));
    CHECK_FALSE(oracle::chi_la(g.order(), edges_of(g)).has_value());
    auto rep = solve(g);
    CHECK(rep.status == "none");
    CHECK_FALSE(rep.value().has_value());
  }

  TEST_CASE("lower-bound certificates re-check independently") {
    for (const Graph& g : {complete_bipartite(3, 3), complete_bipartite(2, 4), complete_bipartite(4, 4), prism(4),
                           cycle_graph(8), catalog("B2"), complete_graph(5)}) {
      CAPTURE(g.name());
      auto lb = lower_bound(g);
      CHECK(lb.bound >= chromatic_number(g));
      for (const auto& c : lb.fired) CHECK(recheck(g, c));
    }
    auto cube = lower_bound(prism(4));
    CHECK(cube.bound == 4);
    CHECK(std::any_of(cube.fired.begin(), cube.fired.end(), [](const auto& c) { return c.rule == "cube-4+4"; }));
    auto k33 = lower_bound(complete_bipartite(3, 3));
    CHECK(k33.bound == 3);
    // a certificate for the wrong graph must not pass
    Certificate fake{"bipartite-equal-sides", 3, {}};
    CHECK_FALSE(recheck(complete_bipartite(2, 3), fake));
    CHECK_FALSE(recheck(cycle_graph(5), fake));
    Certificate chrom{"chromatic", 4, {}};
    CHECK_FALSE(recheck(cycle_graph(5), chrom));
    CHECK(recheck(complete_graph(4), chrom));
  }

  TEST_CASE("class-sum exclusions are sound") {
    for (const Graph& g : {cycle_graph(5), cycle_graph(6), complete_graph(4), prism(3), catalog("Q"),
                           complete_bipartite(3, 3)})
      for (int t = 2; t <= 4; ++t) {
        CAPTURE(g.name());
        CAPTURE(t);
        auto cs = class_sum_feasible(g, t);
        if (cs.verdict != Feasibility::infeasible) continue;
        // an exclusion must agree with exhaustive search
        auto res = find_labeling(g, t);
        CHECK(res.outcome == Outcome::none);
      }
    // order-8 cubic graphs that do have 3-colorings must not be excluded
    for (const Graph& g : {mobius(8), catalog("H1"), catalog("H2"), catalog("H3")})
      CHECK(class_sum_feasible(g, 3).verdict == Feasibility::unknown);
  }

  TEST_CASE("fixed-partition search pins the targets") {
    Graph g = cycle_graph(6);
    std::vector<int> cls{0, 1, 0, 1, 0, 1};
    auto res = find_labeling_fixed(g, cls, {std::nullopt, std::nullopt}, 1'000'000);
    // bipartite with equal sides: two colors are impossible
    CHECK(res.outcome == Outcome::none);
    Graph c5 = cycle_graph(5);
    auto three = find_labeling(c5, 3);
    REQUIRE(three.outcome == Outcome::found);
    auto ic = induced(c5, three.labels);
    std::vector<int> part(5);
    std::vector<Sum> order;
    for (int v = 0; v < 5; ++v) {
      auto it = std::find(order.begin(), order.end(), ic.sums[v]);
      if (it == order.end()) order.push_back(ic.sums[v]), it = order.end() - 1;
      part[v] = static_cast<int>(it - order.begin());
    }
    std::vector<std::optional<Sum>> targets(order.begin(), order.end());
    auto again = find_labeling_fixed(c5, part, targets, 1'000'000);
    REQUIRE(again.outcome == Outcome::found);
    CHECK(induced(c5, again.labels).sums == ic.sums);
  }

  TEST_CASE("witness is independent of the thread count") {
    for (const Graph& g : {prism(3), catalog("Q"), mobius(8)}) {
      int t = *solve(g).upper;
      SearchBudget one{20'000'000, 1}, four{20'000'000, 4};
      auto a = find_labeling(g, t, one);
      auto b = find_labeling(g, t, four);
      REQUIRE(a.outcome == Outcome::found);
      CHECK(b.outcome == Outcome::found);
      CHECK(a.labels == b.labels);
    }
  }

  TEST_CASE("a tiny budget yields an interval, never a wrong value") {
    SolveOptions opts;
    opts.search.nodes_per_partition = 10;
    auto rep = solve(catalog("Q"), opts);
    if (rep.status == "exact") {
      CHECK(induced(catalog("Q"), rep.witness).count() == rep.lower);
    } else {
      CHECK(rep.status == "interval");
      CHECK_FALSE(rep.value().has_value());
    }
  }

  TEST_CASE("known witness caps the search") {
    Graph p4 = path_graph(4);
    SolveOptions opts;
    opts.known_witness = Labels{1, 3, 2};
    auto rep = solve(p4, opts);
    CHECK(rep.status == "exact");
    CHECK(rep.value() == oracle::chi_la(4, edges_of(p4)));
    CHECK(induced(p4, rep.witness).count() == *rep.value());

    Graph spider(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
    opts.known_witness = Labels{4, 2, 1, 3};
    CHECK_THROWS_AS(solve(spider, opts), Error);
  }

  TEST_CASE("prism equation system has twenty normalized solutions") {
    auto all = enumerate_c3p2();
    CHECK(all.size() == 20);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::set<C3P2Tuple>(all.begin(), all.end()).size() == all.size());
    for (const auto& t : all) {
      CHECK(c3p2_equations_hold(t));
      CHECK(t[5] == *std::min_element(t.begin(), t.begin() + 6));
      std::vector<int> sorted(t.begin(), t.end());
      std::sort(sorted.begin(), sorted.end());
      for (int k = 0; k < 9; ++k) CHECK(sorted[k] == k + 1);
      auto ic = induced(prism(3), c3p2_labels(t));
      CHECK(ic.local_antimagic);
      CHECK(ic.count() == 3);
    }
    C3P2Tuple bogus{1, 2, 3, 4, 5, 6, 7, 8, 9};
    CHECK_FALSE(c3p2_equations_hold(bogus));
  }

  TEST_CASE("solve JSON") {
    auto j = solve_json(cycle_graph(5), solve(cycle_graph(5)));
    CHECK(j["schema"] == "solve/1");
    CHECK(j["status"] == "exact");
    CHECK(j["value"] == 3);
    CHECK(j["witness"]["local_antimagic"] == true);
  }
}
