#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/labeling.hpp"
#include "json.hpp"

namespace antimagic {

struct SearchBudget {
  std::uint64_t nodes_per_partition = 20'000'000;
  int threads = 1;
};

enum class Outcome { found, none, budget };
const char* outcome_name(Outcome o);

struct SearchResult {
  Outcome outcome = Outcome::none;
  Labels labels;  // set when found
  std::uint64_t nodes = 0;
  std::size_t partitions = 0;  // candidate color-class partitions
};

// Partitions of V into exactly t nonempty independent sets, as class
// indices per vertex in restricted-growth form, lexicographic.
std::vector<std::vector<int>> independent_partitions(const Graph& g, int t);

// Local antimagic labeling with exactly t induced colors. Every partition
// of V into t independent classes is searched in order; the witness is the
// first one found in that order whatever the thread count. none means the
// whole space was exhausted.
SearchResult find_labeling(const Graph& g, int t, const SearchBudget& budget = {});

// Same search on one fixed partition; targets pin class sums when given.
SearchResult find_labeling_fixed(const Graph& g, const std::vector<int>& classes,
                                 const std::vector<std::optional<Sum>>& targets, std::uint64_t node_budget);

struct Certificate {
  std::string rule;  // chromatic, bipartite-equal-sides, bipartite-divisibility, cube-4+4, class-sum, exhaustive
  int bound = 0;     // chi_la >= bound
  nlohmann::ordered_json params;
};

struct LowerBound {
  int bound = 1;
  std::vector<Certificate> fired;  // every rule that applied
};

LowerBound lower_bound(const Graph& g);

// Re-derives a lower-bound certificate without trusting lower_bound().
bool recheck(const Graph& g, const Certificate& c);

// True when some spanning subgraph of g is isomorphic to h (same order).
bool has_spanning_copy(const Graph& g, const Graph& h);

enum class Feasibility { infeasible, unknown };

struct ClassSumCase {
  std::vector<int> sizes;       // class sizes
  std::vector<Sum> targets;     // class sums, same order
  bool consistent = false;      // label systems exist for it
};

struct ClassSumReport {
  Feasibility verdict = Feasibility::unknown;
  std::size_t partitions = 0;
  std::vector<ClassSumCase> cases;  // every accounting-admissible case examined
};

// Necessary conditions for a local antimagic t-coloring of a regular graph:
// class-sum accounting plus existence of disjoint label sets per class that
// fit together edge by edge. infeasible is a proof; unknown is not.
ClassSumReport class_sum_feasible(const Graph& g, int t);

struct SolveOptions {
  SearchBudget search;
  std::size_t exhaustive_max_size = 12;  // exclusion by search only up to this q
  std::optional<Labels> known_witness;   // e.g. a fixture, verified before use
};

struct SolveReport {
  std::string status;  // exact, interval, none
  int lower = 0;
  std::optional<int> upper;
  Labels witness;
  std::vector<Certificate> certificates;  // one per excluded color count
  std::uint64_t nodes = 0;
  double seconds = 0;

  std::optional<int> value() const {
    if (status == "exact") return lower;
    return std::nullopt;
  }
};

SolveReport solve(const Graph& g, const SolveOptions& opts = {});

nlohmann::ordered_json solve_json(const Graph& g, const SolveReport& r);

// Tuples (a,...,i) solving the prism equation system over bijections of
// [1,9] with f = min{a,...,f}, sorted lexicographically.
using C3P2Tuple = std::array<int, 9>;
std::vector<C3P2Tuple> enumerate_c3p2();
bool c3p2_equations_hold(const C3P2Tuple& t);
// The labeling of prism(3) that a tuple describes.
Labels c3p2_labels(const C3P2Tuple& t);

}  // namespace antimagic
