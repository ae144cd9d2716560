#pragma once

#include <optional>
#include <string>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/labeling.hpp"
#include "antimagic/rectangles.hpp"
#include "json.hpp"

namespace antimagic {

struct RectangleUse {
  std::string role;  // which edges it labels, e.g. "M", "N", "all"
  RectKind kind = RectKind::magic;
  int rows = 0;
  int cols = 0;
  Sum offset = 0;
};

struct TraceStep {
  int k = 0;
  Graph graph;
  Labels labels;
  int colors = 0;
  int predicted = 0;
  bool local_antimagic = false;
  std::vector<RectangleUse> rectangles;
  std::vector<Sum> base_sums;                // distinct sums on the original vertices, ascending
  std::vector<std::vector<Sum>> layer_sums;  // per added layer, constants in the claimed order
  bool classes_preserved = false;            // previous sums keep their equalities and their order
  bool ordering_ok = false;                  // the claimed sum order and stated constants hold
  bool shape_ok = false;                     // order and regularity match the closed forms
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();

  bool verified() const {
    return local_antimagic && colors == predicted && classes_preserved && ordering_ok && shape_ok;
  }
};

struct ConstructionTrace {
  std::string family;
  std::vector<TraceStep> steps;

  bool ok() const;
  nlohmann::ordered_json to_json(bool with_matrices = false) const;
};

// G_0 = G, G_s = G_{s-1} v O_{p-2r}; G is 2r-regular of order p and f0 a
// local antimagic chi(G)-coloring. Steps 1..k.
ConstructionTrace join_On_iterated(const Graph& g, const Labels& f0, int k);

// Labeling of C_L, L odd >= 3, with sums (L+3)/2 at v1, L+1 at even and
// L+2 at odd positions >= 3 (1-based).
Labels odd_cycle_labeling(int L);

// Labeling of O_{2n} v C_{2m} whose O sums are 4m^2n+4m^2+m and whose cycle
// sums alternate 4mn^2-4mn+2n+10m-1 (odd positions) and 4mn^2+12mn-6m+3
// (even positions). Found by search, memoized; throws budget_exhausted
// ("seed unavailable") when the search runs out.
Labels oc_seed_labeling(int n, int m, std::uint64_t node_budget = 200'000'000);

// G_0 = G, G_s = G_{s-1} v C_{p-2r+2}.
ConstructionTrace join_cycle_iterated(const Graph& g, const Labels& f0, int k,
                                      std::uint64_t seed_budget = 200'000'000);

// G v O_{2n-1} from a nearly magic rectangle; v1 and v2 split the color
// classes in halves. Conditions (i) and (ii) are errors carrying their
// number; (iii) is only reported, the labeling is verified directly.
ConstructionTrace join_O_odd(const Graph& g, const Labels& f, const std::vector<int>& v1,
                             const std::vector<int>& v2, int n);

// First split of the color classes into two halves that passes (ii),
// scanning class subsets by ascending sum order.
std::optional<std::pair<std::vector<int>, std::vector<int>>> color_split(const Graph& g, const Labels& f);

// join_O_odd on color_split's halves, falling back to the swapped halves
// when the first orientation does not verify.
ConstructionTrace join_O_odd_split(const Graph& g, const Labels& f, int n);

ConstructionTrace join_two_regular(const Graph& g1, const Labels& f1, const Graph& g2, const Labels& f2);

// G_1 = G, G_s = G_{s-1} v G_{s-1}, steps 1..k.
ConstructionTrace join_self_iterated(const Graph& g, const Labels& f, int k);

struct GVOnVerdict {
  bool parity = false;       // m = n (mod 2), m >= 3
  bool case_i = false;       // n >= m
  bool case_ii = false;      // m >= n^2/2 and n >= 4
  bool regular_case = false; // m > n >= 2, r >= (m-n)(mn+1)/(2mn)
  std::string rule() const;  // "first(i)", "first(ii)", "second" or "none"
};

GVOnVerdict applies_GVOn(int m, std::optional<int> r, int n);
GVOnVerdict applies_GVOn(const Graph& g, int n);

}  // namespace antimagic
