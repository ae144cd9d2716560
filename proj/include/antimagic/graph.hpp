#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "antimagic/error.hpp"

namespace antimagic {

// Vertices are 0-based internally and printed 1-based.
struct Edge {
  int u;
  int v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph. Edges are kept sorted (u < v, lexicographic),
// so an edge labeling is just a vector indexed like edges().
class Graph {
 public:
  Graph() = default;
  Graph(int order, const std::vector<std::pair<int, int>>& edges, std::string name = {});

  int order() const { return order_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  bool adjacent(int u, int v) const;
  int edge_index(int u, int v) const;  // -1 when absent
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  const std::vector<int>& incident(int v) const { return inc_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  std::vector<int> degrees() const;
  std::optional<int> regularity() const;
  bool connected() const;
  // side[v] in {0,1} when bipartite
  bool bipartite(std::vector<int>* side = nullptr) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> inc_;
  std::vector<int> index_;  // order*order, -1 when absent
  std::string name_;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int m, int n);
Graph empty_graph(int n);
Graph circulant(int n, const std::vector<int>& distances);
Graph prism(int n);
Graph mobius(int order);
Graph catalog(std::string_view id);
std::vector<std::string> catalog_ids();

Graph join(const Graph& g, const Graph& h);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph add_edge(const Graph& g, int u, int v);
Graph remove_edge(const Graph& g, int u, int v);

// Descriptor grammar: cycle:n | path:n | complete:n | bipartite:m,n |
// empty:n | circulant:n:d1,d2,... | prism:n | mobius:2n | name:id |
// join(spec,spec)
Graph build(std::string_view spec);

struct ColoringBudget {
  std::uint64_t nodes = 50'000'000;
};

int clique_number(const Graph& g);
int greedy_colors(const Graph& g);
// Exact; throws budget_exhausted when the node budget runs out.
int chromatic_number(const Graph& g, ColoringBudget budget = {});
// Plain backtracking k-colorability, kept separate from chromatic_number.
bool is_k_colorable(const Graph& g, int k);

// Every independent set with at most max_size vertices, including the
// empty set; ordered by size, then lexicographically.
std::vector<std::vector<int>> independent_sets(const Graph& g, int max_size);

std::string edges_to_string(const Graph& g);

}  // namespace antimagic
