#include <array>

#include "antimagic/graph.hpp"

namespace antimagic {

namespace {

// octagon 0..7 plus a perfect matching of chords
Graph octagon_with(const std::vector<std::pair<int, int>>& chords, const std::string& name) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 8; ++i) e.push_back({i, (i + 1) % 8});
  e.insert(e.end(), chords.begin(), chords.end());
  return Graph(8, e, name);
}

Graph cubic_h(int which) {
  switch (which) {
    case 1: return octagon_with({{2, 0}, {4, 6}, {5, 3}, {7, 1}}, "name:H1");
    case 2: return octagon_with({{4, 0}, {3, 1}, {5, 7}, {6, 2}}, "name:H2");
    default: return octagon_with({{4, 0}, {7, 1}, {5, 2}, {6, 3}}, "name:H3");
  }
}

Graph named(Graph g, const std::string& id) {
  g.set_name("name:" + id);
  return g;
}

}  // namespace

std::vector<std::string> catalog_ids() {
  return {"Q", "H1", "H2", "H3", "B1", "B2", "B3", "B4", "B5", "B6", "C3C4bar", "cone53"};
}

// Quartic order 8: B1..B3 as named; B4..B6 are the complements of the
// cubic graphs H1..H3, with B6 the one of chromatic number 4.
Graph catalog(std::string_view id) {
  if (id == "Q") return named(circulant(6, {1, 2}), "Q");
  if (id == "H1") return cubic_h(1);
  if (id == "H2") return cubic_h(2);
  if (id == "H3") return cubic_h(3);
  if (id == "B1") return named(complete_bipartite(4, 4), "B1");
  if (id == "B2") return named(complement(prism(4)), "B2");
  if (id == "B3") return named(circulant(8, {1, 2}), "B3");
  if (id == "B4") return named(complement(cubic_h(1)), "B4");
  if (id == "B5") return named(complement(cubic_h(2)), "B5");
  if (id == "B6") return named(complement(cubic_h(3)), "B6");
  if (id == "C3C4bar") return named(complement(disjoint_union(cycle_graph(3), cycle_graph(4))), "C3C4bar");
  if (id == "cone53") {
    // 5-cycle 1-4-3-6-8 joined to the independent set {2,5,7}
    std::array<int, 5> cyc{0, 3, 2, 5, 7};
    std::array<int, 3> hub{1, 4, 6};
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) e.push_back({cyc[i], cyc[(i + 1) % 5]});
    for (int c : cyc)
      for (int h : hub) e.push_back({c, h});
    return Graph(8, e, "name:cone53");
  }
  throw Error(Errc::invalid_spec, "unknown catalog name '" + std::string(id) + "'");
}

}  // namespace antimagic
