#pragma once

#include "antimagic/graph.hpp"
#include "oracles.hpp"

inline oracle::EdgeList edges_of(const antimagic::Graph& g) {
  oracle::EdgeList out;
  for (auto e : g.edges()) out.push_back({e.u, e.v});
  return out;
}
