#pragma once

#include <algorithm>
#include <set>
#include <string>

#include "beepmis/graph.hpp"

namespace beepmis::testing {

// Structural check straight from the adjacency lists: strictly increasing
// rows, no self-loops, symmetry. Returns an empty string when the graph is well formed.
inline std::string adjacency_problem(const Graph& g) {
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const auto row = g.neighbours(v);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] >= g.node_count()) return "out of range neighbour at " + std::to_string(v);
      if (row[i] == v) return "self-loop at " + std::to_string(v);
      if (i > 0 && row[i - 1] >= row[i]) return "unsorted or duplicate row " + std::to_string(v);
      const auto back = g.neighbours(row[i]);
      if (std::find(back.begin(), back.end(), v) == back.end()) {
        return "asymmetric edge " + std::to_string(v) + "-" + std::to_string(row[i]);
      }
    }
  }
  return {};
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId v = 0; v < n; ++v) edges.push_back({v, static_cast<NodeId>((v + 1) % n)});
  return Graph::from_edges(n, edges);
}

}  // namespace beepmis::testing
