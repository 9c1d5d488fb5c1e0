#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace beepmis {

using NodeId = std::uint32_t;

struct Edge {
  NodeId u;
  NodeId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable undirected simple graph over dense node indices 0..n-1.
///
/// Adjacency is stored in compressed sparse row form; every neighbour list is
/// strictly increasing, symmetric and free of self-loops. Construction
/// validates all three properties, so a Graph value is always well formed.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an unordered edge list. Each undirected edge must
  /// appear once (in either orientation).
  /// Throws InvalidParameter on out-of-range endpoints, self-loops or
  /// duplicate edges.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges);

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const NodeId> neighbours(NodeId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const;
  bool adjacent(NodeId u, NodeId v) const;

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
};

// Generators. All are deterministic; erdos_renyi is driven only by its seed.

Graph complete_graph(std::size_t d);

/// m disjoint copies of K_d for every d in 1..m, laid out copy by copy in
/// increasing d. Total nodes m * m(m+1)/2.
Graph clique_family(std::size_t m);

/// G(n, p): unordered pairs visited in lexicographic order (0,1), (0,2), ...
/// each kept with probability p_edge.
Graph erdos_renyi(std::size_t n, double p_edge, std::uint64_t seed);

/// rows x cols lattice with 4-neighbour adjacency; node (r, c) has index r*cols + c.
Graph grid_graph(std::size_t rows, std::size_t cols);

Graph path_graph(std::size_t n);

/// Number of connected components (isolated nodes count as components).
std::size_t component_count(const Graph& g);

// Edge-list text format: a header line "n m" followed by m lines "u v".

Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace beepmis
