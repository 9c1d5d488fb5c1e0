#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "beepmis/graph.hpp"

namespace beepmis {

struct VerifyReport {
  bool independent = true;
  bool maximal = true;
  /// Lexicographically first edge inside the candidate set, if any.
  std::optional<Edge> violating_edge;
  /// Lowest-index vertex outside the set with no neighbour inside it, if any.
  std::optional<NodeId> addable_vertex;

  bool ok() const noexcept { return independent && maximal; }
  /// Human-readable witness: "edge (u,v)" or "vertex v addable"; empty when ok.
  std::string witness() const;
};

/// Checks independence and maximality of `candidate` (duplicates ignored).
/// Throws InvalidParameter when an index is out of range.
VerifyReport check_mis(const Graph& g, std::span<const NodeId> candidate);

/// Every maximal independent set of g, each sorted ascending and the family
/// ordered lexicographically. Brute force over all 2^n subsets; throws
/// TooLarge for more than kMaxEnumerationNodes nodes.
inline constexpr std::size_t kMaxEnumerationNodes = 20;
std::vector<std::vector<NodeId>> enumerate_mis(const Graph& g);

}  // namespace beepmis
