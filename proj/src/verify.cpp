#include "beepmis/verify.hpp"

#include <algorithm>
#include <cstdint>

#include "beepmis/error.hpp"

namespace beepmis {

std::string VerifyReport::witness() const {
  if (violating_edge) {
    return "edge (" + std::to_string(violating_edge->u) + "," + std::to_string(violating_edge->v) + ")";
  }
  if (addable_vertex) return "vertex " + std::to_string(*addable_vertex) + " addable";
  return {};
}

VerifyReport check_mis(const Graph& g, std::span<const NodeId> candidate) {
  const std::size_t n = g.node_count();
  std::vector<bool> in_set(n, false);
  for (NodeId v : candidate) {
    if (v >= n) throw InvalidParameter("check_mis: node " + std::to_string(v) + " out of range");
    in_set[v] = true;
  }

  VerifyReport report;
  for (NodeId u = 0; u < n && report.independent; ++u) {
    if (!in_set[u]) continue;
    for (NodeId v : g.neighbours(u)) {
      if (u < v && in_set[v]) {
        report.independent = false;
        report.violating_edge = Edge{u, v};
        break;
      }
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    if (in_set[v]) continue;
    const auto nbrs = g.neighbours(v);
    if (std::none_of(nbrs.begin(), nbrs.end(), [&](NodeId w) { return in_set[w]; })) {
      report.maximal = false;
      report.addable_vertex = v;
      break;
    }
  }
  return report;
}

std::vector<std::vector<NodeId>> enumerate_mis(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n > kMaxEnumerationNodes) {
    throw TooLarge("enumerate_mis: " + std::to_string(n) + " nodes exceeds limit of " +
                   std::to_string(kMaxEnumerationNodes));
  }
  std::vector<std::uint32_t> nbr_mask(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId w : g.neighbours(v)) nbr_mask[v] |= std::uint32_t{1} << w;
  }

  std::vector<std::vector<NodeId>> family;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t set = 0; set < limit; ++set) {
    bool ok = true;
    for (NodeId v = 0; v < n && ok; ++v) {
      const bool inside = (set >> v) & 1U;
      const bool covered = (nbr_mask[v] & set) != 0;
      // Inside: no neighbour inside. Outside: some neighbour inside.
      ok = inside ? !covered : covered;
    }
    if (!ok) continue;
    std::vector<NodeId> members;
    for (NodeId v = 0; v < n; ++v) {
      if ((set >> v) & 1U) members.push_back(v);
    }
    family.push_back(std::move(members));
  }
  std::sort(family.begin(), family.end());
  return family;
}

}  // namespace beepmis
