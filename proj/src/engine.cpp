#include "beepmis/engine.hpp"

#include <algorithm>
#include <bit>

#include "beepmis/error.hpp"

namespace beepmis {

SimState make_sim_state(const Graph& g, const PolicyConfig& policy) {
  const std::size_t n = g.node_count();
  return SimState{
      .round = 0,
      .status = std::vector<NodeStatus>(n, NodeStatus::Active),
      .policy = make_policy_state(policy, n),
      .beeps = std::vector<std::uint64_t>(n, 0),
      .active_count = n,
  };
}

RoundOutcome step(SimState& state, const Graph& g, Rng& rng) {
  const std::size_t n = g.node_count();
  RoundOutcome out;

  // First exchange.
  for (NodeId v = 0; v < n; ++v) {
    if (state.status[v] != NodeStatus::Active) continue;
    if (state.policy.beep_probability(v).sample(rng)) {
      out.beeped.push_back(v);
      ++state.beeps[v];
    }
  }
  std::vector<bool> heard(n, false);
  for (NodeId b : out.beeped) {
    for (NodeId w : g.neighbours(b)) heard[w] = true;
  }

  // Second exchange.
  for (NodeId b : out.beeped) {
    if (!heard[b]) {
      out.joined_mis.push_back(b);
      state.status[b] = NodeStatus::InMIS;
    }
  }
  out.newly_inactive = out.joined_mis;
  for (NodeId j : out.joined_mis) {
    for (NodeId w : g.neighbours(j)) {
      if (state.status[w] == NodeStatus::Active) {
        state.status[w] = NodeStatus::InactiveNeighbour;
        out.newly_inactive.push_back(w);
      }
    }
  }
  std::sort(out.newly_inactive.begin(), out.newly_inactive.end());
  state.active_count -= out.newly_inactive.size();

  // Survivors adjust.
  for (NodeId v = 0; v < n; ++v) {
    if (state.status[v] == NodeStatus::Active) state.policy.update_feedback(v, heard[v]);
  }
  state.policy.end_round();
  ++state.round;
  return out;
}

double neighbourhood_weight(const SimState& state, const Graph& g, NodeId v) {
  if (v >= g.node_count()) {
    throw InvalidParameter("neighbourhood_weight: node " + std::to_string(v) + " out of range");
  }
  double total = 0.0;
  for (NodeId w : g.neighbours(v)) {
    if (state.status[w] == NodeStatus::Active) total += state.policy.beep_probability(w).value();
  }
  return total;
}

std::uint64_t default_max_rounds(std::size_t node_count) {
  // ceil(log2(x)) for x >= 2 is bit_width(x - 1).
  const std::uint64_t lg = std::bit_width(static_cast<std::uint64_t>(node_count) + 1);
  return 64 * lg * lg + 64;
}

RunResult run(const Graph& g, const PolicyConfig& policy, std::uint64_t seed, const RunOptions& options) {
  const std::uint64_t max_rounds = options.max_rounds.value_or(default_max_rounds(g.node_count()));
  if (max_rounds == 0) throw InvalidParameter("run: max_rounds must be >= 1");

  SimState state = make_sim_state(g, policy);
  Rng rng(seed);
  RunResult result;
  if (options.record_trace) result.trace.emplace();

  while (!state.finished() && state.round < max_rounds) {
    RoundOutcome outcome = step(state, g, rng);
    if (result.trace) result.trace->push_back(std::move(outcome));
  }

  result.rounds = state.round;
  result.terminated = state.finished();
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (state.status[v] == NodeStatus::InMIS) result.mis.push_back(v);
    result.total_beeps += state.beeps[v];
  }
  result.beeps = std::move(state.beeps);
  return result;
}

}  // namespace beepmis
