#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "beepmis/graph.hpp"
#include "beepmis/policy.hpp"
#include "beepmis/probability.hpp"

namespace beepmis {

enum class NodeStatus : std::uint8_t { Active, InMIS, InactiveNeighbour };

/// Everything a run mutates. Confined to a single run.
struct SimState {
  std::uint64_t round = 0;
  std::vector<NodeStatus> status;
  PolicyState policy;
  std::vector<std::uint64_t> beeps;
  std::size_t active_count = 0;

  bool finished() const noexcept { return active_count == 0; }
};

SimState make_sim_state(const Graph& g, const PolicyConfig& policy);

/// What happened in one round. All three sets are sorted ascending.
struct RoundOutcome {
  std::vector<NodeId> beeped;
  std::vector<NodeId> joined_mis;
  std::vector<NodeId> newly_inactive;

  friend bool operator==(const RoundOutcome&, const RoundOutcome&) = default;
};

/// Executes one synchronous round.
///
///  1. Every Active node draws a beep from its policy probability, in
///     ascending node order (one draw sequence per Active node).
///  2. A node that beeped and heard no neighbour beep joins the MIS; its
///     Active neighbours become InactiveNeighbour.
///  3. Each node still Active gets a policy update: heard a beep -> lower
///     probability, silent -> higher (capped). Then the policy's round hook
///     runs (the global sweep advances).
///
/// Every emitted beep is counted, including beeps that collided.
RoundOutcome step(SimState& state, const Graph& g, Rng& rng);

/// Sum of the current beep probabilities of v's Active neighbours.
/// Diagnostic only. Throws InvalidParameter for out-of-range v.
double neighbourhood_weight(const SimState& state, const Graph& g, NodeId v);

struct RunOptions {
  /// Defaults to default_max_rounds(node_count).
  std::optional<std::uint64_t> max_rounds;
  bool record_trace = false;
};

/// 64 * ceil(log2(n + 2))^2 + 64.
std::uint64_t default_max_rounds(std::size_t node_count);

struct RunResult {
  std::vector<NodeId> mis;
  std::uint64_t rounds = 0;
  std::vector<std::uint64_t> beeps;
  std::uint64_t total_beeps = 0;
  bool terminated = false;
  std::optional<std::vector<RoundOutcome>> trace;

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// Steps until no node is Active or max_rounds rounds have run. Deterministic
/// in (graph, policy, seed, options).
RunResult run(const Graph& g, const PolicyConfig& policy, std::uint64_t seed, const RunOptions& options = {});

}  // namespace beepmis
