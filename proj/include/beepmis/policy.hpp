#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "beepmis/graph.hpp"
#include "beepmis/probability.hpp"

namespace beepmis {

// ---------------------------------------------------------------------------
// Configurations. These are plain values parsed from the policy grammar
//   feedback | feedback:f=<float>,init=<float>,cap=<float> | sweep | const:<float>
// and turned into per-run state by make_policy_state().
// ---------------------------------------------------------------------------

struct LocalFeedbackConfig {
  double factor = 2.0;
  double initial = 0.5;
  double cap = 0.5;

  friend bool operator==(const LocalFeedbackConfig&, const LocalFeedbackConfig&) = default;
};

struct GlobalSweepConfig {
  friend bool operator==(const GlobalSweepConfig&, const GlobalSweepConfig&) = default;
};

struct ConstantConfig {
  double probability = 1.0;

  friend bool operator==(const ConstantConfig&, const ConstantConfig&) = default;
};

using PolicyConfig = std::variant<LocalFeedbackConfig, GlobalSweepConfig, ConstantConfig>;

/// Throws InvalidParameter on grammar or range violations.
PolicyConfig parse_policy(std::string_view text);

/// Canonical grammar string; parse_policy(policy_name(c)) == c.
std::string policy_name(const PolicyConfig& config);

void validate(const PolicyConfig& config);

// ---------------------------------------------------------------------------
// Per-run state.
// ---------------------------------------------------------------------------

/// Per-node beep probabilities driven by what each node hears.
///
/// With factor 2 and power-of-two initial/cap values the state is an integer
/// exponent per node and probabilities are exact: 2^-e, e >= e_cap. Any other
/// factor switches to floating point, clamped to [2^-64, cap].
class LocalFeedbackState {
 public:
  static constexpr double kMinProbability = 0x1.0p-64;

  LocalFeedbackState(const LocalFeedbackConfig& config, std::size_t node_count);

  BeepProbability beep_probability(NodeId v) const;

  /// Heard a beep: probability divided by the factor. Silent round:
  /// probability multiplied by the factor, capped.
  void update_feedback(NodeId v, bool heard_beep);

  bool exact() const noexcept { return exact_; }
  /// Integer exponent of node v (exact mode only).
  std::uint32_t exponent(NodeId v) const { return exponents_.at(v); }
  std::size_t node_count() const noexcept { return exact_ ? exponents_.size() : probabilities_.size(); }

 private:
  LocalFeedbackConfig config_;
  bool exact_ = true;
  std::uint32_t floor_exponent_ = 1;
  std::vector<std::uint32_t> exponents_;
  std::vector<double> probabilities_;
};

/// Phase k (k = 1, 2, ...) has k+1 steps; step i of a phase (0-based) uses
/// probability 2^-i. All nodes share the same probability.
class GlobalSweepState {
 public:
  struct Position {
    std::uint64_t phase;
    std::uint64_t index;
  };

  /// 1-based global step of the current round.
  std::uint64_t step() const noexcept { return step_; }
  Position position() const { return locate(step_); }
  BeepProbability beep_probability() const;
  void advance_sweep() { ++step_; }

  /// Phase k starts at step 1 + (k-1)(k+2)/2; picks the largest such k <= t.
  static Position locate(std::uint64_t step);
  static BeepProbability probability_at(std::uint64_t step);

 private:
  std::uint64_t step_ = 1;
};

class ConstantState {
 public:
  explicit ConstantState(double probability);
  BeepProbability beep_probability() const { return probability_; }

 private:
  BeepProbability probability_;
};

/// Owns whichever policy state a run uses and dispatches the per-round hooks.
class PolicyState {
 public:
  using Variant = std::variant<LocalFeedbackState, GlobalSweepState, ConstantState>;

  explicit PolicyState(Variant state) : state_(std::move(state)) {}

  /// Probability for an Active node v in the current round.
  BeepProbability beep_probability(NodeId v) const;

  /// Called for every node still Active after the round's deactivations.
  void update_feedback(NodeId v, bool heard_beep);

  /// Called once at the end of every round.
  void end_round();

  const Variant& state() const noexcept { return state_; }

 private:
  Variant state_;
};

PolicyState make_policy_state(const PolicyConfig& config, std::size_t node_count);

}  // namespace beepmis
