#include "beepmis/policy.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>

#include "beepmis/error.hpp"

namespace beepmis {

namespace {

double parse_double(std::string_view token, std::string_view what) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
    throw InvalidParameter("policy: malformed " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

std::string shortest(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

// Returns k when x == 2^-k exactly.
std::optional<std::uint32_t> negative_power_of_two(double x) {
  int exp = 0;
  const double mantissa = std::frexp(x, &exp);
  if (mantissa != 0.5 || exp > 1) return std::nullopt;
  return static_cast<std::uint32_t>(1 - exp);
}

}  // namespace

void validate(const PolicyConfig& config) {
  if (const auto* fb = std::get_if<LocalFeedbackConfig>(&config)) {
    if (!(fb->factor > 1.0)) throw InvalidParameter("policy: factor must be > 1");
    if (!(fb->cap > 0.0 && fb->cap < 1.0)) throw InvalidParameter("policy: cap must be in (0,1)");
    if (!(fb->initial > 0.0 && fb->initial <= fb->cap)) {
      throw InvalidParameter("policy: init must be in (0, cap]");
    }
  } else if (const auto* c = std::get_if<ConstantConfig>(&config)) {
    if (!(c->probability > 0.0 && c->probability <= 1.0)) {
      throw InvalidParameter("policy: probability must be in (0,1]");
    }
  }
}

PolicyConfig parse_policy(std::string_view text) {
  if (text == "sweep") return GlobalSweepConfig{};
  if (text == "feedback") return LocalFeedbackConfig{};

  constexpr std::string_view kConst = "const:";
  constexpr std::string_view kFeedback = "feedback:";
  PolicyConfig config;
  if (text.starts_with(kConst)) {
    config = ConstantConfig{parse_double(text.substr(kConst.size()), "probability")};
  } else if (text.starts_with(kFeedback)) {
    LocalFeedbackConfig fb;
    std::string_view rest = text.substr(kFeedback.size());
    if (rest.empty()) throw InvalidParameter("policy: empty feedback parameter list");
    while (!rest.empty()) {
      const std::size_t comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      const std::size_t eq = item.find('=');
      if (eq == std::string_view::npos) {
        throw InvalidParameter("policy: expected key=value, got '" + std::string(item) + "'");
      }
      const std::string_view key = item.substr(0, eq);
      const double value = parse_double(item.substr(eq + 1), key);
      if (key == "f") {
        fb.factor = value;
      } else if (key == "init") {
        fb.initial = value;
      } else if (key == "cap") {
        fb.cap = value;
      } else {
        throw InvalidParameter("policy: unknown feedback key '" + std::string(key) + "'");
      }
    }
    config = fb;
  } else {
    throw InvalidParameter("policy: unknown policy '" + std::string(text) + "'");
  }
  validate(config);
  return config;
}

std::string policy_name(const PolicyConfig& config) {
  struct Visitor {
    std::string operator()(const LocalFeedbackConfig& fb) const {
      if (fb == LocalFeedbackConfig{}) return "feedback";
      return "feedback:f=" + shortest(fb.factor) + ",init=" + shortest(fb.initial) +
             ",cap=" + shortest(fb.cap);
    }
    std::string operator()(const GlobalSweepConfig&) const { return "sweep"; }
    std::string operator()(const ConstantConfig& c) const { return "const:" + shortest(c.probability); }
  };
  return std::visit(Visitor{}, config);
}

// --- LocalFeedbackState ----------------------------------------------------

LocalFeedbackState::LocalFeedbackState(const LocalFeedbackConfig& config, std::size_t node_count)
    : config_(config) {
  validate(PolicyConfig{config});
  const auto init_exp = negative_power_of_two(config.initial);
  const auto cap_exp = negative_power_of_two(config.cap);
  exact_ = config.factor == 2.0 && init_exp && cap_exp;
  if (exact_) {
    floor_exponent_ = *cap_exp;
    exponents_.assign(node_count, *init_exp);
  } else {
    probabilities_.assign(node_count, config.initial);
  }
}

BeepProbability LocalFeedbackState::beep_probability(NodeId v) const {
  if (exact_) return BeepProbability::dyadic(exponents_[v]);
  return BeepProbability::real(probabilities_[v]);
}

void LocalFeedbackState::update_feedback(NodeId v, bool heard_beep) {
  if (exact_) {
    std::uint32_t& e = exponents_[v];
    if (heard_beep) {
      ++e;
    } else {
      e = std::max(e - 1, floor_exponent_);
    }
    return;
  }
  double& p = probabilities_[v];
  p = heard_beep ? std::max(p / config_.factor, kMinProbability) : std::min(p * config_.factor, config_.cap);
}

// --- GlobalSweepState ------------------------------------------------------

GlobalSweepState::Position GlobalSweepState::locate(std::uint64_t step) {
  if (step == 0) throw InvalidParameter("sweep step is 1-based");
  auto phase_start = [](std::uint64_t k) { return 1 + (k - 1) * (k + 2) / 2; };
  // (k-1)(k+2)/2 ~ k^2/2, so k ~ sqrt(2t); correct the estimate locally.
  auto k = static_cast<std::uint64_t>(std::sqrt(2.0 * static_cast<double>(step)));
  k = std::max<std::uint64_t>(k, 1);
  while (k > 1 && phase_start(k) > step) --k;
  while (phase_start(k + 1) <= step) ++k;
  return {k, step - phase_start(k)};
}

BeepProbability GlobalSweepState::probability_at(std::uint64_t step) {
  return BeepProbability::dyadic(static_cast<std::uint32_t>(locate(step).index));
}

BeepProbability GlobalSweepState::beep_probability() const { return probability_at(step_); }

// --- ConstantState ---------------------------------------------------------

ConstantState::ConstantState(double probability) : probability_(BeepProbability::real(probability)) {}

// --- PolicyState -----------------------------------------------------------

BeepProbability PolicyState::beep_probability(NodeId v) const {
  struct Visitor {
    NodeId v;
    BeepProbability operator()(const LocalFeedbackState& s) const { return s.beep_probability(v); }
    BeepProbability operator()(const GlobalSweepState& s) const { return s.beep_probability(); }
    BeepProbability operator()(const ConstantState& s) const { return s.beep_probability(); }
  };
  return std::visit(Visitor{v}, state_);
}

void PolicyState::update_feedback(NodeId v, bool heard_beep) {
  if (auto* fb = std::get_if<LocalFeedbackState>(&state_)) fb->update_feedback(v, heard_beep);
}

void PolicyState::end_round() {
  if (auto* sweep = std::get_if<GlobalSweepState>(&state_)) sweep->advance_sweep();
}

PolicyState make_policy_state(const PolicyConfig& config, std::size_t node_count) {
  validate(config);
  struct Visitor {
    std::size_t n;
    PolicyState operator()(const LocalFeedbackConfig& c) const { return PolicyState(LocalFeedbackState(c, n)); }
    PolicyState operator()(const GlobalSweepConfig&) const { return PolicyState(GlobalSweepState{}); }
    PolicyState operator()(const ConstantConfig& c) const { return PolicyState(ConstantState(c.probability)); }
  };
  return std::visit(Visitor{node_count}, config);
}

}  // namespace beepmis
