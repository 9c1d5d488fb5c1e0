#pragma once

#include <cstdint>
#include <optional>
#include <random>

namespace beepmis {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Uniform double in [0, 1) from the top 53 bits of one 64-bit draw.
double uniform_unit(Rng& rng);

/// A beep probability, either an exact dyadic value 2^-k or an arbitrary real
/// in (0, 1]. Dyadic values are sampled exactly from raw random bits.
class BeepProbability {
 public:
  static BeepProbability dyadic(std::uint32_t exponent) { return BeepProbability(exponent, 0.0); }
  static BeepProbability real(double p);

  bool is_dyadic() const noexcept { return dyadic_; }
  /// k for a dyadic value 2^-k.
  std::optional<std::uint32_t> exponent() const;
  double value() const;

  /// Draws a Bernoulli(value()) outcome. Dyadic 2^-k consumes ceil(k/64)
  /// words (at least one), stopping early once a nonzero bit is seen; real
  /// values consume exactly one word.
  bool sample(Rng& rng) const;

  friend bool operator==(const BeepProbability&, const BeepProbability&) = default;

 private:
  BeepProbability(std::uint32_t exponent, double p)
      : dyadic_(p == 0.0), exponent_(exponent), real_(p) {}

  bool dyadic_ = true;
  std::uint32_t exponent_ = 0;
  double real_ = 0.0;
};

}  // namespace beepmis
