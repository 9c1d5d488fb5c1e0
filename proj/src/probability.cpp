#include "beepmis/probability.hpp"

#include <cmath>
#include <string>

#include "beepmis/error.hpp"

namespace beepmis {

double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

BeepProbability BeepProbability::real(double p) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw InvalidParameter("probability must be in (0,1], got " + std::to_string(p));
  }
  return BeepProbability(0, p);
}

std::optional<std::uint32_t> BeepProbability::exponent() const {
  if (!dyadic_) return std::nullopt;
  return exponent_;
}

double BeepProbability::value() const {
  return dyadic_ ? std::ldexp(1.0, -static_cast<int>(exponent_)) : real_;
}

bool BeepProbability::sample(Rng& rng) const {
  if (!dyadic_) return uniform_unit(rng) < real_;
  // 2^-k: the first k random bits must all be zero.
  std::uint32_t remaining = exponent_;
  do {
    const std::uint64_t word = rng();
    if (remaining < 64) return remaining == 0 || (word >> (64 - remaining)) == 0;
    if (word != 0) return false;
    remaining -= 64;
  } while (remaining > 0);
  return true;
}

}  // namespace beepmis
