#pragma once

#include <cstdint>
#include <random>

namespace tropsvm {

/// splitmix64 finalizer; used to decorrelate derived seeds.
std::uint64_t mix64(std::uint64_t x);

/// Deterministic random source. All samplers use explicit inverse-transform /
/// Box-Muller formulas on top of mt19937_64 so that a given seed produces the
/// same stream on every platform and thread schedule.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(mix64(seed)) {}

  /// Uniform draw in the open interval (0, 1).
  double uniform();
  /// Uniform draw in [lo, hi).
  double uniform(double lo, double hi);
  /// Standard normal via Box-Muller (two uniforms per draw).
  double normal();
  /// Exp(1) via -log(U).
  double exponential();
  /// Standard Gumbel via -log(-log(U)).
  double gumbel();
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 eng_;
};

/// Seed for an independent per-trial stream: master-seed XOR trial index,
/// decorrelated through mix64 inside Rng. Identical results under any
/// execution order of the trials.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
  return master ^ (0x9e3779b97f4a7c15ULL * (trial + 1));
}

}  // namespace tropsvm
