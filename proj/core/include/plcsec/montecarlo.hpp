#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "plcsec/metrics.hpp"

namespace plcsec {

struct McConfig {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  double confidence = 0.99;

  void validate() const;

  friend bool operator==(const McConfig&, const McConfig&) = default;
};

/// Trials are grouped in fixed blocks; block b draws from substream b of the
/// seed, so results do not depend on the number of workers.
inline constexpr std::uint64_t kMcBlockSize = 1u << 14;

/// Brute-force ASC: per trial draw gamma_a, N destination gains, gamma_e and
/// both noise states, take the best destination, evaluate the clamped rate
/// difference under the realized states.
SecrecyResult mc_asc(const SystemConfig& cfg, const McConfig& mc);

/// mc_asc at several transmit powers using the same trials for every power.
std::vector<SecrecyResult> mc_asc_powers(const SystemConfig& cfg,
                                         std::span<const double> transmit_powers,
                                         const McConfig& mc);

/// Empirical frequency of a_b gamma_{n*} < a_e gamma_e with a binomial CI.
SecrecyResult mc_poi(const SystemConfig& cfg, const McConfig& mc);

/// Per-trial intercept indicators of the first `count` trials (for
/// common-random-number checks).
std::vector<std::uint8_t> mc_poi_outcomes(const SystemConfig& cfg, const McConfig& mc,
                                          std::uint64_t count);

/// Two-sided standard normal quantile for the given confidence level.
double normal_critical_value(double confidence);

}  // namespace plcsec
