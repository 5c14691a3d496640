#pragma once

#include <array>

#include "plcsec/errors.hpp"
#include "plcsec/rng.hpp"

namespace plcsec {

/// Bernoulli-Gaussian noise at one node class. The impulsive component has
/// variance impulse_ratio * background_var and is present with probability
/// impulse_prob, independently per node and transmission.
struct NoiseParams {
  double background_var = 1.0;
  double impulse_ratio = 0.0;
  double impulse_prob = 0.0;

  void validate() const;

  friend bool operator==(const NoiseParams&, const NoiseParams&) = default;
};

/// Noise state of a node: 1 = background only, 2 = background + impulse.
enum class NoiseState : int { background = 1, impulsive = 2 };

/// Signal-to-noise scale factors for the two noise states.
struct AlphaPair {
  double background;  // alpha_1
  double impulsive;   // alpha_2 = alpha_1 / (1 + eta)

  double operator[](NoiseState s) const noexcept {
    return s == NoiseState::background ? background : impulsive;
  }
};

/// P / eps^2 and P / (eps^2 (1 + eta)). Throws ConfigError for P <= 0.
AlphaPair alpha_factors(double transmit_power, const NoiseParams& noise);

/// The same factors with the transmit power stripped (P = 1).
AlphaPair alpha_factors_tilde(const NoiseParams& noise);

/// Probability of a node being in `state`: 1 - p or p.
double state_probability(const NoiseParams& noise, NoiseState state) noexcept;

/// Joint (destination j, eavesdropper k) noise event.
struct NoiseEvent {
  NoiseState j;
  NoiseState k;
  double probability;
  double alpha_b;
  double alpha_e;
};

/// The four events in order (1,1), (1,2), (2,1), (2,2).
std::array<NoiseEvent, 4> noise_events(const NoiseParams& dest, const NoiseParams& eav,
                                       double transmit_power);

NoiseState sample_noise_state(const NoiseParams& noise, RandomStream& stream);

}  // namespace plcsec
