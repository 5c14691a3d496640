#include "plcsec/noise.hpp"

#include <cmath>

namespace plcsec {

void NoiseParams::validate() const {
  if (!(background_var > 0.0) || !std::isfinite(background_var))
    throw ConfigError("must be positive", "background_var");
  if (!(impulse_ratio >= 0.0) || !std::isfinite(impulse_ratio))
    throw ConfigError("must be nonnegative", "impulse_ratio");
  if (!(impulse_prob >= 0.0 && impulse_prob <= 1.0))
    throw ConfigError("must lie in [0, 1]", "impulse_prob");
}

AlphaPair alpha_factors_tilde(const NoiseParams& noise) {
  const double background = 1.0 / noise.background_var;
  return {background, background / (1.0 + noise.impulse_ratio)};
}

AlphaPair alpha_factors(double transmit_power, const NoiseParams& noise) {
  if (!(transmit_power > 0.0) || !std::isfinite(transmit_power))
    throw ConfigError("transmit power must be positive", "transmit_power");
  const AlphaPair t = alpha_factors_tilde(noise);
  return {transmit_power * t.background, transmit_power * t.impulsive};
}

double state_probability(const NoiseParams& noise, NoiseState state) noexcept {
  return state == NoiseState::background ? 1.0 - noise.impulse_prob : noise.impulse_prob;
}

std::array<NoiseEvent, 4> noise_events(const NoiseParams& dest, const NoiseParams& eav,
                                       double transmit_power) {
  const AlphaPair ab = alpha_factors(transmit_power, dest);
  const AlphaPair ae = alpha_factors(transmit_power, eav);
  std::array<NoiseEvent, 4> events{};
  std::size_t i = 0;
  for (NoiseState j : {NoiseState::background, NoiseState::impulsive}) {
    for (NoiseState k : {NoiseState::background, NoiseState::impulsive}) {
      events[i++] = {j, k, state_probability(dest, j) * state_probability(eav, k), ab[j], ae[k]};
    }
  }
  return events;
}

NoiseState sample_noise_state(const NoiseParams& noise, RandomStream& stream) {
  return stream.bernoulli(noise.impulse_prob) ? NoiseState::impulsive : NoiseState::background;
}

}  // namespace plcsec
