#include "plcsec/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace plcsec {

void SystemConfig::validate() const {
  topology.validate();
  try {
    dest_noise.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(e.what(), "dest_noise");
  }
  try {
    eav_noise.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(e.what(), "eav_noise");
  }
  if (!(transmit_power > 0.0) || !std::isfinite(transmit_power))
    throw ConfigError("must be positive", "transmit_power");
  q_approx.validate();
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::quadrature: return "quadrature";
    case Method::asymptotic: return "asymptotic";
    case Method::asymptotic_large_n: return "asymptotic-large-n";
    case Method::closed_form_poi: return "closed-form-poi";
    case Method::monte_carlo: return "monte-carlo";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::quadrature, Method::asymptotic, Method::asymptotic_large_n,
                   Method::closed_form_poi, Method::monte_carlo}) {
    if (to_string(m) == name) return m;
  }
  throw ConfigError("unknown method '" + std::string(name) + "'", "methods");
}

namespace {

constexpr double kLn2 = std::numbers::ln2;

// ln(1 + e^u) without overflow.
double softplus(double u) { return u > 0.0 ? u + std::log1p(std::exp(-u)) : std::log1p(std::exp(u)); }

std::string term_name(const NoiseEvent& ev) {
  return "(j=" + std::to_string(static_cast<int>(ev.j)) +
         ",k=" + std::to_string(static_cast<int>(ev.k)) + ")";
}

}  // namespace

double instantaneous_secrecy_capacity(double gain_a, double gain_n_star, double gain_e,
                                      const SystemConfig& cfg) {
  if (!(gain_a > 0.0 && gain_n_star > 0.0 && gain_e > 0.0))
    throw DomainError("instantaneous_secrecy_capacity: gains must be positive");
  double total = 0.0;
  for (const NoiseEvent& ev : noise_events(cfg.dest_noise, cfg.eav_noise, cfg.transmit_power)) {
    const double c_dest = std::log2(1.0 + ev.alpha_b * gain_a * gain_n_star);
    const double c_eav = std::log2(1.0 + ev.alpha_e * gain_a * gain_e);
    total += ev.probability * std::max(c_dest - c_eav, 0.0);
  }
  return total;
}

SecrecyResult asc_quadrature(const SystemConfig& cfg) {
  cfg.validate();
  const ResolvedLinks links = resolve_links(cfg.topology);
  const LinkParams& lb = links.destination;
  const LinkParams& le = links.eavesdropper;
  const int n = cfg.topology.n_destinations;
  const auto nodes = cfg.quadrature.nodes();
  const auto weights = cfg.quadrature.weights();
  const std::size_t order = nodes.size();

  // Outer expectation over the shared link; a single unit-weight point at
  // ln(gamma_a) = 0 when there is no pinhole.
  std::vector<double> outer_log_gain{0.0};
  std::vector<double> outer_weight{1.0};
  if (links.shared) {
    outer_log_gain.resize(order);
    outer_weight.assign(weights.begin(), weights.end());
    for (std::size_t l = 0; l < order; ++l)
      outer_log_gain[l] = links.shared->m + links.shared->s * nodes[l];
  }

  // Density of the best destination in the standardized variable:
  // N (1 - Q(t))^{N-1} relative to the standard normal.
  std::vector<double> order_factor(order);
  for (std::size_t l = 0; l < order; ++l)
    order_factor[l] = n == 1 ? 1.0 : n * std::exp((n - 1) * log_one_minus_q(nodes[l]));

  const AlphaPair tilde_b = alpha_factors_tilde(cfg.dest_noise);
  const AlphaPair tilde_e = alpha_factors_tilde(cfg.eav_noise);
  const double log_power = std::log(cfg.transmit_power);
  const double phi_e = le.s / lb.s;

  std::vector<double> dest_weight(order), eav_weight(order), dest_shift(order), eav_shift(order);
  double total = 0.0;
  for (const NoiseEvent& ev : noise_events(cfg.dest_noise, cfg.eav_noise, 1.0)) {
    if (ev.probability == 0.0) continue;
    const double log_ab = std::log(tilde_b[ev.j]);
    const double log_ae = std::log(tilde_e[ev.k]);
    const double log_ratio = log_ab - log_ae;
    const double lambda = (le.m - lb.m - log_ratio) / lb.s;
    for (std::size_t l = 0; l < order; ++l) {
      const double t = nodes[l];
      // F_e((a_b / a_e) y) at y = exp(s_b t + m_b): eavesdropper below destination.
      dest_weight[l] = order_factor[l] * q_function(-(lb.s * t + lb.m + log_ratio - le.m) / le.s);
      // 1 - F_{n*}((a_e / a_b) z) at z = exp(s_e t + m_e).
      eav_weight[l] = -std::expm1(n * log_one_minus_q(phi_e * t + lambda));
      dest_shift[l] = log_power + log_ab + lb.m + lb.s * t;
      eav_shift[l] = log_power + log_ae + le.m + le.s * t;
    }

    double event_sum = 0.0;
    for (std::size_t o = 0; o < outer_log_gain.size(); ++o) {
      double inner_dest = 0.0;
      double inner_eav = 0.0;
      for (std::size_t l = 0; l < order; ++l) {
        inner_dest += weights[l] * softplus(dest_shift[l] + outer_log_gain[o]) * dest_weight[l];
        inner_eav += weights[l] * softplus(eav_shift[l] + outer_log_gain[o]) * eav_weight[l];
      }
      const double diff = inner_dest - inner_eav;
      if (!std::isfinite(diff))
        throw EvaluationError("asc_quadrature: non-finite term " + term_name(ev) +
                              " at outer node " + std::to_string(o));
      event_sum += outer_weight[o] * diff;
    }
    total += ev.probability * event_sum / kLn2;
  }
  return {total, Method::quadrature, 0.0, std::max(-total, 0.0)};
}

SecrecyResult poi_quadrature(const SystemConfig& cfg) {
  cfg.validate();
  const ResolvedLinks links = resolve_links(cfg.topology);
  const LinkParams& lb = links.destination;
  const LinkParams& le = links.eavesdropper;
  const int n = cfg.topology.n_destinations;
  const double phi_e = le.s / lb.s;
  const AlphaPair tilde_b = alpha_factors_tilde(cfg.dest_noise);
  const AlphaPair tilde_e = alpha_factors_tilde(cfg.eav_noise);

  // Only the P-free ratio a~_e / a~_b enters, so the result does not depend
  // on the transmit power at all.
  double total = 0.0;
  for (const NoiseEvent& ev : noise_events(cfg.dest_noise, cfg.eav_noise, 1.0)) {
    if (ev.probability == 0.0) continue;
    const double lambda = (le.m - lb.m + std::log(tilde_e[ev.k] / tilde_b[ev.j])) / lb.s;
    double sum = 0.0;
    try {
      sum = expect_standard_normal(
          [&](double t) { return std::exp(n * log_one_minus_q(phi_e * t + lambda)); },
          cfg.quadrature);
    } catch (const EvaluationError& e) {
      throw EvaluationError("poi_quadrature " + term_name(ev) + ": " + e.what());
    }
    total += ev.probability * sum;
  }
  return {total, Method::quadrature, 0.0, 0.0};
}

}  // namespace plcsec
