#pragma once

#include <string_view>

#include "plcsec/channel.hpp"
#include "plcsec/noise.hpp"
#include "plcsec/special_math.hpp"

namespace plcsec {

/// Complete scenario for one evaluation point.
struct SystemConfig {
  PinholeTopology topology;
  NoiseParams dest_noise;
  NoiseParams eav_noise;
  double transmit_power = 1.0;
  QuadratureRule quadrature;
  QApproxParams q_approx;

  void validate() const;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

enum class Method { quadrature, asymptotic, asymptotic_large_n, closed_form_poi, monte_carlo };

std::string_view to_string(Method m) noexcept;
/// Parses the CLI/config spelling ("quadrature", "asymptotic-large-n", ...).
Method parse_method(std::string_view name);

struct SecrecyResult {
  double value = 0.0;  // bpcu for ASC, probability for POI
  Method method = Method::quadrature;
  double ci_halfwidth = 0.0;
  /// Method-specific diagnostic. Closed forms: largest |term| of the
  /// alternating binomial sums. Quadrature ASC: size of any negative excess
  /// (0 when value >= 0). Monte Carlo: number of samples.
  double diagnostic = 0.0;
};

/// Secrecy capacity of one channel realization, averaged over the four
/// noise events with the positive-secrecy clamp applied per event.
double instantaneous_secrecy_capacity(double gain_a, double gain_n_star, double gain_e,
                                      const SystemConfig& cfg);

/// Average secrecy capacity by nested Gauss-Hermite quadrature. The raw value
/// is returned unclamped; a small negative value signals quadrature error.
SecrecyResult asc_quadrature(const SystemConfig& cfg);

/// High-SNR closed-form ASC (independent of P and of the shared link).
SecrecyResult asc_asymptotic(const SystemConfig& cfg);

/// Large-N, strong-destination reduction of asc_asymptotic: only the
/// dominant I-(j,k,n*) and I0(k,j,e) terms.
SecrecyResult asc_asymptotic_large_n(const SystemConfig& cfg);

/// Probability of intercept by Gauss-Hermite quadrature (exact expression).
SecrecyResult poi_quadrature(const SystemConfig& cfg);

/// Probability of intercept from the Q-approximation closed form.
SecrecyResult poi_closed_form(const SystemConfig& cfg);

inline constexpr int kMaxClosedFormDestinations = 1000;

/// Constants of the piecewise Q-approximation integrals for the
/// destination side at index n.
struct DestinationConstants {
  double a;      // sqrt(2 n k1 + 1)
  double b;      // n k2 / a
  double b_bar;  // -n k2 / a
  double c;      // 2 n k3
  double d;      // exp(-(c - b^2) / 2)
};

/// Eavesdropper-side constants at index n for event (k, j).
struct EavesdropperConstants {
  double a;      // sqrt(2 n k1 + 1 / phi^2)
  double b;      // (n k2 + lambda / phi^2) / a
  double b_bar;  // (-n k2 + lambda / phi^2) / a
  double c;      // 2 n k3 + lambda^2 / phi^2
  double d;      // exp(-(c - b^2) / 2)
  double d_bar;  // exp(-(c - b_bar^2) / 2)
};

struct AsymptoticConstants {
  double phi_e;       // s_e / s_b
  double lambda_kje;  // (m_e - m_b + ln(a~_{k,e} / a~_{j,b})) / s_b
  DestinationConstants destination;
  EavesdropperConstants eavesdropper;
};

/// Constants for destination noise state j, eavesdropper state k (1 or 2)
/// and expansion index n >= 0.
AsymptoticConstants asymptotic_constants(const SystemConfig& cfg, int j, int k, int n);

/// Per-event pieces of the asymptotic ASC, exposed for inspection and tests.
struct AsymptoticTerms {
  double dest_plus;   // I+_{j,k,n*}
  double dest_minus;  // I-_{j,k,n*}
  double eav_zero;    // I0_{k,j,e}
  double eav_plus;    // I+_{k,j,e}
  double eav_minus;   // I-_{k,j,e}
  double max_term;
};

AsymptoticTerms asymptotic_terms(const SystemConfig& cfg, int j, int k);

}  // namespace plcsec
