#pragma once

#include <numbers>
#include <optional>

#include "plcsec/errors.hpp"
#include "plcsec/rng.hpp"

namespace plcsec {

/// 10 log10(g) -> ln(g): the shadowing convention applied to both the mean
/// and the standard deviation of a log-normal link.
inline constexpr double kDbToNatural = std::numbers::ln10 / 10.0;

/// Log-normal link: ln(gain) ~ N(m, s^2), natural-log domain.
struct LinkParams {
  double m = 0.0;
  double s = 1.0;

  static LinkParams from_db(double m_db, double s_db);
  double m_db() const noexcept { return m / kDbToNatural; }
  double s_db() const noexcept { return s / kDbToNatural; }

  void validate() const;

  friend bool operator==(const LinkParams&, const LinkParams&) = default;
};

/// Throws ConfigError when s_db <= 0.
LinkParams link_params_from_db(double m_db, double s_db);

double lognormal_pdf(double x, const LinkParams& link);
double lognormal_cdf(double x, const LinkParams& link);
double lognormal_mean(const LinkParams& link);

/// Source A, pinhole PH, destinations B_1..B_N (i.i.d. links) and
/// eavesdropper E. Without a pinhole the shared A-PH gain is fixed to 1.
struct PinholeTopology {
  LinkParams source_link;
  LinkParams destination_link;
  LinkParams eavesdropper_link;
  int n_destinations = 1;
  bool pinhole_present = true;

  void validate() const;

  friend bool operator==(const PinholeTopology&, const PinholeTopology&) = default;
};

/// Links as seen by the metrics. With a pinhole, `shared` is the A-PH link.
/// Without one, `shared` is empty and both branch means are raised by
/// ln E[gamma_a] = m_a + s_a^2 / 2, so each end-to-end link keeps the average
/// SNR of its pinhole counterpart.
struct ResolvedLinks {
  std::optional<LinkParams> shared;
  LinkParams destination;
  LinkParams eavesdropper;
};

ResolvedLinks resolve_links(const PinholeTopology& topo);

/// CDF of max_n gamma_n, i.e. lognormal_cdf(x)^N (log-space evaluation).
double best_destination_cdf(double x, const PinholeTopology& topo);
/// N F^{N-1}(x) f(x).
double best_destination_pdf(double x, const PinholeTopology& topo);

/// exp(m + s Z) with Z drawn from the stream.
double sample_gain(const LinkParams& link, RandomStream& stream);

}  // namespace plcsec
