#include "plcsec/channel.hpp"

#include <cmath>
#include <string>

#include "plcsec/special_math.hpp"

namespace plcsec {

void LinkParams::validate() const {
  if (!std::isfinite(m)) throw ConfigError("log-normal mean must be finite", "m");
  if (!(s > 0.0) || !std::isfinite(s)) throw ConfigError("log-normal spread must be positive", "s");
}

LinkParams LinkParams::from_db(double m_db, double s_db) {
  if (!(s_db > 0.0) || !std::isfinite(s_db)) throw ConfigError("spread must be positive", "s_db");
  if (!std::isfinite(m_db)) throw ConfigError("mean must be finite", "m_db");
  return {m_db * kDbToNatural, s_db * kDbToNatural};
}

LinkParams link_params_from_db(double m_db, double s_db) { return LinkParams::from_db(m_db, s_db); }

namespace {
void require_positive(double x, const char* op) {
  if (!(x > 0.0)) throw DomainError(std::string(op) + ": argument must be > 0");
}
}  // namespace

double lognormal_pdf(double x, const LinkParams& link) {
  require_positive(x, "lognormal_pdf");
  const double z = (std::log(x) - link.m) / link.s;
  return normal_pdf(z) / (x * link.s);
}

double lognormal_cdf(double x, const LinkParams& link) {
  require_positive(x, "lognormal_cdf");
  if (std::isinf(x)) return 1.0;
  return q_function(-(std::log(x) - link.m) / link.s);
}

double lognormal_mean(const LinkParams& link) { return std::exp(link.m + 0.5 * link.s * link.s); }

void PinholeTopology::validate() const {
  auto check = [](const LinkParams& l, const char* name) {
    try {
      l.validate();
    } catch (const ConfigError& e) {
      throw ConfigError(e.what(), std::string(name));
    }
  };
  check(source_link, "source_link");
  check(destination_link, "destination_link");
  check(eavesdropper_link, "eavesdropper_link");
  if (n_destinations < 1) throw ConfigError("at least one destination is required", "n_destinations");
}

ResolvedLinks resolve_links(const PinholeTopology& topo) {
  if (topo.pinhole_present) return {topo.source_link, topo.destination_link, topo.eavesdropper_link};
  const double shift = topo.source_link.m + 0.5 * topo.source_link.s * topo.source_link.s;
  LinkParams dest = topo.destination_link;
  LinkParams eav = topo.eavesdropper_link;
  dest.m += shift;
  eav.m += shift;
  return {std::nullopt, dest, eav};
}

double best_destination_cdf(double x, const PinholeTopology& topo) {
  require_positive(x, "best_destination_cdf");
  if (std::isinf(x)) return 1.0;
  const LinkParams& link = topo.destination_link;
  const double z = (std::log(x) - link.m) / link.s;
  if (topo.n_destinations == 1) return q_function(-z);
  return std::exp(topo.n_destinations * log_one_minus_q(z));
}

double best_destination_pdf(double x, const PinholeTopology& topo) {
  require_positive(x, "best_destination_pdf");
  const LinkParams& link = topo.destination_link;
  const double z = (std::log(x) - link.m) / link.s;
  const int n = topo.n_destinations;
  const double order_factor = n == 1 ? 1.0 : n * std::exp((n - 1) * log_one_minus_q(z));
  return order_factor * normal_pdf(z) / (x * link.s);
}

double sample_gain(const LinkParams& link, RandomStream& stream) {
  return std::exp(link.m + link.s * stream.standard_normal());
}

}  // namespace plcsec
