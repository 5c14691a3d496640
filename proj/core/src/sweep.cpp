#include "plcsec/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <ostream>
#include <thread>

#include <fmt/format.h>

namespace plcsec {

std::string_view to_string(SweepAxis a) noexcept {
  return a == SweepAxis::transmit_power_db ? "transmit_power_db" : "n_destinations";
}

std::string_view to_string(Metric m) noexcept { return m == Metric::asc ? "asc" : "poi"; }

SweepAxis parse_axis(std::string_view name) {
  if (name == "transmit_power_db") return SweepAxis::transmit_power_db;
  if (name == "n_destinations") return SweepAxis::n_destinations;
  throw ConfigError("unknown axis '" + std::string(name) +
                        "' (expected transmit_power_db or n_destinations)",
                    "axis");
}

Metric parse_metric(std::string_view name) {
  if (name == "asc") return Metric::asc;
  if (name == "poi") return Metric::poi;
  throw ConfigError("unknown metric '" + std::string(name) + "' (expected asc or poi)", "metric");
}

bool method_supports(Metric metric, Method method) noexcept {
  switch (method) {
    case Method::quadrature:
    case Method::monte_carlo:
      return true;
    case Method::asymptotic:
    case Method::asymptotic_large_n:
      return metric == Metric::asc;
    case Method::closed_form_poi:
      return metric == Metric::poi;
  }
  return false;
}

bool operator==(const SweepSpec& a, const SweepSpec& b) {
  return a.label == b.label && a.axis == b.axis && a.values == b.values && a.metric == b.metric &&
         a.methods == b.methods && a.base.topology == b.base.topology &&
         a.base.dest_noise == b.base.dest_noise && a.base.eav_noise == b.base.eav_noise &&
         a.base.quadrature.order() == b.base.quadrature.order() &&
         a.base.q_approx == b.base.q_approx && a.transmit_power_db == b.transmit_power_db &&
         a.monte_carlo == b.monte_carlo;
}

void SweepSpec::validate() const {
  if (values.empty()) throw ConfigError("must not be empty", "values");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) throw ConfigError("must be finite", "values");
    if (i > 0 && !(values[i] > values[i - 1])) throw ConfigError("must be strictly increasing", "values");
    if (axis == SweepAxis::n_destinations &&
        (values[i] < 1 || values[i] != std::floor(values[i]) || values[i] > 1e6))
      throw ConfigError("n_destinations values must be positive integers", "values");
  }
  if (methods.empty()) throw ConfigError("must not be empty", "methods");
  for (std::size_t i = 0; i < methods.size(); ++i) {
    if (!method_supports(metric, methods[i]))
      throw ConfigError(fmt::format("method {} is not available for metric {}", to_string(methods[i]),
                                    to_string(metric)),
                        "methods");
    if (std::find(methods.begin(), methods.begin() + static_cast<std::ptrdiff_t>(i), methods[i]) !=
        methods.begin() + static_cast<std::ptrdiff_t>(i))
      throw ConfigError(fmt::format("duplicate method {}", to_string(methods[i])), "methods");
  }
  if (!std::isfinite(transmit_power_db)) throw ConfigError("must be finite", "system.transmit_power_db");
  base.validate();
  if (std::find(methods.begin(), methods.end(), Method::monte_carlo) != methods.end()) monte_carlo.validate();
}

SystemConfig SweepSpec::point(double axis_value) const {
  SystemConfig cfg = base;
  if (axis == SweepAxis::transmit_power_db)
    cfg.transmit_power = db_to_linear(axis_value);
  else
    cfg.topology.n_destinations = static_cast<int>(axis_value);
  return cfg;
}

namespace {

SecrecyResult evaluate(Metric metric, Method method, const SystemConfig& cfg, const McConfig& mc) {
  if (metric == Metric::asc) {
    switch (method) {
      case Method::quadrature: return asc_quadrature(cfg);
      case Method::asymptotic: return asc_asymptotic(cfg);
      case Method::asymptotic_large_n: return asc_asymptotic_large_n(cfg);
      case Method::monte_carlo: return mc_asc(cfg, mc);
      case Method::closed_form_poi: break;
    }
  } else {
    switch (method) {
      case Method::quadrature: return poi_quadrature(cfg);
      case Method::closed_form_poi: return poi_closed_form(cfg);
      case Method::monte_carlo: return mc_poi(cfg, mc);
      case Method::asymptotic:
      case Method::asymptotic_large_n: break;
    }
  }
  throw ConfigError(fmt::format("method {} is not available for metric {}", to_string(method),
                                to_string(metric)),
                    "methods");
}

void fail_row(SweepRow& row, std::string message) {
  row.value = std::numeric_limits<double>::quiet_NaN();
  row.ci_halfwidth = std::numeric_limits<double>::quiet_NaN();
  row.error = std::move(message);
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned workers) {
  spec.validate();
  const std::size_t n_methods = spec.methods.size();
  std::vector<SweepRow> rows(spec.values.size() * n_methods);
  for (std::size_t v = 0; v < spec.values.size(); ++v) {
    for (std::size_t m = 0; m < n_methods; ++m) {
      SweepRow& row = rows[v * n_methods + m];
      row.axis_value = spec.values[v];
      row.method = spec.label.empty() ? std::string(to_string(spec.methods[m]))
                                      : spec.label + "/" + std::string(to_string(spec.methods[m]));
      row.metric = spec.metric;
    }
  }

  // Work units write only into their own rows; output order is fixed above.
  std::vector<std::function<void()>> units;
  for (std::size_t m = 0; m < n_methods; ++m) {
    const Method method = spec.methods[m];
    if (method == Method::monte_carlo && spec.metric == Metric::asc &&
        spec.axis == SweepAxis::transmit_power_db) {
      // Common random numbers along the power axis.
      units.emplace_back([&spec, &rows, m, n_methods] {
        std::vector<double> powers;
        for (double db : spec.values) powers.push_back(db_to_linear(db));
        try {
          const auto results = mc_asc_powers(spec.base, powers, spec.monte_carlo);
          for (std::size_t v = 0; v < results.size(); ++v) {
            rows[v * n_methods + m].value = results[v].value;
            rows[v * n_methods + m].ci_halfwidth = results[v].ci_halfwidth;
          }
        } catch (const std::exception& e) {
          for (std::size_t v = 0; v < spec.values.size(); ++v) fail_row(rows[v * n_methods + m], e.what());
        }
      });
      continue;
    }
    for (std::size_t v = 0; v < spec.values.size(); ++v) {
      units.emplace_back([&spec, &rows, m, v, n_methods, method] {
        SweepRow& row = rows[v * n_methods + m];
        try {
          const SecrecyResult r = evaluate(spec.metric, method, spec.point(spec.values[v]), spec.monte_carlo);
          row.value = r.value;
          row.ci_halfwidth = r.ci_halfwidth;
        } catch (const std::exception& e) {
          fail_row(row, e.what());
        }
      });
    }
  }

  const unsigned n_threads = static_cast<unsigned>(std::min<std::size_t>(std::max(workers, 1u), units.size()));
  if (n_threads <= 1) {
    for (auto& unit : units) unit();
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < n_threads; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < units.size(); i = next++) units[i]();
      });
  }
  return rows;
}

void write_csv_header(std::ostream& out) { out << kCsvHeader << '\n'; }

void write_csv_rows(std::ostream& out, const std::vector<SweepRow>& rows) {
  for (const SweepRow& row : rows) {
    out << fmt::format("{:.12g},{},{},{:.12g},{:.12g}\n", row.axis_value, row.method,
                       to_string(row.metric), row.value, row.ci_halfwidth);
  }
}

bool has_errors(const std::vector<SweepRow>& rows) noexcept {
  return std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.error.has_value(); });
}

}  // namespace plcsec
