#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plcsec/metrics.hpp"
#include "plcsec/montecarlo.hpp"

namespace plcsec {

enum class SweepAxis { transmit_power_db, n_destinations };
enum class Metric { asc, poi };

std::string_view to_string(SweepAxis a) noexcept;
std::string_view to_string(Metric m) noexcept;
SweepAxis parse_axis(std::string_view name);
Metric parse_metric(std::string_view name);

/// One curve: a base scenario swept along one axis with one or more methods.
struct SweepSpec {
  std::string label;
  SweepAxis axis = SweepAxis::transmit_power_db;
  std::vector<double> values;
  Metric metric = Metric::asc;
  std::vector<Method> methods;
  SystemConfig base;
  double transmit_power_db = 0.0;  // base.transmit_power is derived from this
  McConfig monte_carlo;

  void validate() const;
  /// Scenario at one axis value.
  SystemConfig point(double axis_value) const;
};

bool operator==(const SweepSpec& a, const SweepSpec& b);

bool method_supports(Metric metric, Method method) noexcept;

struct SweepRow {
  double axis_value = 0.0;
  std::string method;  // "label/method" when the spec has a label
  Metric metric = Metric::asc;
  double value = 0.0;
  double ci_halfwidth = 0.0;
  std::optional<std::string> error;
};

/// Rows in axis order, methods in spec order within each axis value.
/// Failing points produce a row with `error` set and NaN values.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned workers = 1);

inline constexpr std::string_view kCsvHeader = "axis,method,metric,value,ci_halfwidth";

void write_csv_header(std::ostream& out);
void write_csv_rows(std::ostream& out, const std::vector<SweepRow>& rows);

bool has_errors(const std::vector<SweepRow>& rows) noexcept;

}  // namespace plcsec
