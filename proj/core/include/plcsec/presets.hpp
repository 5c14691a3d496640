#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "plcsec/sweep.hpp"

namespace plcsec {

struct PresetInfo {
  std::string name;
  std::string description;
};

/// Transmit-power grid of the figure presets: -10 to 60 dB in 2 dB steps.
std::vector<double> preset_power_grid();

std::vector<PresetInfo> list_presets();

/// All curves of a named preset ("fig3" ... "fig8"). Throws ConfigError for
/// an unknown name.
std::vector<SweepSpec> preset(std::string_view name);

}  // namespace plcsec
