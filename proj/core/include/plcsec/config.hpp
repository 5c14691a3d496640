#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "plcsec/sweep.hpp"

namespace plcsec {

/// Reads a YAML sweep description. A file either describes one sweep in
/// full, or names a preset with `preset: <name>` and overrides keys of every
/// curve in it. Unknown keys are rejected; errors carry the field path and,
/// when known, the line and column.
std::vector<SweepSpec> load_config(const std::filesystem::path& path);
std::vector<SweepSpec> parse_config(std::string_view text);

/// Fully resolved YAML for one sweep; parse_config(dump_config(s)) == {s}.
std::string dump_config(const SweepSpec& spec);

}  // namespace plcsec
