#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "plcsec/config.hpp"
#include "plcsec/presets.hpp"
#include "plcsec/sweep.hpp"

namespace {

constexpr int kExitRowError = 1;
constexpr int kExitConfigError = 2;

struct RunOptions {
  std::string out;
  std::optional<std::uint64_t> samples;
  std::optional<int> quad_order;
  std::optional<std::uint64_t> seed;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
};

void apply_overrides(std::vector<plcsec::SweepSpec>& specs, const RunOptions& opt) {
  for (auto& spec : specs) {
    if (opt.samples) spec.monte_carlo.samples = *opt.samples;
    if (opt.seed) spec.monte_carlo.seed = *opt.seed;
    if (opt.quad_order) spec.base.quadrature = plcsec::gauss_hermite_rule(*opt.quad_order);
    spec.validate();
  }
}

int run(const std::vector<plcsec::SweepSpec>& specs, const RunOptions& opt) {
  std::ofstream file;
  if (!opt.out.empty()) {
    file.open(opt.out);
    if (!file) {
      std::cerr << "error: cannot write " << opt.out << '\n';
      return kExitConfigError;
    }
  }
  std::ostream& out = opt.out.empty() ? std::cout : file;
  plcsec::write_csv_header(out);
  bool failed = false;
  for (const auto& spec : specs) {
    const auto rows = plcsec::run_sweep(spec, opt.workers);
    plcsec::write_csv_rows(out, rows);
    out.flush();
    for (const auto& row : rows) {
      if (!row.error) continue;
      failed = true;
      std::cerr << "error at " << row.method << ", axis " << row.axis_value << ": " << *row.error << '\n';
    }
  }
  return failed ? kExitRowError : 0;
}

void add_run_options(CLI::App* cmd, RunOptions& opt) {
  cmd->add_option("--out,-o", opt.out, "CSV output file (default: stdout)");
  cmd->add_option("--samples", opt.samples, "Monte Carlo samples per point");
  cmd->add_option("--quad-order", opt.quad_order, "Gauss-Hermite order");
  cmd->add_option("--seed", opt.seed, "Monte Carlo seed");
  cmd->add_option("--workers,-j", opt.workers, "Worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secrecy metrics of pinhole power-line networks"};
  app.require_subcommand(1);

  RunOptions opt;
  std::string config_path;
  std::string preset_name;

  auto* sweep = app.add_subcommand("sweep", "Run the sweep(s) described by a config file");
  sweep->add_option("config", config_path, "YAML config")->required();
  add_run_options(sweep, opt);

  auto* preset = app.add_subcommand("preset", "Run a named figure preset");
  preset->add_option("name", preset_name, "Preset name (see list-presets)")->required();
  add_run_options(preset, opt);

  auto* validate = app.add_subcommand("validate", "Check a config file and print the resolved sweeps");
  validate->add_option("config", config_path, "YAML config")->required();

  auto* list = app.add_subcommand("list-presets", "List the figure presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  try {
    if (*list) {
      for (const auto& p : plcsec::list_presets()) std::cout << p.name << "  " << p.description << '\n';
      return 0;
    }
    if (*validate) {
      for (const auto& spec : plcsec::load_config(config_path)) std::cout << "---\n" << plcsec::dump_config(spec);
      return 0;
    }
    auto specs = *sweep ? plcsec::load_config(config_path) : plcsec::preset(preset_name);
    apply_overrides(specs, opt);
    return run(specs, opt);
  } catch (const plcsec::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRowError;
  }
}
