#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "plcsec/config.hpp"
#include "plcsec/presets.hpp"

using namespace plcsec;

namespace {

const char* kMinimal = R"(
axis: transmit_power_db
values: [0, 10, 20]
metric: asc
methods: [quadrature, asymptotic]
system:
  n_destinations: 10
  links:
    source: {m_db: -20, s_db: 6}
    destination: {m_db: -20, s_db: 6}
    eavesdropper: {m_db: -40, s_db: 6}
  noise:
    destination: {impulse_ratio: 10, impulse_prob: 0.1}
    eavesdropper: {impulse_ratio: 10, impulse_prob: 0.1}
)";

std::string error_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST(Config, MinimalWithDefaults) {
  const auto specs = parse_config(kMinimal);
  ASSERT_EQ(specs.size(), 1u);
  const SweepSpec& s = specs[0];
  EXPECT_EQ(s.axis, SweepAxis::transmit_power_db);
  EXPECT_EQ(s.values, (std::vector<double>{0, 10, 20}));
  EXPECT_EQ(s.methods, (std::vector<Method>{Method::quadrature, Method::asymptotic}));
  EXPECT_EQ(s.base.topology.n_destinations, 10);
  EXPECT_TRUE(s.base.topology.pinhole_present);
  EXPECT_EQ(s.base.quadrature.order(), 64);
  EXPECT_EQ(s.base.dest_noise.background_var, 1.0);
  EXPECT_EQ(s.base.eav_noise.impulse_ratio, 10.0);
  EXPECT_EQ(s.monte_carlo, McConfig{});
  EXPECT_EQ(s.transmit_power_db, 0.0);
  EXPECT_EQ(s.label, "");
}

TEST(Config, EmptyFileListsRequiredFields) {
  for (const char* text : {"", "   \n", "{}"}) {
    const std::string err = error_of(text);
    for (const char* field : {"axis", "values", "metric", "methods", "system.links.destination"})
      EXPECT_TRUE(contains(err, field)) << err;
  }
}

TEST(Config, UnknownKeyRejectedWithLocation) {
  std::string text = kMinimal;
  text += "colour: blue\n";
  const std::string err = error_of(text);
  EXPECT_TRUE(contains(err, "colour")) << err;
  EXPECT_TRUE(contains(err, "line 15")) << err;

  std::string nested = kMinimal;
  nested.replace(nested.find("n_destinations"), 14, "n_destination");
  const std::string err2 = error_of(nested);
  EXPECT_TRUE(contains(err2, "system.n_destination")) << err2;
}

TEST(Config, ParseErrorHasLineAndColumn) {
  const std::string err = error_of("axis: [1, 2\nvalues: 3\n");
  EXPECT_TRUE(contains(err, "line")) << err;
  EXPECT_TRUE(contains(err, "column")) << err;
}

TEST(Config, ConstraintViolationsNameTheField) {
  auto replace = [](std::string text, const std::string& from, const std::string& to) {
    text.replace(text.find(from), from.size(), to);
    return text;
  };
  EXPECT_TRUE(contains(error_of(replace(kMinimal, "[0, 10, 20]", "[0, 20, 10]")), "values"));
  EXPECT_TRUE(contains(error_of(replace(kMinimal, "[0, 10, 20]", "[]")), "values"));
  EXPECT_TRUE(contains(error_of(replace(kMinimal, "m_db: -40, s_db: 6", "m_db: -40, s_db: 0")),
                       "system.links.eavesdropper.s_db"));
  EXPECT_TRUE(contains(error_of(replace(kMinimal, "impulse_prob: 0.1}\n    eav", "impulse_prob: 1.5}\n    eav")),
                       "system.noise.destination"));
  EXPECT_TRUE(contains(error_of(replace(kMinimal, "asymptotic]", "closed-form-poi]")), "methods"));
  EXPECT_TRUE(contains(error_of(replace(kMinimal, "metric: asc", "metric: outage")), "metric"));
  EXPECT_TRUE(contains(error_of(replace(kMinimal, "n_destinations: 10", "n_destinations: 0")), "n_destinations"));
  EXPECT_TRUE(contains(error_of(replace(kMinimal, "n_destinations: 10", "n_destinations: ten")),
                       "system.n_destinations"));
  EXPECT_TRUE(contains(error_of(std::string(kMinimal) + "monte_carlo: {samples: 10}\n"), "monte_carlo.samples"));
  EXPECT_TRUE(contains(error_of(replace(kMinimal, "n_destinations: 10", "quad_order: 500")), "system.quad_order"));
}

TEST(Config, RangeValues) {
  std::string text = kMinimal;
  text.replace(text.find("[0, 10, 20]"), 11, "{start: -10, stop: 60, step: 2}");
  const auto specs = parse_config(text);
  EXPECT_EQ(specs[0].values, preset_power_grid());
}

TEST(Config, RoundTrip) {
  auto spec = parse_config(kMinimal).front();
  spec.label = "curve";
  spec.monte_carlo.samples = 123456;
  spec.monte_carlo.seed = 0xdeadbeefcafeULL;
  spec.base.topology.pinhole_present = false;
  spec.base.q_approx.k1 = 0.4;
  spec.base.quadrature = gauss_hermite_rule(96);
  spec.transmit_power_db = 13.25;
  spec.base.transmit_power = db_to_linear(13.25);
  const auto text = dump_config(spec);
  const auto back = parse_config(text);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0], spec) << text;
  EXPECT_EQ(dump_config(back[0]), text);
}

TEST(Config, PresetsRoundTrip) {
  for (const auto& info : list_presets())
    for (const auto& spec : preset(info.name)) {
      const auto back = parse_config(dump_config(spec));
      ASSERT_EQ(back.size(), 1u);
      EXPECT_EQ(back[0], spec) << info.name << " " << spec.label;
    }
}

TEST(Config, PresetWithOverride) {
  const auto base = preset("fig3");
  const auto specs = parse_config("preset: fig3\nsystem: {quad_order: 32}\n");
  ASSERT_EQ(specs.size(), base.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    EXPECT_EQ(specs[i].base.quadrature.order(), 32);
    SweepSpec expect = base[i];
    expect.base.quadrature = gauss_hermite_rule(32);
    EXPECT_EQ(specs[i], expect);
  }
  const auto nested = parse_config("preset: fig6\nsystem: {links: {eavesdropper: {m_db: -45}}}\n");
  EXPECT_NEAR(nested[0].base.topology.eavesdropper_link.m_db(), -45.0, 1e-12);
  EXPECT_EQ(nested[0].base.topology.eavesdropper_link.s, preset("fig6")[0].base.topology.eavesdropper_link.s);
  EXPECT_TRUE(contains(error_of("preset: fig99\n"), "preset"));
  EXPECT_TRUE(contains(error_of("preset: fig3\nsystem: {bogus: 1}\n"), "system.bogus"));
}

TEST(Config, LoadFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "plcsec_config_test.yaml";
  std::ofstream(path) << kMinimal;
  EXPECT_EQ(load_config(path).size(), 1u);
  std::filesystem::remove(path);
  EXPECT_THROW(load_config(path), ConfigError);
}
