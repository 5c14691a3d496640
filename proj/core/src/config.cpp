#include "plcsec/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include "plcsec/presets.hpp"

namespace plcsec {

namespace {

std::string where(const YAML::Mark& mark) {
  if (mark.is_null() || mark.line < 0) return {};
  return fmt::format(" (line {}, column {})", mark.line + 1, mark.column + 1);
}

[[noreturn]] void fail(const std::string& path, const std::string& what, const YAML::Node& node) {
  throw ConfigError(what + (node.IsDefined() ? where(node.Mark()) : std::string{}), path);
}

std::string join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

void require_map(const YAML::Node& node, const std::string& path) {
  if (!node.IsMap()) fail(path, "expected a mapping", node);
}

void check_keys(const YAML::Node& node, const std::string& path, std::initializer_list<const char*> allowed) {
  require_map(node, path);
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      fail(join(path, key), "unknown key", kv.first);
  }
}

template <class T>
T scalar(const YAML::Node& node, const std::string& path) {
  if (!node.IsScalar()) fail(path, "expected a scalar", node);
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    fail(path, "cannot convert '" + node.Scalar() + "'", node);
  }
}

template <class T>
T scalar_or(const YAML::Node& parent, const char* key, const std::string& path, T fallback) {
  const YAML::Node node = parent[key];
  return node ? scalar<T>(node, join(path, key)) : fallback;
}

YAML::Node required(const YAML::Node& parent, const char* key, const std::string& path) {
  const YAML::Node node = parent[key];
  if (!node) fail(join(path, key), "required field is missing", parent);
  return node;
}

// Re-raises a model validation error with the config field path.
template <class Fn>
void validated(const std::string& path, const YAML::Node& node, Fn&& fn) {
  try {
    fn();
  } catch (const ConfigError& e) {
    std::string field = e.field().empty() ? path : join(path, e.field());
    std::string msg = e.what();
    if (!e.field().empty()) msg = msg.substr(e.field().size() + 2);
    fail(field, msg, node);
  }
}

LinkParams parse_link(const YAML::Node& node, const std::string& path) {
  check_keys(node, path, {"m_db", "s_db"});
  const double m_db = scalar<double>(required(node, "m_db", path), join(path, "m_db"));
  const double s_db = scalar<double>(required(node, "s_db", path), join(path, "s_db"));
  if (!std::isfinite(m_db)) fail(join(path, "m_db"), "must be finite", node["m_db"]);
  if (!(s_db > 0.0) || !std::isfinite(s_db)) fail(join(path, "s_db"), "must be positive", node["s_db"]);
  return LinkParams::from_db(m_db, s_db);
}

NoiseParams parse_noise(const YAML::Node& node, const std::string& path) {
  NoiseParams noise;
  if (!node) return noise;
  check_keys(node, path, {"background_var", "impulse_ratio", "impulse_prob"});
  noise.background_var = scalar_or(node, "background_var", path, noise.background_var);
  noise.impulse_ratio = scalar_or(node, "impulse_ratio", path, noise.impulse_ratio);
  noise.impulse_prob = scalar_or(node, "impulse_prob", path, noise.impulse_prob);
  validated(path, node, [&] { noise.validate(); });
  return noise;
}

std::vector<double> parse_values(const YAML::Node& node) {
  const std::string path = "values";
  std::vector<double> values;
  if (node.IsSequence()) {
    for (std::size_t i = 0; i < node.size(); ++i)
      values.push_back(scalar<double>(node[i], fmt::format("values[{}]", i)));
    return values;
  }
  if (!node.IsMap()) fail(path, "expected a list or {start, stop, step}", node);
  check_keys(node, path, {"start", "stop", "step"});
  const double start = scalar<double>(required(node, "start", path), "values.start");
  const double stop = scalar<double>(required(node, "stop", path), "values.stop");
  const double step = scalar<double>(required(node, "step", path), "values.step");
  if (!(step > 0.0) || !std::isfinite(step)) fail("values.step", "must be positive", node["step"]);
  if (!(stop >= start)) fail("values.stop", "must not be below start", node["stop"]);
  const double count = std::floor((stop - start) / step + 1e-9);
  if (count > 1e6) fail(path, "range has too many points", node);
  for (int i = 0; i <= static_cast<int>(count); ++i) values.push_back(start + i * step);
  return values;
}

SweepSpec parse_spec(const YAML::Node& root) {
  check_keys(root, "", {"label", "axis", "values", "metric", "methods", "system", "monte_carlo"});
  SweepSpec spec;
  spec.label = scalar_or<std::string>(root, "label", "", "");
  spec.axis = [&] {
    const YAML::Node n = required(root, "axis", "");
    SweepAxis a{};
    validated("", n, [&] { a = parse_axis(scalar<std::string>(n, "axis")); });
    return a;
  }();
  spec.values = parse_values(required(root, "values", ""));
  spec.metric = [&] {
    const YAML::Node n = required(root, "metric", "");
    Metric m{};
    validated("", n, [&] { m = parse_metric(scalar<std::string>(n, "metric")); });
    return m;
  }();
  const YAML::Node methods = required(root, "methods", "");
  if (!methods.IsSequence()) fail("methods", "expected a list", methods);
  for (std::size_t i = 0; i < methods.size(); ++i) {
    const std::string path = fmt::format("methods[{}]", i);
    try {
      spec.methods.push_back(parse_method(scalar<std::string>(methods[i], path)));
    } catch (const ConfigError& e) {
      if (e.field() == path) throw;
      fail(path, e.what(), methods[i]);
    }
  }

  const YAML::Node sys = required(root, "system", "");
  check_keys(sys, "system",
             {"n_destinations", "transmit_power_db", "pinhole", "links", "noise", "quad_order", "q_approx"});
  auto& topo = spec.base.topology;
  topo.n_destinations = scalar_or(sys, "n_destinations", "system", 1);
  spec.transmit_power_db = scalar_or(sys, "transmit_power_db", "system", 0.0);
  topo.pinhole_present = scalar_or(sys, "pinhole", "system", true);
  const YAML::Node links = required(sys, "links", "system");
  check_keys(links, "system.links", {"source", "destination", "eavesdropper"});
  topo.source_link = parse_link(required(links, "source", "system.links"), "system.links.source");
  topo.destination_link = parse_link(required(links, "destination", "system.links"), "system.links.destination");
  topo.eavesdropper_link =
      parse_link(required(links, "eavesdropper", "system.links"), "system.links.eavesdropper");
  if (const YAML::Node noise = sys["noise"]) {
    check_keys(noise, "system.noise", {"destination", "eavesdropper"});
    spec.base.dest_noise = parse_noise(noise["destination"], "system.noise.destination");
    spec.base.eav_noise = parse_noise(noise["eavesdropper"], "system.noise.eavesdropper");
  }
  if (const YAML::Node order = sys["quad_order"]) {
    const int l = scalar<int>(order, "system.quad_order");
    validated("system.quad_order", order, [&] { spec.base.quadrature = gauss_hermite_rule(l); });
  }
  if (const YAML::Node q = sys["q_approx"]) {
    check_keys(q, "system.q_approx", {"k1", "k2", "k3"});
    auto& k = spec.base.q_approx;
    k.k1 = scalar_or(q, "k1", "system.q_approx", k.k1);
    k.k2 = scalar_or(q, "k2", "system.q_approx", k.k2);
    k.k3 = scalar_or(q, "k3", "system.q_approx", k.k3);
    validated("system.q_approx", q, [&] { k.validate(); });
  }
  if (!std::isfinite(spec.transmit_power_db))
    fail("system.transmit_power_db", "must be finite", sys["transmit_power_db"]);
  spec.base.transmit_power = db_to_linear(spec.transmit_power_db);
  validated("system", sys, [&] { topo.validate(); });

  if (const YAML::Node mc = root["monte_carlo"]) {
    check_keys(mc, "monte_carlo", {"samples", "seed", "workers", "confidence"});
    auto& m = spec.monte_carlo;
    m.samples = scalar_or(mc, "samples", "monte_carlo", m.samples);
    m.seed = scalar_or(mc, "seed", "monte_carlo", m.seed);
    m.workers = scalar_or(mc, "workers", "monte_carlo", m.workers);
    m.confidence = scalar_or(mc, "confidence", "monte_carlo", m.confidence);
    validated("", mc, [&] { m.validate(); });
  }
  validated("", root, [&] { spec.validate(); });
  return spec;
}

YAML::Node link_node(const LinkParams& link) {
  YAML::Node n;
  n["m_db"] = link.m_db();
  n["s_db"] = link.s_db();
  return n;
}

YAML::Node noise_node(const NoiseParams& noise) {
  YAML::Node n;
  n["background_var"] = noise.background_var;
  n["impulse_ratio"] = noise.impulse_ratio;
  n["impulse_prob"] = noise.impulse_prob;
  return n;
}

YAML::Node to_node(const SweepSpec& spec) {
  YAML::Node root;
  root["label"] = spec.label;
  root["axis"] = std::string(to_string(spec.axis));
  root["values"] = spec.values;
  root["values"].SetStyle(YAML::EmitterStyle::Flow);
  root["metric"] = std::string(to_string(spec.metric));
  for (Method m : spec.methods) root["methods"].push_back(std::string(to_string(m)));
  root["methods"].SetStyle(YAML::EmitterStyle::Flow);

  const auto& topo = spec.base.topology;
  YAML::Node sys;
  sys["n_destinations"] = topo.n_destinations;
  sys["transmit_power_db"] = spec.transmit_power_db;
  sys["pinhole"] = topo.pinhole_present;
  sys["links"]["source"] = link_node(topo.source_link);
  sys["links"]["destination"] = link_node(topo.destination_link);
  sys["links"]["eavesdropper"] = link_node(topo.eavesdropper_link);
  sys["noise"]["destination"] = noise_node(spec.base.dest_noise);
  sys["noise"]["eavesdropper"] = noise_node(spec.base.eav_noise);
  sys["quad_order"] = spec.base.quadrature.order();
  sys["q_approx"]["k1"] = spec.base.q_approx.k1;
  sys["q_approx"]["k2"] = spec.base.q_approx.k2;
  sys["q_approx"]["k3"] = spec.base.q_approx.k3;
  root["system"] = sys;

  YAML::Node mc;
  mc["samples"] = spec.monte_carlo.samples;
  mc["seed"] = spec.monte_carlo.seed;
  mc["workers"] = spec.monte_carlo.workers;
  mc["confidence"] = spec.monte_carlo.confidence;
  root["monte_carlo"] = mc;
  return root;
}

void merge_into(YAML::Node base, const YAML::Node& overrides) {
  for (const auto& kv : overrides) {
    const auto key = kv.first.as<std::string>();
    YAML::Node target = base[key];
    if (kv.second.IsMap() && target && target.IsMap())
      merge_into(target, kv.second);
    else
      base[key] = kv.second;
  }
}

constexpr const char* kRequired =
    "missing required fields: axis, values, metric, methods, system.links.source, "
    "system.links.destination, system.links.eavesdropper (or name a preset with 'preset')";

}  // namespace

std::vector<SweepSpec> parse_config(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ConfigError("parse error" + where(e.mark) + ": " + e.msg);
  }
  if (!root || root.IsNull() || (root.IsMap() && root.size() == 0)) throw ConfigError(kRequired);
  require_map(root, "");

  try {
    if (const YAML::Node name = root["preset"]) {
      std::vector<SweepSpec> curves;
      validated("", name, [&] { curves = preset(scalar<std::string>(name, "preset")); });
      YAML::Node overrides = YAML::Clone(root);
      overrides.remove("preset");
      if (overrides["label"]) fail("label", "cannot override the labels of a preset", overrides["label"]);
      std::vector<SweepSpec> out;
      for (const SweepSpec& curve : curves) {
        YAML::Node node = to_node(curve);
        merge_into(node, overrides);
        out.push_back(parse_spec(node));
      }
      return out;
    }
    return {parse_spec(root)};
  } catch (const YAML::Exception& e) {
    throw ConfigError("invalid document" + where(e.mark) + ": " + e.msg);
  }
}

std::vector<SweepSpec> load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string dump_config(const SweepSpec& spec) {
  YAML::Emitter out;
  out.SetDoublePrecision(17);
  out << to_node(spec);
  return std::string(out.c_str()) + "\n";
}

}  // namespace plcsec
