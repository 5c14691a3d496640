#include "plcsec/presets.hpp"

#include <fmt/format.h>

namespace plcsec {

namespace {

struct Scenario {
  double m_a = -20, s_a = 6;
  double m_b = -20, s_b = 6;
  double m_e = -40, s_e = 6;
  double p_b = 0.1, eta_b = 10;
  double p_e = 0.1, eta_e = 10;
  int n = 10;
  bool pinhole = true;
};

SweepSpec power_curve(const std::string& label, const Scenario& sc) {
  SweepSpec spec;
  spec.label = label;
  spec.axis = SweepAxis::transmit_power_db;
  spec.values = preset_power_grid();
  spec.metric = Metric::asc;
  spec.methods = {Method::quadrature, Method::asymptotic, Method::monte_carlo};
  spec.base.topology.source_link = LinkParams::from_db(sc.m_a, sc.s_a);
  spec.base.topology.destination_link = LinkParams::from_db(sc.m_b, sc.s_b);
  spec.base.topology.eavesdropper_link = LinkParams::from_db(sc.m_e, sc.s_e);
  spec.base.topology.n_destinations = sc.n;
  spec.base.topology.pinhole_present = sc.pinhole;
  spec.base.dest_noise = {1.0, sc.eta_b, sc.p_b};
  spec.base.eav_noise = {1.0, sc.eta_e, sc.p_e};
  return spec;
}

SweepSpec poi_curve(const std::string& label, const Scenario& sc) {
  SweepSpec spec = power_curve(label, sc);
  spec.axis = SweepAxis::n_destinations;
  spec.values.clear();
  for (int n = 1; n <= 16; ++n) spec.values.push_back(n);
  spec.metric = Metric::poi;
  spec.methods = {Method::quadrature, Method::closed_form_poi, Method::monte_carlo};
  return spec;
}

const char* ph_tag(bool pinhole) { return pinhole ? "ph" : "noph"; }

std::vector<SweepSpec> fig3() {
  std::vector<SweepSpec> out;
  for (int n : {10, 40})
    for (double s_a : {2.0, 6.0, 10.0})
      for (bool ph : {true, false}) {
        Scenario sc;
        sc.s_a = s_a;
        sc.n = n;
        sc.pinhole = ph;
        out.push_back(power_curve(fmt::format("{}_sa{}_n{}", ph_tag(ph), s_a, n), sc));
      }
  return out;
}

std::vector<SweepSpec> fig4() {
  std::vector<SweepSpec> out;
  for (int n : {10, 40})
    for (double m_a : {-20.0, -10.0, 0.0})
      for (bool ph : {true, false}) {
        Scenario sc;
        sc.m_a = m_a;
        sc.n = n;
        sc.pinhole = ph;
        out.push_back(power_curve(fmt::format("{}_ma{}_n{}", ph_tag(ph), m_a, n), sc));
      }
  return out;
}

std::vector<SweepSpec> fig5() {
  std::vector<SweepSpec> out;
  for (int n : {10, 40})
    for (auto [s_b, s_e] : {std::pair{6.0, 6.0}, {10.0, 6.0}, {6.0, 10.0}}) {
      Scenario sc;
      sc.s_b = s_b;
      sc.s_e = s_e;
      sc.n = n;
      out.push_back(power_curve(fmt::format("sb{}_se{}_n{}", s_b, s_e, n), sc));
    }
  return out;
}

std::vector<SweepSpec> fig6() {
  std::vector<SweepSpec> out;
  for (double m_b : {-20.0, -25.0, -30.0}) {
    Scenario sc;
    sc.m_b = m_b;
    out.push_back(power_curve(fmt::format("mb{}", m_b), sc));
  }
  return out;
}

std::vector<SweepSpec> fig7() {
  std::vector<SweepSpec> out;
  for (double p : {0.1, 0.9})
    for (auto [eta_b, eta_e] : {std::pair{10.0, 100.0}, {100.0, 10.0}}) {
      Scenario sc;
      sc.p_b = sc.p_e = p;
      sc.eta_b = eta_b;
      sc.eta_e = eta_e;
      out.push_back(power_curve(fmt::format("p{}_etab{}_etae{}", p, eta_b, eta_e), sc));
    }
  return out;
}

std::vector<SweepSpec> fig8() {
  std::vector<SweepSpec> out;
  struct Variant {
    double s_b, s_e, m_b;
  };
  for (auto [s_b, s_e, m_b] : {Variant{6, 6, -20}, {10, 6, -20}, {6, 10, -20}, {6, 6, -30}}) {
    Scenario sc;
    sc.s_b = s_b;
    sc.s_e = s_e;
    sc.m_b = m_b;
    out.push_back(poi_curve(fmt::format("sb{}_se{}_mb{}", s_b, s_e, m_b), sc));
  }
  return out;
}

}  // namespace

std::vector<double> preset_power_grid() {
  std::vector<double> grid;
  for (int db = -10; db <= 60; db += 2) grid.push_back(db);
  return grid;
}

std::vector<PresetInfo> list_presets() {
  return {
      {"fig3", "ASC vs P: s_a in {2,6,10} dB, N in {10,40}, pinhole and direct links"},
      {"fig4", "ASC vs P: m_a in {-20,-10,0} dB, N in {10,40}, pinhole and direct links"},
      {"fig5", "ASC vs P: (s_b, s_e) in {(6,6),(10,6),(6,10)} dB, N in {10,40}"},
      {"fig6", "ASC vs P: m_b in {-20,-25,-30} dB, N = 10"},
      {"fig7", "ASC vs P: p in {0.1,0.9}, (eta_b, eta_e) in {(10,100),(100,10)}, N = 10"},
      {"fig8", "POI vs N = 1..16: (s_b, s_e, m_b) variants"},
  };
}

std::vector<SweepSpec> preset(std::string_view name) {
  if (name == "fig3") return fig3();
  if (name == "fig4") return fig4();
  if (name == "fig5") return fig5();
  if (name == "fig6") return fig6();
  if (name == "fig7") return fig7();
  if (name == "fig8") return fig8();
  throw ConfigError("unknown preset '" + std::string(name) + "'", "preset");
}

}  // namespace plcsec
