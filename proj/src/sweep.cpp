/* ============================================================================
   hotcarrier — spontaneous emission and free-carrier absorption by hot
   electrons in multivalley semiconductors.

   Distributed under the MIT License; see LICENSE.
   ============================================================================ */

/** @file sweep.cpp
 *  @brief Configuration parsing, sweep scenarios and deterministic output.
 */

#include "hotcarrier/sweep.hpp"

#include "hotcarrier/acoustic.hpp"
#include "hotcarrier/constants.hpp"
#include "hotcarrier/coulomb.hpp"
#include "hotcarrier/errors.hpp"
#include "hotcarrier/hotfield.hpp"
#include "hotcarrier/material.hpp"
#ifndef HOTCARRIER_NO_ORACLE
#include "hotcarrier/oracle.hpp"
#endif

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

namespace hotc {

namespace {

using nlohmann::json;

constexpr double kPi = 3.141592653589793238462643383279502884;

// ---------------------------------------------------------------------------
// JSON access helpers.  Every failure reports the full dotted key path.
// ---------------------------------------------------------------------------

std::string join_path(const std::string& base, const std::string& key) {
  return base.empty() ? key : base + "." + key;
}

const json& require_object(const json& node, const std::string& key,
                           const std::string& base) {
  const std::string path = join_path(base, key);
  auto it = node.find(key);
  if (it == node.end())
    throw ConfigError(path, "required object is missing");
  if (!it->is_object())
    throw ConfigError(path, "expected a JSON object");
  return *it;
}

double require_number(const json& node, const std::string& key,
                      const std::string& base) {
  const std::string path = join_path(base, key);
  auto it = node.find(key);
  if (it == node.end())
    throw ConfigError(path, "required number is missing");
  if (!it->is_number())
    throw ConfigError(path, "expected a number");
  return it->get<double>();
}

std::optional<double> optional_number(const json& node, const std::string& key,
                                      const std::string& base) {
  auto it = node.find(key);
  if (it == node.end())
    return std::nullopt;
  if (!it->is_number())
    throw ConfigError(join_path(base, key), "expected a number");
  return it->get<double>();
}

std::string require_string(const json& node, const std::string& key,
                           const std::string& base) {
  const std::string path = join_path(base, key);
  auto it = node.find(key);
  if (it == node.end())
    throw ConfigError(path, "required string is missing");
  if (!it->is_string())
    throw ConfigError(path, "expected a string");
  return it->get<std::string>();
}

std::vector<double> require_number_array(const json& node, const std::string& key,
                                         const std::string& base) {
  const std::string path = join_path(base, key);
  auto it = node.find(key);
  if (it == node.end())
    throw ConfigError(path, "required array is missing");
  if (!it->is_array() || it->empty())
    throw ConfigError(path, "expected a non-empty array of numbers");
  std::vector<double> out;
  out.reserve(it->size());
  for (const auto& v : *it) {
    if (!v.is_number())
      throw ConfigError(path, "expected a non-empty array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Shared configuration fragments.
// ---------------------------------------------------------------------------

struct ParsedMaterial {
  MaterialParams params;
  bool taus_explicit = false; ///< keep relaxation times fixed across T_lattice scans
};

ParsedMaterial parse_material(const json& cfg) {
  const json& m = require_object(cfg, "material", "");
  const std::string base = "material";

  const double T_lattice = kelvin_to_erg(require_number(m, "T_lattice_K", base));
  const auto tau_perp = optional_number(m, "tau_perp0_s", base);
  const auto tau_par = optional_number(m, "tau_par0_s", base);
  if (tau_perp.has_value() != tau_par.has_value())
    throw ConfigError(join_path(base, tau_perp ? "tau_par0_s" : "tau_perp0_s"),
                      "tau_perp0_s and tau_par0_s must be given together");

  ParsedMaterial out;
  out.taus_explicit = tau_perp.has_value();

  if (m.contains("preset")) {
    const std::string preset = require_string(m, "preset", base);
    if (preset != "n-Ge")
      throw ConfigError(join_path(base, "preset"),
                        "unknown material preset '" + preset +
                            "' (available: n-Ge)");
    const double N_D = optional_number(m, "N_D_cm3", base).value_or(0.0);
    try {
      out.params = germanium(T_lattice, N_D, tau_perp, tau_par);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(base, e.what());
    }
    return out;
  }

  MaterialParams& p = out.params;
  p.m_perp = require_number(m, "m_perp_m0", base) * cgs::m_electron;
  p.m_par = require_number(m, "m_par_m0", base) * cgs::m_electron;
  p.sigma_d = ev_to_erg(require_number(m, "sigma_d_eV", base));
  p.sigma_u = ev_to_erg(require_number(m, "sigma_u_eV", base));
  p.rho = require_number(m, "rho_g_cm3", base);
  p.s_par = require_number(m, "s_par_cm_s", base);
  p.s_perp = require_number(m, "s_perp_cm_s", base);
  p.chi0 = require_number(m, "chi0", base);
  p.T_lattice = T_lattice;
  p.N_D = optional_number(m, "N_D_cm3", base).value_or(0.0);
  if (out.taus_explicit) {
    p.tau_perp0 = *tau_perp;
    p.tau_par0 = *tau_par;
  } else {
    const auto taus = acoustic_relaxation_times(p);
    p.tau_perp0 = taus.first;
    p.tau_par0 = taus.second;
  }
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(base, e.what());
  }
  return out;
}

/// Adjusts a parsed material to a new lattice temperature, re-deriving the
/// acoustic relaxation-time scales unless they were pinned explicitly.
MaterialParams material_at_lattice_temperature(const ParsedMaterial& parsed,
                                               double T_lattice) {
  MaterialParams p = parsed.params;
  p.T_lattice = T_lattice;
  if (!parsed.taus_explicit) {
    const auto taus = acoustic_relaxation_times(p);
    p.tau_perp0 = taus.first;
    p.tau_par0 = taus.second;
  }
  return p;
}

double parse_photon(const json& cfg) {
  const json& ph = require_object(cfg, "photon", "");
  const std::string base = "photon";
  const auto omega = optional_number(ph, "omega_rad_s", base);
  const auto lambda_um = optional_number(ph, "wavelength_um", base);
  if (omega.has_value() == lambda_um.has_value())
    throw ConfigError(base,
                      "exactly one of omega_rad_s and wavelength_um is required");
  double w = 0.0;
  if (omega) {
    w = *omega;
  } else {
    if (*lambda_um <= 0.0)
      throw ConfigError(join_path(base, "wavelength_um"), "must be positive");
    w = 2.0 * kPi * cgs::c_light / (*lambda_um * 1e-4);
  }
  if (!(w > 0.0))
    throw ConfigError(join_path(base, "omega_rad_s"), "must be positive");
  return w;
}

std::string parse_mechanism(const json& cfg) {
  const std::string mech = require_string(cfg, "mechanism", "");
  if (mech != "acoustic" && mech != "coulomb" && mech != "auto-mix")
    throw ConfigError("mechanism",
                      "must be one of acoustic, coulomb, auto-mix");
  return mech;
}

/// (acoustic weight, coulomb weight).  Single mechanisms are pure; auto-mix
/// demands explicit weights — there is no silent default blend.
std::pair<double, double> parse_mix_weights(const json& cfg,
                                            const std::string& mechanism) {
  if (mechanism == "acoustic")
    return {1.0, 0.0};
  if (mechanism == "coulomb")
    return {0.0, 1.0};
  const json& w = require_object(cfg, "mix_weights", "");
  const double wa = require_number(w, "acoustic", "mix_weights");
  const double wc = require_number(w, "coulomb", "mix_weights");
  if (!(wa >= 0.0) || !(wc >= 0.0) || wa + wc <= 0.0)
    throw ConfigError("mix_weights", "weights must be non-negative and not both zero");
  return {wa, wc};
}

/// Screening radius resolution.  `dynamic_T` is the per-row temperature used
/// when the configuration selects the scenario-dependent reference
/// ("debye_at": "T_cold" for field-111, "T_e" for lattice-temp-scan).
double resolve_screening_radius(const json& cfg, const MaterialParams& mat,
                                double n_total, double dynamic_T,
                                const std::string& dynamic_name) {
  const json& s = require_object(cfg, "screening", "");
  const std::string base = "screening";
  const double n_scr = n_total + mat.N_D; // mobile electrons + ionized donors
  const auto r_D = optional_number(s, "r_D_cm", base);
  const auto debye_K = optional_number(s, "debye_at_K", base);
  const bool has_dynamic = s.contains("debye_at");
  const int given = int(r_D.has_value()) + int(debye_K.has_value()) + int(has_dynamic);
  if (given != 1)
    throw ConfigError(base,
                      "exactly one of r_D_cm, debye_at_K, debye_at is required");
  if (r_D) {
    if (!(*r_D > 0.0))
      throw ConfigError(join_path(base, "r_D_cm"), "must be positive");
    return *r_D;
  }
  if (debye_K) {
    if (!(*debye_K > 0.0))
      throw ConfigError(join_path(base, "debye_at_K"), "must be positive");
    return debye_radius(n_scr, kelvin_to_erg(*debye_K), mat.chi0);
  }
  const std::string ref = require_string(s, "debye_at", base);
  if (ref != dynamic_name)
    throw ConfigError(join_path(base, "debye_at"),
                      "this scenario supports only \"" + dynamic_name + "\"");
  return debye_radius(n_scr, dynamic_T, mat.chi0);
}

void require_donors_for_coulomb(const MaterialParams& mat) {
  if (!(mat.N_D > 0.0))
    throw ConfigError("material.N_D_cm3",
                      "the impurity channel needs a positive donor concentration");
}

// ---------------------------------------------------------------------------
// Channel combination on the <111> quartet.
// ---------------------------------------------------------------------------

/// Sum over valleys of (1 - c_k) Q_perp + c_k Q_par with per-valley channel
/// weights; channels[k] = {Q_perp, Q_par} for valley k.
double combine_channels(const ValleySet& valleys,
                        const std::vector<std::pair<double, double>>& channels,
                        const Vec3& g0) {
  double total = 0.0;
  for (std::size_t k = 0; k < valleys.size(); ++k) {
    const double c = cos2_angle(valleys.axes[k], g0);
    total += (1.0 - c) * channels[k].first + c * channels[k].second;
  }
  return total;
}

/// Polarization direction at sweep angle phi, rotating from the cold-valley
/// axis (1,1,1)/sqrt(3) toward e2 = (1,1,-2)/sqrt(6).
Vec3 polarization_of_phi(double phi) {
  const double s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
  const Vec3 l1{1.0 / s3, 1.0 / s3, 1.0 / s3};
  const Vec3 e2{1.0 / s6, 1.0 / s6, -2.0 / s6};
  return std::cos(phi) * l1 + std::sin(phi) * e2;
}

// ---------------------------------------------------------------------------
// Scenario: field-111
// ---------------------------------------------------------------------------

struct Field111Setup {
  MaterialParams mat;
  double omega = 0.0;
  double n_k = 0.0;    ///< per-valley concentration (quarter of the total)
  double T_cold = 0.0; ///< field-aligned valley
  double T_hot = 0.0;  ///< the three tilted valleys
  std::vector<double> phis;
  std::pair<double, double> weights; ///< (acoustic, coulomb)
  std::optional<ScreeningParams> screening;
};

Field111Setup setup_field111(const json& cfg, const std::string& mechanism) {
  Field111Setup s;
  const ParsedMaterial parsed = parse_material(cfg);
  s.mat = parsed.params;
  s.omega = parse_photon(cfg);
  s.weights = parse_mix_weights(cfg, mechanism);

  const json& c = require_object(cfg, "carriers", "");
  const double n_total = require_number(c, "n_total_cm3", "carriers");
  if (!(n_total > 0.0))
    throw ConfigError("carriers.n_total_cm3", "must be positive");
  s.n_k = n_total / 4.0;
  s.T_cold = kelvin_to_erg(require_number(c, "T_cold_K", "carriers"));
  s.T_hot = kelvin_to_erg(require_number(c, "T_hot_K", "carriers"));
  if (!(s.T_cold > 0.0) || !(s.T_hot > 0.0))
    throw ConfigError("carriers", "temperatures must be positive");

  for (double deg : require_number_array(cfg, "angles_deg", ""))
    s.phis.push_back(deg * kPi / 180.0);

  if (s.weights.second > 0.0) {
    require_donors_for_coulomb(s.mat);
    const double r_D = resolve_screening_radius(cfg, s.mat, n_total, s.T_cold,
                                                "T_cold");
    s.screening = make_screening(s.mat, s.T_cold, r_D);
  }
  return s;
}

SweepTable run_field111(const json& cfg, const std::string& mechanism) {
  const Field111Setup s = setup_field111(cfg, mechanism);
  const auto [wa, wc] = s.weights;
  const ValleySet valleys = ge_valleys();

  // Channel weights depend only on the valley state, so compute them once
  // per distinct (n, T) and reuse across every polarization angle.
  std::vector<std::pair<double, double>> ac(4), co(4);
  AngularDecomposition ac_dec{}, co_dec{};
  if (wa > 0.0) {
    const auto cold = acoustic_emission_channels(s.mat, s.n_k, s.T_cold, s.omega);
    const auto hot = acoustic_emission_channels(s.mat, s.n_k, s.T_hot, s.omega);
    ac = {cold, hot, hot, hot};
    ac_dec = channel_decomposition_111(cold.first, cold.second, hot.first,
                                       hot.second);
  }
  if (wc > 0.0) {
    const auto cold = coulomb_emission_channels(s.mat, s.n_k, s.T_cold, s.omega,
                                                *s.screening);
    const auto hot = coulomb_emission_channels(s.mat, s.n_k, s.T_hot, s.omega,
                                               *s.screening);
    co = {cold, hot, hot, hot};
    co_dec = channel_decomposition_111(cold.first, cold.second, hot.first,
                                       hot.second);
  }

  SweepTable table;
  table.scenario = "field-111";
  table.mechanism = mechanism;
  const bool mixed = mechanism == "auto-mix";
  table.columns = mixed
                      ? std::vector<std::string>{"phi_rad", "W", "W_acoustic",
                                                 "W_coulomb", "A0", "A2"}
                      : std::vector<std::string>{"phi_rad", "W", "A0", "A2"};

  const double a0 = wa * ac_dec.a0 + wc * co_dec.a0;
  const double a2 = wa * ac_dec.a2 + wc * co_dec.a2;
  for (double phi : s.phis) {
    const Vec3 g0 = polarization_of_phi(phi);
    const double w_ac = wa > 0.0 ? wa * combine_channels(valleys, ac, g0) : 0.0;
    const double w_co = wc > 0.0 ? wc * combine_channels(valleys, co, g0) : 0.0;
    const double w = w_ac + w_co;
    if (mixed)
      table.rows.push_back({phi, w, w_ac, w_co, a0, a2});
    else
      table.rows.push_back({phi, w, a0, a2});
  }
  return table;
}

// ---------------------------------------------------------------------------
// Scenario: field-100
// ---------------------------------------------------------------------------

SweepTable run_field100(const json& cfg) {
  const ParsedMaterial parsed = parse_material(cfg);
  const double omega = parse_photon(cfg);

  const json& h = require_object(cfg, "hotfield", "");
  const std::string base = "hotfield";
  MonoValleyModel model;
  model.m = require_number(h, "m_m0", base) * cgs::m_electron;
  model.tau0 = require_number(h, "tau0_s", base);
  model.n = require_number(h, "n_cm3", base);
  model.T_e = kelvin_to_erg(require_number(h, "T_e_K", base));
  model.T_lattice = parsed.params.T_lattice;

  DistortionBracket bracket = DistortionBracket::validated;
  if (h.contains("bracket")) {
    const std::string b = require_string(h, "bracket", base);
    if (b == "validated")
      bracket = DistortionBracket::validated;
    else if (b == "printed")
      bracket = DistortionBracket::printed;
    else
      throw ConfigError(join_path(base, "bracket"),
                        "must be \"validated\" or \"printed\"");
  }

  const std::vector<double> fields = require_number_array(cfg, "field_V_cm", "");
  std::vector<double> thetas;
  for (double deg : require_number_array(cfg, "angles_deg", ""))
    thetas.push_back(deg * kPi / 180.0);

  SweepTable table;
  table.scenario = "field-100";
  table.mechanism = "acoustic";
  table.columns = {"F_V_cm", "theta0_rad", "W"};
  for (double F_V : fields) {
    if (F_V < 0.0)
      throw ConfigError("field_V_cm", "field magnitudes must be non-negative");
    model.F = volt_per_cm_to_statvolt(F_V);
    for (double th : thetas) {
      model.theta0 = th;
      double w = 0.0;
      try {
        w = emission_distorted(model, omega, bracket);
      } catch (const std::domain_error& e) {
        throw ConfigError("field_V_cm", e.what());
      } catch (const std::invalid_argument& e) {
        throw ConfigError("hotfield", e.what());
      }
      table.rows.push_back({F_V, th, w});
    }
  }
  return table;
}

// ---------------------------------------------------------------------------
// Scenario: lattice-temp-scan
// ---------------------------------------------------------------------------

SweepTable run_lattice_temp_scan(const json& cfg, const std::string& mechanism) {
  const ParsedMaterial parsed = parse_material(cfg);
  const double omega = parse_photon(cfg);
  const auto [wa, wc] = parse_mix_weights(cfg, mechanism);

  const json& scan = require_object(cfg, "temperature_scan", "");
  const std::string base = "temperature_scan";
  const std::vector<double> TL_K = require_number_array(scan, "T_lattice_K", base);
  const std::vector<double> Te_K = require_number_array(scan, "T_e_K", base);
  if (TL_K.size() != Te_K.size())
    throw ConfigError(base, "T_lattice_K and T_e_K must have equal lengths");
  const double n_total = require_number(scan, "n_total_cm3", base);
  if (!(n_total > 0.0))
    throw ConfigError(join_path(base, "n_total_cm3"), "must be positive");

  if (wc > 0.0)
    require_donors_for_coulomb(parsed.params);

  const ValleySet valleys = ge_valleys();
  const Vec3 g0{0.0, 0.0, 1.0}; // equal valley states: any polarization gives W
  const double n_k = n_total / 4.0;

  SweepTable table;
  table.scenario = "lattice-temp-scan";
  table.mechanism = mechanism;
  const bool mixed = mechanism == "auto-mix";
  table.columns = mixed
                      ? std::vector<std::string>{"T_lattice_K", "T_e_K",
                                                 "W_acoustic", "W_coulomb", "W"}
                      : std::vector<std::string>{"T_lattice_K", "T_e_K", "W"};

  for (std::size_t i = 0; i < TL_K.size(); ++i) {
    if (!(TL_K[i] > 0.0) || !(Te_K[i] > 0.0))
      throw ConfigError(base, "temperatures must be positive");
    const double T_L = kelvin_to_erg(TL_K[i]);
    const double T_e = kelvin_to_erg(Te_K[i]);
    const MaterialParams mat = material_at_lattice_temperature(parsed, T_L);

    double w_ac = 0.0, w_co = 0.0;
    if (wa > 0.0) {
      const auto ch = acoustic_emission_channels(mat, n_k, T_e, omega);
      w_ac = wa * combine_channels(valleys, {ch, ch, ch, ch}, g0);
    }
    if (wc > 0.0) {
      const double r_D =
          resolve_screening_radius(cfg, mat, n_total, T_e, "T_e");
      const ScreeningParams scr = make_screening(mat, T_e, r_D);
      const auto ch = coulomb_emission_channels(mat, n_k, T_e, omega, scr);
      w_co = wc * combine_channels(valleys, {ch, ch, ch, ch}, g0);
    }
    if (mixed)
      table.rows.push_back({TL_K[i], Te_K[i], w_ac, w_co, w_ac + w_co});
    else
      table.rows.push_back({TL_K[i], Te_K[i], w_ac + w_co});
  }
  return table;
}

void check_schema_version(const json& cfg) {
  if (!cfg.is_object())
    throw ConfigError("", "configuration root must be a JSON object");
  if (cfg.contains("schema_version")) {
    const auto& v = cfg.at("schema_version");
    if (!v.is_number_integer() || v.get<int>() != 1)
      throw ConfigError("schema_version", "this build understands version 1");
  }
}

} // namespace

// ---------------------------------------------------------------------------
// Public entry points.
// ---------------------------------------------------------------------------

SweepTable run_sweep(const json& config) {
  check_schema_version(config);
  const std::string scenario = require_string(config, "scenario", "");
  if (scenario == "field-111")
    return run_field111(config, parse_mechanism(config));
  if (scenario == "field-100")
    return run_field100(config);
  if (scenario == "lattice-temp-scan")
    return run_lattice_temp_scan(config, parse_mechanism(config));
  throw ConfigError("scenario",
                    "must be one of field-111, field-100, lattice-temp-scan");
}

SweepTable run_sweep_file(const std::string& config_path) {
  std::ifstream in(config_path);
  if (!in)
    throw ConfigError("<config>", "cannot open '" + config_path + "'");
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("<config>", std::string("invalid JSON: ") + e.what());
  }
  return run_sweep(cfg);
}

namespace {

/// Locale-independent shortest-correct rendering at 17 significant digits,
/// so identical tables serialize to identical bytes on every platform.
std::string format_cell(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v,
                           std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

} // namespace

void emit_csv(const SweepTable& table, std::ostream& out) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c)
      out << ',';
    out << table.columns[c];
  }
  out << "\r\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c)
        out << ',';
      out << format_cell(row[c]);
    }
    out << "\r\n";
  }
}

std::string emit_csv_string(const SweepTable& table) {
  std::ostringstream os;
  emit_csv(table, os);
  return os.str();
}

json emit_json(const SweepTable& table) {
  json j;
  j["schema_version"] = 1;
  j["scenario"] = table.scenario;
  j["mechanism"] = table.mechanism;
  j["columns"] = table.columns;
  j["rows"] = table.rows;
  return j;
}

#ifdef HOTCARRIER_NO_ORACLE

json oracle_sidecar(const json&) {
  throw ConfigError("--oracle",
                    "this build has oracle support disabled "
                    "(HOTCARRIER_WITH_ORACLE=OFF)");
}

#else

json oracle_sidecar(const json& config) {
  check_schema_version(config);
  const std::string scenario = require_string(config, "scenario", "");
  json reports = json::array();

  auto push = [&reports](const std::string& channel, const OracleReport& r) {
    json entry = json::parse(r.to_json_string());
    entry["channel"] = channel;
    reports.push_back(std::move(entry));
  };

  if (scenario == "field-111") {
    const std::string mechanism = parse_mechanism(config);
    const Field111Setup s = setup_field111(config, mechanism);
    const Vec3 axis = ge_valleys().axes[0];
    const Vec3 g0 = polarization_of_phi(s.phis.front());
    if (s.weights.first > 0.0)
      push("acoustic", oracle_acoustic(s.mat, axis, s.n_k, s.T_cold, s.omega,
                                       g0, Branch::emission));
    if (s.weights.second > 0.0)
      push("coulomb", oracle_coulomb(s.mat, axis, s.n_k, s.T_cold, s.omega, g0,
                                     *s.screening, CoulombBrace::sum));
  } else if (scenario == "field-100") {
    // Reuse the scenario runner's parsing by evaluating the first grid point.
    json first = config;
    first["field_V_cm"] = json::array({config.at("field_V_cm").at(0)});
    first["angles_deg"] = json::array({config.at("angles_deg").at(0)});
    const ParsedMaterial parsed = parse_material(config);
    const double omega = parse_photon(config);
    const json& h = require_object(config, "hotfield", "");
    MonoValleyModel model;
    model.m = require_number(h, "m_m0", "hotfield") * cgs::m_electron;
    model.tau0 = require_number(h, "tau0_s", "hotfield");
    model.n = require_number(h, "n_cm3", "hotfield");
    model.T_e = kelvin_to_erg(require_number(h, "T_e_K", "hotfield"));
    model.T_lattice = parsed.params.T_lattice;
    model.F = volt_per_cm_to_statvolt(
        require_number_array(first, "field_V_cm", "").front());
    model.theta0 =
        require_number_array(first, "angles_deg", "").front() * kPi / 180.0;
    push("hotfield", oracle_hotfield(model, omega));
  } else if (scenario == "lattice-temp-scan") {
    const std::string mechanism = parse_mechanism(config);
    const ParsedMaterial parsed = parse_material(config);
    const double omega = parse_photon(config);
    const auto weights = parse_mix_weights(config, mechanism);
    const json& scan = require_object(config, "temperature_scan", "");
    const double TL =
        kelvin_to_erg(require_number_array(scan, "T_lattice_K",
                                                "temperature_scan").front());
    const double Te = kelvin_to_erg(
        require_number_array(scan, "T_e_K", "temperature_scan").front());
    const double n_total = require_number(scan, "n_total_cm3", "temperature_scan");
    const MaterialParams mat = material_at_lattice_temperature(parsed, TL);
    const Vec3 axis = ge_valleys().axes[0];
    const Vec3 g0{0.0, 0.0, 1.0};
    if (weights.first > 0.0)
      push("acoustic", oracle_acoustic(mat, axis, n_total / 4.0, Te, omega, g0,
                                       Branch::emission));
    if (weights.second > 0.0) {
      require_donors_for_coulomb(mat);
      const double r_D = resolve_screening_radius(config, mat, n_total, Te, "T_e");
      push("coulomb",
           oracle_coulomb(mat, axis, n_total / 4.0, Te, omega, g0,
                          make_screening(mat, Te, r_D), CoulombBrace::sum));
    }
  } else {
    throw ConfigError("scenario",
                      "must be one of field-111, field-100, lattice-temp-scan");
  }

  json out;
  out["schema_version"] = 1;
  out["scenario"] = scenario;
  out["reports"] = std::move(reports);
  return out;
}

#endif // HOTCARRIER_NO_ORACLE

} // namespace hotc
