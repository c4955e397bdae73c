/* ============================================================================
   hotcarrier — spontaneous emission and free-carrier absorption by hot
   electrons in multivalley semiconductors.

   Distributed under the MIT License; see LICENSE.
   ============================================================================ */

/** @file hotcarrier_main.cpp
 *  @brief Command-line front end: run a configured sweep, write CSV/JSON.
 *
 *  Exit status 0 on success, 1 on any error.  Errors are reported as a
 *  single JSON object on stderr:
 *      {"error": {"type": "...", "message": "...", "key_path": "..."}}
 */

#include <CLI11.hpp>
#include <json.hpp>

#include "hotcarrier/errors.hpp"
#include "hotcarrier/sweep.hpp"

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;

void print_error(const std::string& type, const std::string& message,
                 const std::string& key_path = "") {
  json err;
  err["error"]["type"] = type;
  err["error"]["message"] = message;
  if (!key_path.empty())
    err["error"]["key_path"] = key_path;
  std::cerr << err.dump() << "\n";
}

int run(const std::string& config_path, const std::string& scenario_override,
        const std::string& out_override, const std::string& format_override,
        bool with_oracle) {
  std::ifstream in(config_path);
  if (!in) {
    print_error("io", "cannot open config file '" + config_path + "'");
    return 1;
  }
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const json::parse_error& e) {
    print_error("config", std::string("invalid JSON: ") + e.what(), "<config>");
    return 1;
  }

  if (!scenario_override.empty())
    cfg["scenario"] = scenario_override;

  // Output destination / format: flags override the config's output block.
  std::string out_path = out_override;
  std::string format = format_override;
  if (cfg.contains("output") && cfg["output"].is_object()) {
    const auto& o = cfg["output"];
    if (out_path.empty() && o.contains("path") && o["path"].is_string())
      out_path = o["path"].get<std::string>();
    if (format.empty() && o.contains("format") && o["format"].is_string())
      format = o["format"].get<std::string>();
  }
  if (format.empty())
    format = "csv";
  if (format != "csv" && format != "json") {
    print_error("config", "format must be csv or json", "output.format");
    return 1;
  }

  hotc::SweepTable table;
  json sidecar;
  try {
    table = hotc::run_sweep(cfg);
    if (with_oracle)
      sidecar = hotc::oracle_sidecar(cfg);
  } catch (const hotc::ConfigError& e) {
    print_error("config", e.what(), e.key_path());
    return 1;
  } catch (const hotc::QuadratureError& e) {
    print_error("quadrature", e.what());
    return 1;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return 1;
  }

  std::string payload;
  if (format == "csv")
    payload = hotc::emit_csv_string(table);
  else
    payload = hotc::emit_json(table).dump(2) + "\n";

  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      print_error("io", "cannot open output file '" + out_path + "'");
      return 1;
    }
    out << payload;
    if (!out) {
      print_error("io", "failed writing '" + out_path + "'");
      return 1;
    }
  }

  if (with_oracle) {
    if (out_path.empty()) {
      print_error("config",
                  "--oracle needs a file destination (--out or output.path)");
      return 1;
    }
    const std::string sidecar_path = out_path + ".oracle.json";
    std::ofstream out(sidecar_path, std::ios::binary);
    if (!out) {
      print_error("io", "cannot open output file '" + sidecar_path + "'");
      return 1;
    }
    out << sidecar.dump(2) << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hotcarrier — spontaneous emission and free-carrier absorption of hot "
      "electrons in multivalley semiconductors"};

  std::string config_path;
  std::string scenario;
  std::string out_path;
  std::string format;
  bool with_oracle = false;

  app.add_option("-c,--config", config_path,
                 "JSON sweep configuration file")
      ->required();
  app.add_option("-s,--scenario", scenario,
                 "override the scenario named in the config "
                 "(field-111 | field-100 | lattice-temp-scan)");
  app.add_option("-o,--out", out_path,
                 "output file (default: config output.path, else stdout)");
  app.add_option("-f,--format", format, "output format: csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--oracle", with_oracle,
               "also write a brute-force cross-check report next to the "
               "output (<out>.oracle.json)");

  CLI11_PARSE(app, argc, argv);

  return run(config_path, scenario, out_path, format, with_oracle);
}
