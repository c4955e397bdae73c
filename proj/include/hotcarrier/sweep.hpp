#ifndef HOTCARRIER_SWEEP_HPP
#define HOTCARRIER_SWEEP_HPP

/* ============================================================================
   hotcarrier — spontaneous emission and free-carrier absorption by hot
   electrons in multivalley semiconductors.

   Distributed under the MIT License; see LICENSE.
   ============================================================================ */

/** @file sweep.hpp
 *  @brief JSON-configured parameter sweeps and deterministic CSV/JSON output.
 *
 *  Scenarios (see README for the full configuration schema):
 *    - "field-111":        heating field along (1,1,1); valley 1 cold,
 *                          valleys 2..4 hot; polarization angle phi swept in
 *                          the plane spanned by the cold-valley axis and
 *                          e2 = (1,1,-2)/sqrt(6); rows carry W, A0, A2.
 *    - "field-100":        single-valley field-distortion model; rows sweep
 *                          field magnitude x angle theta0 between
 *                          polarization and field.
 *    - "lattice-temp-scan": equal valley populations; one row per
 *                          (T_lattice, T_e) pair with per-channel emission.
 *
 *  Output is reproducible byte for byte: fixed row order, 17 significant
 *  digits, '.' decimal separator, CRLF line endings, header row first.
 */

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace hotc {

/// One computed sweep: column names plus numeric rows in emission units
/// (erg / (s cm^3 sr)) unless a column name says otherwise.
struct SweepTable {
  std::string scenario;
  std::string mechanism;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Runs the sweep described by a parsed configuration document.
/// Malformed or inconsistent configurations raise ConfigError with the
/// offending key path.
SweepTable run_sweep(const nlohmann::json& config);

/// Loads a JSON configuration file and runs it.
SweepTable run_sweep_file(const std::string& config_path);

/// RFC-4180 CSV rendering: header row, CRLF line endings, UTF-8, '.'
/// decimal separator, 17 significant digits.  Identical tables render to
/// identical bytes.
void emit_csv(const SweepTable& table, std::ostream& out);

/// Convenience wrapper returning the CSV bytes as a string.
std::string emit_csv_string(const SweepTable& table);

/// JSON rendering with the same columns/rows layout.
nlohmann::json emit_json(const SweepTable& table);

/// Brute-force oracle reports for the first row of the configured sweep,
/// one entry per active channel.  Throws ConfigError when the library was
/// built without oracle support.
nlohmann::json oracle_sidecar(const nlohmann::json& config);

} // namespace hotc

#endif // HOTCARRIER_SWEEP_HPP
