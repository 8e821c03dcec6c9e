#pragma once

#include "charkin/io.hpp"

namespace charkin {

/// Runs the configured evolution; writes manifest.json, monitor.csv,
/// snapshots.csv and snapshot dumps into `out_dir` (config's directory when
/// empty). Monitor breach writes a diagnostic dump and throws NumericError.
void run_evolve(const RunConfig& cfg, const std::string& out_dir_override = "");

/// Per-snapshot-time L2/L∞ distance table between two run directories.
void run_compare(const std::string& dir_a, const std::string& dir_b, const std::string& out_csv);

/// ‖symmetric RHS − classical RHS‖/‖classical RHS‖ at t = 0 for each ħ in the
/// config list, on fixed inputs (ħ enters the kernel only). CSV rows (ħ, defect).
void run_hbar_scan(const RunConfig& cfg, const std::string& out_csv);

struct OracleCheckLine {
  std::string method;
  double rel_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// RHS-vs-oracle cross-check for each method named in oracle.tolerances
/// (default: the configured method at 1e-2). Writes a JSON report, prints one
/// line per method, throws NumericError when any method exceeds tolerance.
std::vector<OracleCheckLine> run_oracle_check(const RunConfig& cfg, const std::string& report_path);

/// Dump conversion (bin ↔ csv; format inferred from the output suffix when empty).
void run_convert(const std::string& in_path, const std::string& out_path, std::string format);

/// Resolves the output directory: override > CHARKIN_OUT > config.
std::string resolve_out_dir(const RunConfig& cfg, const std::string& override_dir);

}  // namespace charkin
