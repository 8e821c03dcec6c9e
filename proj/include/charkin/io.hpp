#pragma once

#include <map>

#include "charkin/evolution.hpp"
#include "charkin/wigner.hpp"

namespace charkin {

// Binary field dump, little-endian:
//   magic "CHKN", version u32, N u32, G[i] u32…, L_λ[i] f64…, L_μ[i] f64…,
//   ħ f64, ω f64, ordering u8, then ∏G[i]² interleaved (re, im) f64 samples.
inline constexpr uint32_t kDumpVersion = 1;

void write_field_dump(const std::string& path, const CharField& f);
CharField read_field_dump(const std::string& path);
void write_wigner_dump(const std::string& path, const WignerField& w);

/// One row per node: λ…, μ…, re, im (x…, p… for Wigner-side fields).
void write_field_csv(const std::string& path, const CharField& f);
void write_wigner_csv(const std::string& path, const WignerField& w);

/// Full run configuration (see README for the schema).
struct RunConfig {
  GridSpec grid;
  StateSpec state;

  PolyHamiltonian hamiltonian{1};
  bool has_quantum_hamiltonian = false;
  PhasePoly classical_symbol{1};
  bool has_classical_symbol = false;

  uint32_t oracle_n_max = 32;
  uint32_t grid_symbol_n_max = 16;  // truncation for ham_charfn_grid

  Ordering ordering = Ordering::kSymmetric;
  RhsMethod method = RhsMethod::kDistributional;
  EvolveConfig evolve;

  std::vector<double> hbar_values;  // hbar-scan list
  double oracle_fd_dt = 1e-4;
  std::map<std::string, double> oracle_tolerances;

  std::string out_dir = "out";
  bool write_csv = false;

  std::string raw_json;  // config echo for the manifest

  void validate() const;
};

RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::string& path);

/// Builds the configured initial field (oracle-backed; classical runs retag
/// the symmetric field).
CharField initial_field(const RunConfig& cfg);

/// Builds the RHS operator the config asks for.
RhsOperator make_rhs_operator(const RunConfig& cfg, const GridPtr& grid);

}  // namespace charkin
