#include "charkin/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace charkin {

namespace fs = std::filesystem;
using nlohmann::json;

std::string resolve_out_dir(const RunConfig& cfg, const std::string& override_dir) {
  if (!override_dir.empty()) return override_dir;
  if (const char* env = std::getenv("CHARKIN_OUT"); env && *env) return env;
  return cfg.out_dir;
}

namespace {

void write_manifest(const fs::path& dir, const RunConfig& cfg, bool aborted,
                    const std::string& abort_reason) {
  json m;
  m["version"] = version_string();
  m["kappa_star"] = kStarProductKappa;
  m["config"] = json::parse(cfg.raw_json);
  m["aborted"] = aborted;
  if (aborted) m["abort_reason"] = abort_reason;
  std::ofstream os(dir / "manifest.json");
  os << m.dump(2) << "\n";
}

std::string snapshot_name(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "snapshot_%06zu.chkn", index);
  return buf;
}

}  // namespace

void run_evolve(const RunConfig& cfg, const std::string& out_dir_override) {
  fs::path dir = resolve_out_dir(cfg, out_dir_override);
  fs::create_directories(dir);

  CharField c0 = initial_field(cfg);
  GridPtr grid = c0.grid;
  RhsOperator rhs = make_rhs_operator(cfg, grid);
  Trajectory traj = evolve(c0, rhs, cfg.evolve);

  std::ofstream mon(dir / "monitor.csv");
  mon.precision(17);
  mon << "t,norm_defect,herm_defect,bound_defect\n";
  std::ofstream idx(dir / "snapshots.csv");
  idx.precision(17);
  idx << "index,t,file\n";
  for (std::size_t i = 0; i < traj.entries.size(); ++i) {
    const auto& e = traj.entries[i];
    mon << e.t << "," << e.monitor.norm_defect << "," << e.monitor.herm_defect << ","
        << e.monitor.bound_violation << "\n";
    std::string name = snapshot_name(i);
    write_field_dump((dir / name).string(), e.field);
    if (cfg.write_csv) write_field_csv((dir / (name + ".csv")).string(), e.field);
    idx << i << "," << e.t << "," << name << "\n";
  }

  write_manifest(dir, cfg, traj.aborted, traj.abort_reason);
  if (traj.aborted) {
    write_field_dump((dir / "diagnostic.chkn").string(), traj.diagnostic);
    throw NumericError(traj.abort_reason);
  }
}

void run_compare(const std::string& dir_a, const std::string& dir_b, const std::string& out_csv) {
  auto read_index = [](const std::string& dir) {
    std::ifstream is(fs::path(dir) / "snapshots.csv");
    if (!is) throw ConfigError("not a run directory (snapshots.csv missing): " + dir);
    std::string line;
    std::getline(is, line);  // header
    std::vector<std::pair<double, std::string>> rows;
    while (std::getline(is, line)) {
      auto c1 = line.find(',');
      auto c2 = line.find(',', c1 + 1);
      if (c1 == std::string::npos || c2 == std::string::npos) continue;
      rows.emplace_back(std::stod(line.substr(c1 + 1, c2 - c1 - 1)), line.substr(c2 + 1));
    }
    return rows;
  };

  auto rows_a = read_index(dir_a);
  auto rows_b = read_index(dir_b);
  std::size_t n = std::min(rows_a.size(), rows_b.size());
  if (n == 0) throw ConfigError("no snapshots to compare");

  std::ofstream os(out_csv);
  if (!os) throw IoError("cannot open for writing: " + out_csv);
  os.precision(17);
  os << "t,l2,linf,rel_l2\n";
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(rows_a[i].first - rows_b[i].first) > 1e-12)
      throw ConfigError("snapshot times differ between runs");
    CharField a = read_field_dump((fs::path(dir_a) / rows_a[i].second).string());
    CharField b = read_field_dump((fs::path(dir_b) / rows_b[i].second).string());
    if (!a.grid->same_layout(*b.grid)) throw ConfigError("grid mismatch between runs");
    double cell = std::sqrt(a.grid->cell_lambda_mu());
    os << rows_a[i].first << "," << l2_distance(a.data, b.data) * cell << ","
       << linf_distance(a.data, b.data) << "," << rel_l2(a.data, b.data) << "\n";
  }
}

void run_hbar_scan(const RunConfig& cfg, const std::string& out_csv) {
  if (cfg.ordering != Ordering::kSymmetric)
    throw ConfigError("hbar-scan requires symmetric ordering");
  if (!cfg.has_quantum_hamiltonian)
    throw ConfigError("hbar-scan needs ladder-operator hamiltonian terms");
  if (cfg.hbar_values.empty()) throw ConfigError("hbar_scan.values is empty");

  GridPtr grid0 = PhaseGrid::create(cfg.grid);
  CharField sym = make_state_charfn(cfg.state, grid0, Ordering::kSymmetric, cfg.oracle_n_max);

  // Fixed inputs: the state field and the distributional coefficients are
  // prepared once at the config's ħ; the scan varies ħ inside the kernel only.
  DistHam dist_sym = ham_distributional(cfg.hamiltonian, Ordering::kSymmetric, grid0->hbar(),
                                        grid0->omega());
  DistHam dist_cls = ham_distributional(cfg.hamiltonian, Ordering::kClassical, grid0->hbar(),
                                        grid0->omega());
  CharField cls = reinterpret_as_classical(sym);
  CharField rhs_cls = rhs_distributional(cls, dist_cls);
  double norm_cls = std::sqrt(sum_abs2(rhs_cls.data));
  if (norm_cls == 0.0) throw NumericError("classical reference RHS vanishes");

  std::ofstream os(out_csv);
  if (!os) throw IoError("cannot open for writing: " + out_csv);
  os.precision(17);
  os << "hbar,defect\n";
  for (double hb : cfg.hbar_values) {
    GridSpec spec = cfg.grid;
    spec.hbar = hb;
    GridPtr grid_h = PhaseGrid::create(spec);
    CharField sym_h(grid_h, Ordering::kSymmetric);
    sym_h.data = sym.data;
    CharField rhs_sym = rhs_distributional(sym_h, dist_sym);
    os << hb << "," << l2_distance(rhs_sym.data, rhs_cls.data) / norm_cls << "\n";
  }
}

std::vector<OracleCheckLine> run_oracle_check(const RunConfig& cfg, const std::string& report_path) {
  if (!cfg.has_quantum_hamiltonian)
    throw ConfigError("oracle-check needs ladder-operator hamiltonian terms");
  if (!is_quantum(cfg.ordering)) throw ConfigError("oracle-check needs a quantum ordering");
  if (cfg.grid.dims != 1) throw ConfigError("the Fock oracle is single-mode (dims = 1)");

  GridPtr grid = PhaseGrid::create(cfg.grid);
  FockDensity rho = fock_density(cfg.state, cfg.oracle_n_max);
  Matrix hmat = fock_matrix(cfg.hamiltonian.op, cfg.oracle_n_max);
  CharField c0 = density_to_charfn(rho, grid, cfg.ordering);
  CharField reference = oracle_rhs_fd(rho, hmat, grid, cfg.ordering, cfg.oracle_fd_dt);

  std::map<std::string, double> wanted = cfg.oracle_tolerances;
  if (wanted.empty()) wanted[rhs_method_name(cfg.method)] = 1e-2;

  std::vector<OracleCheckLine> lines;
  for (const auto& [name, tol] : wanted) {
    RunConfig one = cfg;
    one.method = rhs_method_from_name(name);
    RhsOperator rhs = make_rhs_operator(one, grid);
    CharField value = rhs(c0);
    OracleCheckLine line;
    line.method = name;
    line.tolerance = tol;
    line.rel_err = rel_l2(value.data, reference.data);
    line.pass = line.rel_err <= tol;
    lines.push_back(line);
  }

  json rep;
  bool all_pass = true;
  for (const auto& l : lines) {
    rep[l.method] = {{"rel_err", l.rel_err}, {"tolerance", l.tolerance}, {"pass", l.pass}};
    std::printf("oracle-check %-16s rel_err %.3e  tol %.1e  %s\n", l.method.c_str(), l.rel_err,
                l.tolerance, l.pass ? "PASS" : "FAIL");
    all_pass = all_pass && l.pass;
  }
  if (!report_path.empty()) {
    std::ofstream os(report_path);
    os << rep.dump(2) << "\n";
  }
  if (!all_pass) throw NumericError("oracle cross-check exceeded tolerance");
  return lines;
}

void run_convert(const std::string& in_path, const std::string& out_path, std::string format) {
  CharField f = read_field_dump(in_path);
  if (format.empty()) {
    auto dot = out_path.rfind('.');
    format = dot == std::string::npos ? "csv" : out_path.substr(dot + 1);
    if (format == "chkn") format = "bin";
  }
  if (format == "csv")
    write_field_csv(out_path, f);
  else if (format == "bin")
    write_field_dump(out_path, f);
  else
    throw ConfigError("unknown convert format: " + format);
}

}  // namespace charkin
