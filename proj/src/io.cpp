#include "charkin/io.hpp"

#include <fstream>

#include <json.hpp>

namespace charkin {

using nlohmann::json;

namespace {

template <typename T>
void put(std::ostream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));  // little-endian host
}

template <typename T>
T get(std::istream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  return v;
}

void write_dump_impl(const std::string& path, const GridSpec& spec, Ordering ordering,
                     const std::vector<cplx>& data) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + path);
  os.write("CHKN", 4);
  put<uint32_t>(os, kDumpVersion);
  put<uint32_t>(os, spec.dims);
  for (uint32_t g : spec.points) put<uint32_t>(os, g);
  for (double v : spec.extent_lambda) put<double>(os, v);
  for (double v : spec.extent_mu) put<double>(os, v);
  put<double>(os, spec.hbar);
  put<double>(os, spec.omega);
  put<uint8_t>(os, static_cast<uint8_t>(ordering));
  for (const cplx& z : data) {
    put<double>(os, z.real());
    put<double>(os, z.imag());
  }
  if (!os) throw IoError("write failed: " + path);
}

}  // namespace

void write_field_dump(const std::string& path, const CharField& f) {
  write_dump_impl(path, f.grid->spec(), f.ordering, f.data);
}

void write_wigner_dump(const std::string& path, const WignerField& w) {
  std::vector<cplx> data(w.data.begin(), w.data.end());
  write_dump_impl(path, w.grid->spec(), Ordering::kWigner, data);
}

CharField read_field_dump(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open: " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::string(magic, 4) != "CHKN") throw IoError("not a CHKN dump: " + path);
  uint32_t version = get<uint32_t>(is);
  if (version != kDumpVersion) throw IoError("unsupported dump version");
  GridSpec spec;
  spec.dims = get<uint32_t>(is);
  if (spec.dims < 1 || spec.dims > 2) throw IoError("corrupt dump header");
  spec.points.resize(spec.dims);
  spec.extent_lambda.resize(spec.dims);
  spec.extent_mu.resize(spec.dims);
  for (auto& g : spec.points) g = get<uint32_t>(is);
  for (auto& v : spec.extent_lambda) v = get<double>(is);
  for (auto& v : spec.extent_mu) v = get<double>(is);
  spec.hbar = get<double>(is);
  spec.omega = get<double>(is);
  auto ordering = static_cast<Ordering>(get<uint8_t>(is));

  CharField f(PhaseGrid::create(spec), ordering == Ordering::kWigner ? Ordering::kSymmetric : ordering);
  f.ordering = ordering;
  for (auto& z : f.data) {
    double re = get<double>(is);
    double im = get<double>(is);
    z = {re, im};
  }
  if (!is) throw IoError("truncated dump: " + path);
  return f;
}

namespace {

void write_csv_impl(const std::string& path, const PhaseGrid& g, bool xp_side,
                    const std::function<cplx(std::size_t)>& value) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open for writing: " + path);
  os.precision(17);
  for (uint32_t d = 0; d < g.dims(); ++d) os << (xp_side ? "x" : "lambda") << d + 1 << ",";
  for (uint32_t d = 0; d < g.dims(); ++d) os << (xp_side ? "p" : "mu") << d + 1 << ",";
  os << "re,im\n";
  double a[2], b[2];
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (xp_side)
      g.node_xp(i, a, b);
    else
      g.node(i, a, b);
    for (uint32_t d = 0; d < g.dims(); ++d) os << a[d] << ",";
    for (uint32_t d = 0; d < g.dims(); ++d) os << b[d] << ",";
    cplx z = value(i);
    os << z.real() << "," << z.imag() << "\n";
  }
}

}  // namespace

void write_field_csv(const std::string& path, const CharField& f) {
  bool xp = f.ordering == Ordering::kWigner;
  write_csv_impl(path, *f.grid, xp, [&](std::size_t i) { return f.data[i]; });
}

void write_wigner_csv(const std::string& path, const WignerField& w) {
  write_csv_impl(path, *w.grid, true, [&](std::size_t i) { return cplx(w.data[i], 0.0); });
}

// ---------------------------------------------------------------------------
// Run configuration
// ---------------------------------------------------------------------------

namespace {

std::vector<double> number_list(const json& j) {
  if (j.is_number()) return {j.get<double>()};
  return j.get<std::vector<double>>();
}

std::vector<uint32_t> uint_list(const json& j) {
  if (j.is_number()) return {j.get<uint32_t>()};
  return j.get<std::vector<uint32_t>>();
}

StateSpec parse_state(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  auto get_alpha = [&]() {
    const json& a = j.at("alpha");
    if (a.is_number()) return cplx(a.get<double>(), 0.0);
    return cplx(a.at(0).get<double>(), a.at(1).get<double>());
  };
  if (kind == "coherent") return StateSpec::coherent(get_alpha());
  if (kind == "fock") return StateSpec::fock(j.at("n").get<uint32_t>());
  if (kind == "thermal") return StateSpec::thermal(j.at("nbar").get<double>());
  if (kind == "cat") return StateSpec::cat(get_alpha(), j.value("phase", 0.0));
  throw ConfigError("unknown state kind: " + kind);
}

PolyHamiltonian parse_ham_terms(const json& terms, uint32_t dims) {
  PolyHamiltonian h(dims);
  for (const json& t : terms) {
    if (!t.is_array() || t.size() != 4) throw ConfigError("hamiltonian term must be [j, k, re, im]");
    LadderTerm lt;
    if (t[0].is_array()) {
      auto jv = t[0].get<std::vector<uint32_t>>();
      auto kv = t[1].get<std::vector<uint32_t>>();
      if (jv.size() != dims || kv.size() != dims)
        throw ConfigError("hamiltonian term powers must match grid dims");
      for (uint32_t d = 0; d < dims; ++d) {
        lt.dag[d] = static_cast<uint8_t>(jv[d]);
        lt.ann[d] = static_cast<uint8_t>(kv[d]);
      }
    } else {
      if (dims != 1) throw ConfigError("scalar term powers require dims = 1");
      lt.dag[0] = static_cast<uint8_t>(t[0].get<uint32_t>());
      lt.ann[0] = static_cast<uint8_t>(t[1].get<uint32_t>());
    }
    lt.c = cplx(t[2].get<double>(), t[3].get<double>());
    h.op.add_term(lt);
  }
  return h;
}

PhasePoly parse_classical_symbol(const json& terms, uint32_t dims) {
  PhasePoly p(dims);
  for (const json& t : terms) {
    if (!t.is_array() || t.size() != 3) throw ConfigError("classical term must be [xpow, ppow, coef]");
    std::array<uint8_t, 2> xe{}, pe{};
    if (t[0].is_array()) {
      auto xv = t[0].get<std::vector<uint32_t>>();
      auto pv = t[1].get<std::vector<uint32_t>>();
      for (uint32_t d = 0; d < dims; ++d) {
        xe[d] = static_cast<uint8_t>(xv[d]);
        pe[d] = static_cast<uint8_t>(pv[d]);
      }
    } else {
      xe[0] = static_cast<uint8_t>(t[0].get<uint32_t>());
      pe[0] = static_cast<uint8_t>(t[1].get<uint32_t>());
    }
    p.add_monomial(xe, pe, t[2].get<double>());
  }
  return p;
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  try {
    RunConfig cfg;
    cfg.raw_json = j.dump(2);

    const json& jg = j.at("grid");
    cfg.grid.dims = jg.value("dims", 1u);
    cfg.grid.points = uint_list(jg.at("points"));
    cfg.grid.extent_lambda = number_list(jg.at("extent_lambda"));
    cfg.grid.extent_mu = jg.contains("extent_mu") ? number_list(jg.at("extent_mu"))
                                                  : cfg.grid.extent_lambda;
    if (cfg.grid.points.size() == 1 && cfg.grid.dims > 1)
      cfg.grid.points.resize(cfg.grid.dims, cfg.grid.points[0]);
    if (cfg.grid.extent_lambda.size() == 1 && cfg.grid.dims > 1)
      cfg.grid.extent_lambda.resize(cfg.grid.dims, cfg.grid.extent_lambda[0]);
    if (cfg.grid.extent_mu.size() == 1 && cfg.grid.dims > 1)
      cfg.grid.extent_mu.resize(cfg.grid.dims, cfg.grid.extent_mu[0]);
    cfg.grid.hbar = jg.value("hbar", 1.0);
    cfg.grid.omega = jg.value("omega", 1.0);

    cfg.state = parse_state(j.at("state"));

    if (j.contains("hamiltonian")) {
      const json& jh = j.at("hamiltonian");
      if (jh.contains("terms")) {
        cfg.hamiltonian = parse_ham_terms(jh.at("terms"), cfg.grid.dims);
        cfg.has_quantum_hamiltonian = true;
      }
      if (jh.contains("classical")) {
        cfg.classical_symbol = parse_classical_symbol(jh.at("classical"), cfg.grid.dims);
        cfg.has_classical_symbol = true;
      }
    }

    if (j.contains("oracle")) {
      cfg.oracle_n_max = j.at("oracle").value("n_max", 32u);
      cfg.grid_symbol_n_max = j.at("oracle").value("grid_symbol_n_max", 16u);
      cfg.oracle_fd_dt = j.at("oracle").value("fd_dt", 1e-4);
      if (j.at("oracle").contains("tolerances"))
        for (auto& [key, val] : j.at("oracle").at("tolerances").items())
          cfg.oracle_tolerances[key] = val.get<double>();
    }

    if (j.contains("evolve")) {
      const json& je = j.at("evolve");
      cfg.ordering = ordering_from_name(je.value("ordering", "symmetric"));
      cfg.method = rhs_method_from_name(je.value("method", "distributional"));
      cfg.evolve.dt = je.value("dt", 0.0);
      cfg.evolve.t_final = je.value("t_final", 0.0);
      cfg.evolve.n_steps_override = je.value("n_steps", 0ull);
      cfg.evolve.snapshot_every = je.value("snapshot_every", 1u);
      cfg.evolve.monitor_every = je.value("monitor_every", 1u);
      cfg.evolve.norm_tol = je.value("norm_tol", 1e-6);
      cfg.evolve.herm_tol = je.value("herm_tol", 1e-6);
      cfg.evolve.bound_tol = je.value("bound_tol", 1e-6);
    }

    if (j.contains("hbar_scan")) cfg.hbar_values = number_list(j.at("hbar_scan").at("values"));

    if (j.contains("output")) {
      cfg.out_dir = j.at("output").value("directory", std::string("out"));
      if (j.at("output").contains("formats"))
        for (const json& f : j.at("output").at("formats"))
          if (f.get<std::string>() == "csv") cfg.write_csv = true;
    }

    cfg.validate();
    return cfg;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field error: ") + e.what());
  }
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open config: " + path);
  std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  return parse_run_config(text);
}

void RunConfig::validate() const {
  for (uint32_t g : grid.points)
    if (g % 2 != 0) throw ConfigError("grid.G must be even");
  state.validate();
  if (has_quantum_hamiltonian && hamiltonian.degree() > kMaxHamiltonianDegree)
    throw ConfigError("hamiltonian degree overflow (max 6)");
  if (has_quantum_hamiltonian && !hamiltonian.is_hermitian(1e-9))
    throw ConfigError("hamiltonian terms are not Hermitian (c_jk must equal conj(c_kj))");
  if (ordering == Ordering::kClassical) {
    if (!has_classical_symbol && !has_quantum_hamiltonian)
      throw ConfigError("classical runs need a hamiltonian (classical symbol or ladder terms)");
    if (method == RhsMethod::kStarProduct)
      throw ConfigError("star-product method requires normal ordering");
  } else if (method == RhsMethod::kStarProduct && ordering != Ordering::kNormal) {
    throw ConfigError("star-product method requires normal ordering");
  }
  if (method != RhsMethod::kDistributional && ordering != Ordering::kClassical &&
      !has_quantum_hamiltonian)
    throw ConfigError("grid-sampled methods need ladder-operator hamiltonian terms");
}

CharField initial_field(const RunConfig& cfg) {
  GridPtr grid = PhaseGrid::create(cfg.grid);
  if (cfg.ordering == Ordering::kClassical) {
    CharField sym = make_state_charfn(cfg.state, grid, Ordering::kSymmetric, cfg.oracle_n_max);
    return reinterpret_as_classical(sym);
  }
  return make_state_charfn(cfg.state, grid, cfg.ordering, cfg.oracle_n_max);
}

RhsOperator make_rhs_operator(const RunConfig& cfg, const GridPtr& grid) {
  if (cfg.method == RhsMethod::kDistributional) {
    if (cfg.ordering == Ordering::kClassical && cfg.has_classical_symbol)
      return RhsOperator::distributional(classical_distributional(cfg.classical_symbol));
    if (!cfg.has_quantum_hamiltonian)
      throw ConfigError("distributional method needs ladder-operator hamiltonian terms");
    return RhsOperator::distributional(
        ham_distributional(cfg.hamiltonian, cfg.ordering, grid->hbar(), grid->omega()));
  }
  if (!cfg.has_quantum_hamiltonian)
    throw ConfigError("grid-sampled methods need ladder-operator hamiltonian terms");
  if (cfg.ordering == Ordering::kClassical)
    throw ConfigError("classical runs use the distributional method");
  HamGridRep rep = ham_charfn_grid(cfg.hamiltonian, grid, cfg.ordering, cfg.grid_symbol_n_max);
  return cfg.method == RhsMethod::kQuadrature ? RhsOperator::quadrature(std::move(rep))
                                              : RhsOperator::star_product(std::move(rep));
}

}  // namespace charkin
