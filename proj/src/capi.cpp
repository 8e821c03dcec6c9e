#include "charkin.h"

#include <algorithm>
#include <string>

#include "charkin/runner.hpp"

namespace {

thread_local std::string g_last_error;

chk_status fail(chk_status code, const char* what) {
  g_last_error = what;
  return code;
}

template <typename F>
chk_status guarded(F&& fn) {
  try {
    fn();
    g_last_error.clear();
    return CHK_OK;
  } catch (const charkin::ConfigError& e) {
    return fail(CHK_ERR_CONFIG, e.what());
  } catch (const charkin::IoError& e) {
    return fail(CHK_ERR_CONFIG, e.what());
  } catch (const charkin::NumericError& e) {
    return fail(CHK_ERR_NUMERIC, e.what());
  } catch (const std::exception& e) {
    return fail(CHK_ERR_INTERNAL, e.what());
  }
}

charkin::Ordering to_ordering(int32_t o) {
  if (o < 0 || o > 3) throw charkin::ConfigError("bad ordering tag");
  return static_cast<charkin::Ordering>(o);
}

charkin::RhsMethod to_method(int32_t m) {
  if (m < 0 || m > 2) throw charkin::ConfigError("bad rhs method tag");
  return static_cast<charkin::RhsMethod>(m);
}

charkin::StateSpec to_spec(const chk_state_spec& s) {
  charkin::StateSpec spec;
  switch (s.kind) {
    case CHK_STATE_COHERENT: spec = charkin::StateSpec::coherent({s.alpha_re, s.alpha_im}); break;
    case CHK_STATE_FOCK: spec = charkin::StateSpec::fock(s.n); break;
    case CHK_STATE_THERMAL: spec = charkin::StateSpec::thermal(s.nbar); break;
    case CHK_STATE_CAT: spec = charkin::StateSpec::cat({s.alpha_re, s.alpha_im}, s.phase); break;
    default: throw charkin::ConfigError("bad state kind tag");
  }
  return spec;
}

}  // namespace

struct chk_grid {
  charkin::GridPtr grid;
};
struct chk_field {
  charkin::CharField field;
};
struct chk_ham {
  charkin::PolyHamiltonian ham{1};
};

extern "C" {

const char* chk_version(void) {
  static std::string v = charkin::version_string();
  return v.c_str();
}

const char* chk_last_error(void) { return g_last_error.c_str(); }

void chk_set_threads(int32_t n) { charkin::set_thread_count(n); }

chk_status chk_grid_create(uint32_t dims, const uint32_t* points, const double* extent_lambda,
                           const double* extent_mu, double hbar, double omega, chk_grid** out) {
  return guarded([&] {
    if (!points || !extent_lambda || !extent_mu || !out)
      throw charkin::ConfigError("null argument");
    charkin::GridSpec spec;
    spec.dims = dims;
    spec.points.assign(points, points + dims);
    spec.extent_lambda.assign(extent_lambda, extent_lambda + dims);
    spec.extent_mu.assign(extent_mu, extent_mu + dims);
    spec.hbar = hbar;
    spec.omega = omega;
    *out = new chk_grid{charkin::PhaseGrid::create(spec)};
  });
}

void chk_grid_destroy(chk_grid* g) { delete g; }

chk_status chk_grid_info(const chk_grid* g, uint32_t* dims, uint32_t* points, double* hbar,
                         double* omega) {
  return guarded([&] {
    if (!g) throw charkin::ConfigError("null grid");
    if (dims) *dims = g->grid->dims();
    if (points)
      for (uint32_t d = 0; d < g->grid->dims(); ++d) points[d] = g->grid->points(d);
    if (hbar) *hbar = g->grid->hbar();
    if (omega) *omega = g->grid->omega();
  });
}

chk_status chk_field_from_state(const chk_grid* g, const chk_state_spec* spec, int32_t ordering,
                                uint32_t fock_n_max, chk_field** out) {
  return guarded([&] {
    if (!g || !spec || !out) throw charkin::ConfigError("null argument");
    charkin::Ordering ord = to_ordering(ordering);
    if (ord == charkin::Ordering::kClassical) {
      charkin::CharField sym = charkin::make_state_charfn(to_spec(*spec), g->grid,
                                                          charkin::Ordering::kSymmetric, fock_n_max);
      *out = new chk_field{charkin::reinterpret_as_classical(sym)};
    } else {
      *out = new chk_field{charkin::make_state_charfn(to_spec(*spec), g->grid, ord, fock_n_max)};
    }
  });
}

void chk_field_destroy(chk_field* f) { delete f; }

chk_status chk_field_ordering(const chk_field* f, int32_t* ordering) {
  return guarded([&] {
    if (!f || !ordering) throw charkin::ConfigError("null argument");
    *ordering = static_cast<int32_t>(f->field.ordering);
  });
}

chk_status chk_field_data(const chk_field* f, const double** interleaved, size_t* count) {
  return guarded([&] {
    if (!f || !interleaved || !count) throw charkin::ConfigError("null argument");
    *interleaved = reinterpret_cast<const double*>(f->field.data.data());
    *count = f->field.data.size();
  });
}

chk_status chk_field_convert_ordering(const chk_field* f, int32_t target, chk_field** out) {
  return guarded([&] {
    if (!f || !out) throw charkin::ConfigError("null argument");
    *out = new chk_field{charkin::convert_ordering(f->field, to_ordering(target))};
  });
}

chk_status chk_field_invariants(const chk_field* f, double* norm_defect, double* herm_defect,
                                double* bound_violation) {
  return guarded([&] {
    if (!f) throw charkin::ConfigError("null field");
    charkin::InvariantReport r = charkin::check_invariants(f->field);
    if (norm_defect) *norm_defect = r.norm_defect;
    if (herm_defect) *herm_defect = r.herm_defect;
    if (bound_violation) *bound_violation = r.bound_violation;
  });
}

chk_status chk_field_moment(const chk_field* f, uint32_t m, uint32_t n, double* re, double* im) {
  return guarded([&] {
    if (!f) throw charkin::ConfigError("null field");
    charkin::cplx v = charkin::moments_from_charfn(f->field, m, n);
    if (re) *re = v.real();
    if (im) *im = v.imag();
  });
}

chk_status chk_field_save(const chk_field* f, const char* path) {
  return guarded([&] {
    if (!f || !path) throw charkin::ConfigError("null argument");
    charkin::write_field_dump(path, f->field);
  });
}

chk_status chk_field_load(const char* path, chk_field** out) {
  return guarded([&] {
    if (!path || !out) throw charkin::ConfigError("null argument");
    *out = new chk_field{charkin::read_field_dump(path)};
  });
}

chk_status chk_ham_create(uint32_t dims, uint32_t n_terms, const uint32_t* dag,
                          const uint32_t* ann, const double* c_re, const double* c_im,
                          chk_ham** out) {
  return guarded([&] {
    if (!dag || !ann || !c_re || !c_im || !out) throw charkin::ConfigError("null argument");
    if (dims < 1 || dims > 2) throw charkin::ConfigError("dims must be 1 or 2");
    charkin::PolyHamiltonian h(dims);
    for (uint32_t t = 0; t < n_terms; ++t) {
      charkin::LadderTerm lt;
      for (uint32_t d = 0; d < dims; ++d) {
        lt.dag[d] = static_cast<uint8_t>(dag[t * dims + d]);
        lt.ann[d] = static_cast<uint8_t>(ann[t * dims + d]);
      }
      lt.c = {c_re[t], c_im[t]};
      h.op.add_term(lt);
    }
    if (h.degree() > charkin::kMaxHamiltonianDegree)
      throw charkin::ConfigError("hamiltonian degree overflow (max 6)");
    *out = new chk_ham{std::move(h)};
  });
}

void chk_ham_destroy(chk_ham* h) { delete h; }

namespace {

charkin::RhsOperator build_rhs(const chk_field& state, const chk_ham& h, int32_t method,
                               uint32_t grid_symbol_n_max) {
  charkin::RhsMethod m = to_method(method);
  const charkin::GridPtr& grid = state.field.grid;
  if (m == charkin::RhsMethod::kDistributional) {
    return charkin::RhsOperator::distributional(
        charkin::ham_distributional(h.ham, state.field.ordering, grid->hbar(), grid->omega()));
  }
  charkin::HamGridRep rep =
      charkin::ham_charfn_grid(h.ham, grid, state.field.ordering, grid_symbol_n_max);
  return m == charkin::RhsMethod::kQuadrature
             ? charkin::RhsOperator::quadrature(std::move(rep))
             : charkin::RhsOperator::star_product(std::move(rep));
}

}  // namespace

chk_status chk_rhs_eval(const chk_field* state, const chk_ham* h, int32_t method,
                        uint32_t grid_symbol_n_max, chk_field** out) {
  return guarded([&] {
    if (!state || !h || !out) throw charkin::ConfigError("null argument");
    charkin::RhsOperator rhs = build_rhs(*state, *h, method, grid_symbol_n_max);
    *out = new chk_field{rhs(state->field)};
  });
}

chk_status chk_evolve_field(const chk_field* state, const chk_ham* h, int32_t method,
                            uint32_t grid_symbol_n_max, double dt, double t_final,
                            uint32_t monitor_every, double monitor_tol, chk_field** out) {
  return guarded([&] {
    if (!state || !h || !out) throw charkin::ConfigError("null argument");
    charkin::RhsOperator rhs = build_rhs(*state, *h, method, grid_symbol_n_max);
    charkin::EvolveConfig cfg;
    cfg.dt = dt;
    cfg.t_final = t_final;
    cfg.monitor_every = monitor_every == 0 ? 1 : monitor_every;
    cfg.snapshot_every = 0xFFFFFFFFu;  // final state only
    cfg.norm_tol = cfg.herm_tol = cfg.bound_tol = monitor_tol > 0 ? monitor_tol : 1e-6;
    charkin::Trajectory traj = charkin::evolve(state->field, rhs, cfg);
    if (traj.aborted) throw charkin::NumericError(traj.abort_reason);
    *out = new chk_field{traj.entries.back().field};
  });
}

chk_status chk_run_evolve(const char* config_path, const char* out_dir) {
  return guarded([&] {
    if (!config_path) throw charkin::ConfigError("null config path");
    charkin::RunConfig cfg = charkin::load_run_config(config_path);
    charkin::run_evolve(cfg, out_dir ? out_dir : "");
  });
}

chk_status chk_run_compare(const char* dir_a, const char* dir_b, const char* out_csv) {
  return guarded([&] {
    if (!dir_a || !dir_b || !out_csv) throw charkin::ConfigError("null argument");
    charkin::run_compare(dir_a, dir_b, out_csv);
  });
}

chk_status chk_run_hbar_scan(const char* config_path, const char* out_csv) {
  return guarded([&] {
    if (!config_path || !out_csv) throw charkin::ConfigError("null argument");
    charkin::RunConfig cfg = charkin::load_run_config(config_path);
    charkin::run_hbar_scan(cfg, out_csv);
  });
}

chk_status chk_run_oracle_check(const char* config_path, const char* report_path) {
  return guarded([&] {
    if (!config_path) throw charkin::ConfigError("null config path");
    charkin::RunConfig cfg = charkin::load_run_config(config_path);
    charkin::run_oracle_check(cfg, report_path ? report_path : "");
  });
}

chk_status chk_run_convert(const char* in_path, const char* out_path, const char* format) {
  return guarded([&] {
    if (!in_path || !out_path) throw charkin::ConfigError("null argument");
    charkin::run_convert(in_path, out_path, format ? format : "");
  });
}

}  // extern "C"
