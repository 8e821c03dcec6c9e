#include "charkin/evolution.hpp"

#include <cmath>

namespace charkin {

RhsMethod rhs_method_from_name(const std::string& name) {
  if (name == "quadrature") return RhsMethod::kQuadrature;
  if (name == "distributional") return RhsMethod::kDistributional;
  if (name == "star_product" || name == "star-product") return RhsMethod::kStarProduct;
  throw ConfigError("unknown rhs method: " + name);
}

const char* rhs_method_name(RhsMethod m) {
  switch (m) {
    case RhsMethod::kQuadrature: return "quadrature";
    case RhsMethod::kDistributional: return "distributional";
    case RhsMethod::kStarProduct: return "star_product";
  }
  return "?";
}

namespace {

void check_grid_match(const CharField& c, const GridPtr& hgrid) {
  if (!hgrid || !c.grid->same_layout(*hgrid)) throw ConfigError("field and Hamiltonian grids differ");
}

/// H(λ−λ', μ−μ') lookup: per-axis index offset (i−j+G/2), zero outside.
bool diff_index(const PhaseGrid& g, const std::size_t* i, const std::size_t* j, std::size_t& out) {
  std::size_t flat = 0, stride = 1;
  // Build row-major manually in reverse axis order.
  for (std::size_t a = g.axis_count(); a-- > 0;) {
    std::size_t n = g.axis_size(a);
    std::ptrdiff_t d = static_cast<std::ptrdiff_t>(i[a]) - static_cast<std::ptrdiff_t>(j[a]) +
                       static_cast<std::ptrdiff_t>(n / 2);
    if (d < 0 || d >= static_cast<std::ptrdiff_t>(n)) return false;
    flat += static_cast<std::size_t>(d) * stride;
    stride *= n;
  }
  out = flat;
  return true;
}

}  // namespace

CharField rhs_quadrature(const CharField& c, const HamGridRep& h) {
  check_grid_match(c, h.grid);
  if (c.ordering != h.ordering)
    throw ConfigError("field and Hamiltonian orderings differ (convert explicitly)");
  KernelKind kind = kernel_kind_for(c.ordering);
  const PhaseGrid& g = *c.grid;
  double hbar = g.hbar(), omega = g.omega();
  double cell = g.cell_lambda_mu();
  uint32_t dims = g.dims();

  CharField out(c.grid, c.ordering);
  parallel_for_each(g.size(), [&](std::size_t i) {
    std::size_t iv[4], jv[4];
    g.unflatten(i, iv);
    double lam[2], mu[2], lamp[2], mup[2];
    g.node(i, lam, mu);
    KahanSumCplx acc;
    for (std::size_t j = 0; j < g.size(); ++j) {
      g.unflatten(j, jv);
      std::size_t hidx;
      if (!diff_index(g, iv, jv, hidx)) continue;
      const cplx& hval = h.data[hidx];
      const cplx& cval = c.data[j];
      if (hval == cplx{} || cval == cplx{}) continue;
      g.node(j, lamp, mup);
      // EOM kernel = −(printed closed form): von Neumann consistency.
      double k = -eval_kernel(kind, hbar, omega, dims, lam, mu, lamp, mup);
      if (k == 0.0) continue;
      acc.add(k * hval * cval);
    }
    out.data[i] = acc.value() * cell;
  });
  return out;
}

CharField rhs_star_product(const CharField& c, const HamGridRep& h) {
  check_grid_match(c, h.grid);
  if (c.ordering != Ordering::kNormal || h.ordering != Ordering::kNormal)
    throw ConfigError("star-product path requires normal ordering");
  const PhaseGrid& g = *c.grid;
  double hbar = g.hbar(), omega = g.omega();
  double cell = g.cell_lambda_mu();
  uint32_t dims = g.dims();
  cplx pre = cplx(0.0, 1.0) / hbar * kStarProductKappa * cell;

  CharField out(c.grid, c.ordering);
  parallel_for_each(g.size(), [&](std::size_t i) {
    std::size_t iv[4], jv[4];
    g.unflatten(i, iv);
    double lam[2], mu[2], lamp[2], mup[2];
    g.node(i, lam, mu);
    KahanSumCplx acc;
    for (std::size_t j = 0; j < g.size(); ++j) {
      g.unflatten(j, jv);
      std::size_t hidx;
      if (!diff_index(g, iv, jv, hidx)) continue;
      const cplx& hval = h.data[hidx];
      const cplx& cval = c.data[j];
      if (hval == cplx{} || cval == cplx{}) continue;
      g.node(j, lamp, mup);
      cplx zp{}, zm{};
      for (uint32_t d = 0; d < dims; ++d) {
        cplx du(lam[d] - lamp[d], -omega * (mu[d] - mup[d]));
        cplx dv = std::conj(du);
        zp += cplx(lamp[d], omega * mup[d]) * du;
        zm += cplx(lamp[d], -omega * mup[d]) * dv;
      }
      double f = hbar / (2.0 * omega);
      cplx w = std::exp(f * zp) - std::exp(f * zm);
      acc.add(w * hval * cval);
    }
    out.data[i] = pre * acc.value();
  });
  return out;
}

CharField rhs_distributional(const CharField& c, const DistHam& h) {
  const PhaseGrid& g = *c.grid;
  if (h.dims != g.dims()) throw ConfigError("distributional symbol dimension mismatch");
  if (c.ordering != h.ordering)
    throw ConfigError("field and Hamiltonian orderings differ (convert explicitly)");
  if (h.max_order > kMaxHamiltonianDegree) throw ConfigError("hamiltonian degree overflow (max 6)");
  KernelKind kind = kernel_kind_for(c.ordering);
  int degree = h.max_order;
  auto space = JetSpace::get(static_cast<int>(g.axis_count()), degree);

  // Spectral mixed derivatives of C for every monomial in the jet space;
  // the jet of C(λ−u, μ−v) has coefficient (−1)^{|e|} ∂^e C / e!.
  int n_mono = space->size();
  std::vector<std::vector<cplx>> derivs(n_mono);
  std::vector<double> jet_scale(n_mono);
  for (int q = 0; q < n_mono; ++q) {
    const JetExp& e = space->exponent(q);
    std::vector<int> orders(g.axis_count());
    int total = 0;
    for (std::size_t a = 0; a < orders.size(); ++a) {
      orders[a] = e[a];
      total += e[a];
    }
    derivs[q] = total == 0 ? c.data : spectral_derivative(g, c.data, orders);
    jet_scale[q] = ((total % 2) ? -1.0 : 1.0) / space->factorial(q);
  }

  double hbar = g.hbar(), omega = g.omega();
  CharField out(c.grid, c.ordering);
  parallel_for_each(g.size(), [&](std::size_t i) {
    double lam[2], mu[2];
    g.node(i, lam, mu);
    Jet kj = eom_kernel_jet(kind, hbar, omega, space, g.dims(), lam, mu);
    Jet cj(space);
    for (int q = 0; q < n_mono; ++q) cj[q] = derivs[q][i] * jet_scale[q];
    Jet prod = kj * cj;
    cplx val{};
    for (const auto& term : h.terms) {
      int total = 0;
      for (uint8_t q : term.exp) total += q;
      double sign = (total % 2) ? -1.0 : 1.0;
      val += term.c * sign * prod.partial(term.exp);
    }
    out.data[i] = val;
  });
  return out;
}

RhsOperator RhsOperator::quadrature(HamGridRep h) {
  RhsOperator op;
  op.method_ = RhsMethod::kQuadrature;
  op.grid_rep_ = std::move(h);
  return op;
}

RhsOperator RhsOperator::distributional(DistHam h) {
  RhsOperator op;
  op.method_ = RhsMethod::kDistributional;
  op.dist_ = std::move(h);
  return op;
}

RhsOperator RhsOperator::star_product(HamGridRep h) {
  RhsOperator op;
  op.method_ = RhsMethod::kStarProduct;
  op.grid_rep_ = std::move(h);
  return op;
}

CharField RhsOperator::operator()(const CharField& c) const {
  switch (method_) {
    case RhsMethod::kQuadrature: return rhs_quadrature(c, grid_rep_);
    case RhsMethod::kDistributional: return rhs_distributional(c, dist_);
    case RhsMethod::kStarProduct: return rhs_star_product(c, grid_rep_);
  }
  throw ConfigError("bad rhs method");
}

void EvolveConfig::validate() const {
  if (dt < 0.0) throw ConfigError("dt must be non-negative");
  if (t_final < 0.0) throw ConfigError("t_final must be non-negative");
  if (dt == 0.0 && n_steps_override == 0 && t_final > 0.0)
    throw ConfigError("dt = 0 requires an explicit step count");
  if (snapshot_every == 0 || monitor_every == 0)
    throw ConfigError("snapshot/monitor cadence must be positive");
}

CharField step_rk4(const CharField& c, const RhsOperator& rhs, double dt) {
  auto axpy = [](const CharField& base, double w, const CharField& dir) {
    CharField r = base;
    for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] += w * dir.data[i];
    return r;
  };
  CharField k1 = rhs(c);
  CharField k2 = rhs(axpy(c, dt / 2.0, k1));
  CharField k3 = rhs(axpy(c, dt / 2.0, k2));
  CharField k4 = rhs(axpy(c, dt, k3));
  CharField out = c;
  for (std::size_t i = 0; i < out.data.size(); ++i)
    out.data[i] += (dt / 6.0) * (k1.data[i] + 2.0 * k2.data[i] + 2.0 * k3.data[i] + k4.data[i]);
  return out;
}

Trajectory evolve(const CharField& c0, const RhsOperator& rhs, const EvolveConfig& cfg) {
  cfg.validate();
  uint64_t n_steps = cfg.dt > 0.0
                         ? static_cast<uint64_t>(std::llround(cfg.t_final / cfg.dt))
                         : cfg.n_steps_override;

  Trajectory traj;
  CharField c = c0;
  bool classical = !is_quantum(c.ordering);

  auto monitor_of = [&](const CharField& f) {
    if (classical) return InvariantReport{};
    return check_invariants(f);
  };
  auto breach = [&](const InvariantReport& r, std::string& why) {
    if (classical) return false;
    if (r.norm_defect > cfg.norm_tol) { why = "normalization drift exceeded tolerance"; return true; }
    if (r.herm_defect > cfg.herm_tol) { why = "hermiticity drift exceeded tolerance"; return true; }
    if (r.bound_violation > cfg.bound_tol) { why = "ordering bound violated"; return true; }
    return false;
  };

  InvariantReport rep = monitor_of(c);
  traj.entries.push_back({0.0, c, rep});

  for (uint64_t step = 1; step <= n_steps; ++step) {
    c = step_rk4(c, rhs, cfg.dt);
    double t = cfg.dt * static_cast<double>(step);
    bool monitor_now = (step % cfg.monitor_every == 0) || step == n_steps;
    bool snapshot_now = (step % cfg.snapshot_every == 0) || step == n_steps;
    if (!monitor_now && !snapshot_now) continue;
    rep = monitor_of(c);
    std::string why;
    if (breach(rep, why)) {
      traj.aborted = true;
      traj.abort_reason = why + " at t = " + std::to_string(t);
      traj.diagnostic = c;
      return traj;
    }
    if (snapshot_now) traj.entries.push_back({t, c, rep});
  }
  return traj;
}

double suggest_dt(const CharField& c0, const RhsOperator& rhs) {
  CharField r = rhs(c0);
  double nc = std::sqrt(sum_abs2(c0.data));
  double nr = std::sqrt(sum_abs2(r.data));
  if (nr == 0.0) return 0.1;
  return 0.1 * nc / nr;
}

double calibrate_star_kappa(const CharField& c, const HamGridRep& h) {
  CharField star = rhs_star_product(c, h);
  CharField kernel = rhs_quadrature(c, h);
  // Least-squares scalar fit star·κ ≈ kernel (κ frozen at kStarProductKappa = 1).
  KahanSumCplx num;
  KahanSum den;
  for (std::size_t i = 0; i < star.data.size(); ++i) {
    num.add(std::conj(star.data[i]) * kernel.data[i]);
    den.add(std::norm(star.data[i]));
  }
  if (den.value() == 0.0) throw NumericError("star-product calibration on a null field");
  return (num.value() / den.value()).real() * kStarProductKappa;
}

}  // namespace charkin
