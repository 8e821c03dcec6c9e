#include "charkin/fock.hpp"

#include <cmath>

namespace charkin {

void StateSpec::validate() const {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(alpha.real()) || !finite(alpha.imag()) || !finite(nbar) || !finite(phase))
    throw ConfigError("state parameters must be finite");
  if (kind == Kind::kThermal && nbar < 0.0) throw ConfigError("thermal nbar must be >= 0");
}

bool StateSpec::p_representation_regular() const {
  switch (kind) {
    case Kind::kCoherent:
    case Kind::kThermal: return true;
    case Kind::kFock: return n == 0;
    case Kind::kCat: return false;
  }
  return false;
}

double FockDensity::trace_defect() const { return std::abs(rho.trace() - cplx(1.0, 0.0)); }

double FockDensity::hermiticity_defect() const {
  return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

double FockDensity::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es((rho + rho.adjoint()) / 2.0);
  return es.eigenvalues().minCoeff();
}

double FockDensity::purity() const { return (rho * rho).trace().real(); }

FockOps build_ops(uint32_t n_max, double hbar, double omega) {
  if (n_max < 2) throw ConfigError("fock truncation must be at least 2");
  FockOps ops;
  ops.n_max = n_max;
  ops.a = Matrix::Zero(n_max, n_max);
  for (uint32_t n = 1; n < n_max; ++n) ops.a(n - 1, n) = std::sqrt(static_cast<double>(n));
  ops.adag = ops.a.adjoint();
  double s = std::sqrt(hbar / (2.0 * omega));
  ops.x = s * (ops.adag + ops.a);
  ops.p = cplx(0.0, 1.0) * std::sqrt(hbar * omega / 2.0) * (ops.adag - ops.a);
  return ops;
}

Matrix fock_matrix(const LadderPoly& op, uint32_t n_max) {
  if (op.modes() != 1) throw ConfigError("fock matrices are single-mode");
  Matrix a = Matrix::Zero(n_max, n_max);
  for (uint32_t n = 1; n < n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  Matrix adag = a.adjoint();
  Matrix out = Matrix::Zero(n_max, n_max);
  for (const auto& t : op.terms()) {
    Matrix m = Matrix::Identity(n_max, n_max);
    for (int q = 0; q < t.dag[0]; ++q) m = m * adag;
    for (int q = 0; q < t.ann[0]; ++q) m = m * a;
    out += t.c * m;
  }
  return out;
}

Vector fock_vector(const StateSpec& spec, uint32_t n_max) {
  spec.validate();
  Vector v = Vector::Zero(n_max);
  switch (spec.kind) {
    case StateSpec::Kind::kFock:
      if (spec.n >= n_max) throw ConfigError("fock level exceeds truncation");
      v(spec.n) = 1.0;
      return v;
    case StateSpec::Kind::kCoherent: {
      cplx c = 1.0;  // amplitudes up to the common e^{−|α|²/2}, normalized below
      for (uint32_t n = 0; n < n_max; ++n) {
        if (n > 0) c *= spec.alpha / std::sqrt(static_cast<double>(n));
        v(n) = c;
      }
      break;
    }
    case StateSpec::Kind::kCat: {
      cplx cp = 1.0, cm = 1.0, ph = std::exp(cplx(0.0, spec.phase));
      for (uint32_t n = 0; n < n_max; ++n) {
        if (n > 0) {
          cp *= spec.alpha / std::sqrt(static_cast<double>(n));
          cm *= -spec.alpha / std::sqrt(static_cast<double>(n));
        }
        v(n) = cp + ph * cm;
      }
      break;
    }
    case StateSpec::Kind::kThermal:
      throw ConfigError("thermal states are mixed; no state vector");
  }
  double nrm = v.norm();
  if (nrm == 0.0) throw ConfigError("state vector vanishes at this truncation");
  return v / nrm;
}

FockDensity fock_density(const StateSpec& spec, uint32_t n_max) {
  spec.validate();
  if (n_max < 2) throw ConfigError("fock truncation must be at least 2");
  FockDensity d;
  d.n_max = n_max;
  if (spec.kind == StateSpec::Kind::kThermal) {
    d.rho = Matrix::Zero(n_max, n_max);
    double q = spec.nbar / (1.0 + spec.nbar);
    double w = 1.0, sum = 0.0;
    for (uint32_t n = 0; n < n_max; ++n) {
      d.rho(n, n) = w;
      sum += w;
      w *= q;
    }
    d.rho /= sum;
    return d;
  }
  Vector v = fock_vector(spec, n_max);
  d.rho = v * v.adjoint();
  return d;
}

FockDensity von_neumann_evolve(const FockDensity& rho0, const Matrix& hamiltonian, double t,
                               double hbar) {
  double herm = (hamiltonian - hamiltonian.adjoint()).cwiseAbs().maxCoeff();
  double scale = std::max(1.0, hamiltonian.cwiseAbs().maxCoeff());
  if (herm > 1e-10 * scale) throw ConfigError("von Neumann evolution requires a Hermitian Hamiltonian");
  Eigen::SelfAdjointEigenSolver<Matrix> es((hamiltonian + hamiltonian.adjoint()) / 2.0);
  const auto& e = es.eigenvalues();
  const Matrix& v = es.eigenvectors();
  Vector phases(e.size());
  for (Eigen::Index i = 0; i < e.size(); ++i) phases(i) = std::exp(cplx(0.0, -e(i) * t / hbar));
  Matrix u = v * phases.asDiagonal() * v.adjoint();
  FockDensity out;
  out.n_max = rho0.n_max;
  out.rho = u * rho0.rho * u.adjoint();
  return out;
}

namespace {

/// Entries of e^{iξa}: upper triangular, A(r, r+q) = (iξ)^q √((r+q)…(r+1))/q!,
/// built by stable running products.
Matrix exp_i_xi_a(cplx xi, uint32_t n) {
  Matrix m = Matrix::Zero(n, n);
  cplx w = cplx(0.0, 1.0) * xi;
  for (uint32_t r = 0; r < n; ++r) {
    cplx acc = 1.0;
    m(r, r) = acc;
    for (uint32_t q = 1; r + q < n; ++q) {
      acc *= w * std::sqrt(static_cast<double>(r + q)) / static_cast<double>(q);
      m(r, r + q) = acc;
    }
  }
  return m;
}

}  // namespace

cplx ordered_exp_trace(const Matrix& m, cplx xi, uint32_t n) {
  // Tr[M·B·A] = Tr[B·(A·M)] with A = e^{iξa}, B = e^{iξ̄a†}.
  Matrix a = exp_i_xi_a(xi, n);
  Matrix b = exp_i_xi_a(std::conj(xi), n).transpose();
  Matrix am = a * m;
  cplx t = 0.0;
  for (uint32_t r = 0; r < n; ++r) t += b.row(r).transpose().cwiseProduct(am.col(r)).sum();
  return t;
}

CharField density_to_charfn(const FockDensity& rho, const GridPtr& grid, Ordering ordering) {
  if (!is_quantum(ordering)) throw ConfigError("oracle fields carry a quantum ordering");
  if (grid->dims() != 1) throw ConfigError("the Fock oracle is single-mode (dims = 1)");
  CharField field(grid, ordering);
  double sigma = ordering == Ordering::kNormal ? 0.0 : (ordering == Ordering::kSymmetric ? 0.5 : 1.0);
  uint32_t n = rho.n_max;
  parallel_for_each(grid->size(), [&](std::size_t i) {
    cplx xi;
    double xi2 = grid->xi(i, &xi);
    field.data[i] = ordered_exp_trace(rho.rho, xi, n) * std::exp(-sigma * xi2);
  });
  field.truncation_warning = grid->max_xi_norm2() > static_cast<double>(rho.n_max) / 4.0;
  return field;
}

FockDensity charfn_to_density(const CharField& c_normal, uint32_t n_max) {
  if (c_normal.ordering != Ordering::kNormal)
    throw ConfigError("charfn_to_density expects a normal-ordered field");
  const PhaseGrid& g = *c_normal.grid;
  if (g.dims() != 1) throw ConfigError("the Fock oracle is single-mode (dims = 1)");
  std::vector<cplx> f = fourier_to_phase(g, c_normal.data);

  double hbar = g.hbar(), omega = g.omega();
  double w = g.cell_x_p();
  FockDensity out;
  out.n_max = n_max;
  out.rho = Matrix::Zero(n_max, n_max);
  Vector coh(n_max);
  for (std::size_t i = 0; i < f.size(); ++i) {
    double x, p;
    g.node_xp(i, &x, &p);
    cplx alpha = cplx(omega * x, p) / std::sqrt(2.0 * hbar * omega);
    cplx c = std::exp(-0.5 * std::norm(alpha));
    for (uint32_t m = 0; m < n_max; ++m) {
      if (m > 0) c *= alpha / std::sqrt(static_cast<double>(m));
      coh(m) = c;
    }
    out.rho.noalias() += (w * f[i]) * (coh * coh.adjoint());
  }
  return out;
}

double fidelity_against_pure(const FockDensity& rho, const Vector& psi) {
  return (psi.adjoint() * rho.rho * psi)(0).real();
}

CharField oracle_rhs_fd(const FockDensity& rho0, const Matrix& hamiltonian, const GridPtr& grid,
                        Ordering ordering, double dt) {
  FockDensity plus = von_neumann_evolve(rho0, hamiltonian, dt, grid->hbar());
  FockDensity minus = von_neumann_evolve(rho0, hamiltonian, -dt, grid->hbar());
  CharField cp = density_to_charfn(plus, grid, ordering);
  CharField cm = density_to_charfn(minus, grid, ordering);
  CharField out(grid, ordering);
  for (std::size_t i = 0; i < out.data.size(); ++i)
    out.data[i] = (cp.data[i] - cm.data[i]) / (2.0 * dt);
  out.truncation_warning = cp.truncation_warning;
  return out;
}

}  // namespace charkin
