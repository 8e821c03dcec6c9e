#include "charkin/wigner.hpp"

#include <algorithm>
#include <cmath>

namespace charkin {

WignerField to_wigner(const CharField& c_symmetric) {
  if (c_symmetric.ordering != Ordering::kSymmetric)
    throw ConfigError("the Wigner view applies to symmetric-order fields");
  const PhaseGrid& g = *c_symmetric.grid;
  std::vector<cplx> f = fourier_to_phase(g, c_symmetric.data);
  WignerField w(c_symmetric.grid);
  double scale = 0.0;
  for (const cplx& z : f) scale = std::max(scale, std::abs(z));
  double residue = 0.0;
  KahanSum mass;
  for (std::size_t i = 0; i < f.size(); ++i) {
    w.data[i] = f[i].real();
    residue = std::max(residue, std::abs(f[i].imag()));
    mass.add(f[i].real());
  }
  w.imag_residue = residue;
  w.mass = mass.value() * g.cell_x_p();
  if (scale > 0.0 && residue > 1e-6 * scale)
    throw NumericError("Wigner transform left a large imaginary residue (state not Hermitian?)");
  return w;
}

CharField from_wigner(const WignerField& w) {
  std::vector<cplx> f(w.data.begin(), w.data.end());
  CharField c(w.grid, Ordering::kSymmetric);
  c.data = fourier_from_phase(*w.grid, f);
  return c;
}

double wigner_mass(const WignerField& w) {
  KahanSum s;
  for (double v : w.data) s.add(v);
  return s.value() * w.grid->cell_x_p();
}

namespace {

double b_coefficient(double hbar, int m) {
  double b = 1.0;
  for (int i = 2; i <= 2 * m + 1; ++i) b /= i;       // 1/(2m+1)!
  b *= std::pow(0.5 * hbar, 2 * m);
  return (m % 2) ? -b : b;
}

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<cplx> complexify(const std::vector<double>& v) {
  return std::vector<cplx>(v.begin(), v.end());
}

}  // namespace

WignerField moyal_rhs(const WignerField& w, const PhasePoly& h_weyl, int m_max) {
  const PhaseGrid& g = *w.grid;
  if (g.dims() != 1) throw ConfigError("the Wigner series path is single-mode");
  if (m_max < 0) throw ConfigError("series truncation must be non-negative");
  uint32_t gpts = g.points(0);
  if (static_cast<uint32_t>(2 * m_max + 1) > gpts / 2)
    throw ConfigError("derivative order too high for grid resolution");
  double hbar = g.hbar();

  std::vector<cplx> wc = complexify(w.data);
  WignerField out(w.grid);
  std::vector<double> acc(g.size(), 0.0);

  for (int m = 0; m <= m_max; ++m) {
    double bm = b_coefficient(hbar, m);
    int n = 2 * m + 1;
    for (int k = 0; k <= n; ++k) {
      // (∂^k_x ∂^{n−k}_p W)·(∂^{n−k}_x ∂^k_p H̃), sign (−1)^k; overall sign
      // fixed against the von Neumann oracle (m = 0 term is {H,W}).
      PhasePoly hd = h_weyl.derivative_1d(n - k, k);
      if (hd.terms().empty()) continue;
      std::vector<int> orders = {k, n - k};
      std::vector<cplx> wd = spectral_derivative_xp(g, wc, orders);
      double sign = (k % 2) ? -bm : bm;
      sign *= binom(n, k);
      for (std::size_t i = 0; i < acc.size(); ++i) {
        double x, p;
        g.node_xp(i, &x, &p);
        acc[i] += sign * (wd[i].real() * hd.eval(&x, &p).real());
      }
    }
  }
  out.data = std::move(acc);
  return out;
}

WignerField kinetic_potential_rhs(const WignerField& w, const std::vector<double>& v_coeffs) {
  const PhaseGrid& g = *w.grid;
  if (g.dims() != 1) throw ConfigError("the Wigner series path is single-mode");
  int deg = static_cast<int>(v_coeffs.size()) - 1;
  while (deg >= 0 && v_coeffs[deg] == 0.0) --deg;
  if (deg > kMaxHamiltonianDegree) throw ConfigError("potential degree overflow (max 6)");
  double hbar = g.hbar();

  PhasePoly v(1);
  for (int k = 0; k <= deg; ++k) v.add_monomial_1d(k, 0, v_coeffs[k]);

  std::vector<cplx> wc = complexify(w.data);
  std::vector<cplx> wx = spectral_derivative_xp(g, wc, {1, 0});
  WignerField out(w.grid);

  // Drift: dV/dx·∂_p W − p·∂_x W.
  PhasePoly v1 = v.derivative_1d(1, 0);
  std::vector<cplx> wp = spectral_derivative_xp(g, wc, {0, 1});
  for (std::size_t i = 0; i < out.data.size(); ++i) {
    double x, p;
    g.node_xp(i, &x, &p);
    out.data[i] = v1.eval(&x, &p).real() * wp[i].real() - p * wx[i].real();
  }

  // b_m-weighted corrections, m ≥ 1, terminating with the potential degree.
  for (int m = 1; 2 * m + 1 <= deg; ++m) {
    PhasePoly vd = v.derivative_1d(2 * m + 1, 0);
    if (vd.terms().empty()) continue;
    double bm = b_coefficient(hbar, m);
    std::vector<cplx> wd = spectral_derivative_xp(g, wc, {0, 2 * m + 1});
    for (std::size_t i = 0; i < out.data.size(); ++i) {
      double x, p;
      g.node_xp(i, &x, &p);
      out.data[i] += bm * vd.eval(&x, &p).real() * wd[i].real();
    }
  }
  return out;
}

}  // namespace charkin
