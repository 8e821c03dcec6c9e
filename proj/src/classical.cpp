#include "charkin/classical.hpp"

#include <cmath>

namespace charkin {

CharField classical_rhs(const CharField& c, const ClassicalHamiltonian& h) {
  if (c.ordering != Ordering::kClassical)
    throw ConfigError("classical_rhs expects a classical field");
  return rhs_distributional(c, h.distributional());
}

std::vector<cplx> liouville_pde_rhs(const PhaseGrid& grid, const std::vector<cplx>& p_field,
                                    const PhasePoly& h) {
  if (p_field.size() != grid.size()) throw ConfigError("field size does not match grid");
  uint32_t dims = grid.dims();
  if (h.dims() != dims) throw ConfigError("Hamiltonian dimension mismatch");

  std::vector<cplx> out(grid.size(), cplx{});
  for (uint32_t d = 0; d < dims; ++d) {
    std::vector<int> ox(grid.axis_count(), 0), op(grid.axis_count(), 0);
    ox[d] = 1;
    op[dims + d] = 1;
    std::vector<cplx> dPx = spectral_derivative_xp(grid, p_field, ox);
    std::vector<cplx> dPp = spectral_derivative_xp(grid, p_field, op);

    std::array<uint8_t, 2> xo{}, po{};
    xo[d] = 1;
    po[d] = 1;
    PhasePoly hx = h.derivative(xo, {});
    PhasePoly hp = h.derivative({}, po);

    for (std::size_t i = 0; i < out.size(); ++i) {
      double x[2], p[2];
      grid.node_xp(i, x, p);
      out[i] += hx.eval(x, p) * dPp[i] - hp.eval(x, p) * dPx[i];
    }
  }
  return out;
}

CharField coherent_symmetric_closed_form(const GridPtr& grid, cplx alpha) {
  return coherent_symmetric_rotated(grid, alpha, 0.0);
}

CharField coherent_symmetric_rotated(const GridPtr& grid, cplx alpha, double t) {
  if (grid->dims() != 1) throw ConfigError("closed-form reference fields are single-mode");
  cplx a = alpha * std::exp(cplx(0.0, -grid->omega() * t));
  CharField f(grid, Ordering::kSymmetric);
  for (std::size_t i = 0; i < f.data.size(); ++i) {
    cplx xi;
    double xi2 = grid->xi(i, &xi);
    cplx iu(0.0, 1.0);
    f.data[i] = std::exp(-0.5 * xi2 + iu * std::conj(xi) * std::conj(a) + iu * xi * a);
  }
  return f;
}

CharField gaussian_sheared(const GridPtr& grid, double a, double b, double t) {
  if (grid->dims() != 1) throw ConfigError("closed-form reference fields are single-mode");
  CharField f(grid, Ordering::kClassical);
  for (std::size_t i = 0; i < f.data.size(); ++i) {
    double lam[1], mu[1];
    grid->node(i, lam, mu);
    double m = mu[0] + lam[0] * t;
    f.data[i] = std::exp(-0.5 * (a * lam[0] * lam[0] + b * m * m));
  }
  return f;
}

}  // namespace charkin
