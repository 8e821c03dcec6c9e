#include "charkin/states.hpp"

#include <algorithm>
#include <cmath>

namespace charkin {

namespace {

double ordering_sigma(Ordering o) {
  switch (o) {
    case Ordering::kNormal: return 0.0;
    case Ordering::kSymmetric: return 0.5;
    case Ordering::kAntinormal: return 1.0;
    default: throw ConfigError("classical fields do not take part in ordering conversion");
  }
}

}  // namespace

InvariantReport check_invariants(const CharField& c) {
  if (!is_quantum(c.ordering)) throw ConfigError("invariant report applies to quantum orderings");
  const PhaseGrid& g = *c.grid;
  InvariantReport r;
  r.norm_defect = std::abs(c.origin_value() - cplx(1.0, 0.0));
  double sigma = ordering_sigma(c.ordering);
  for (std::size_t i = 0; i < c.data.size(); ++i) {
    std::size_t j = g.reflected_index(i);
    r.herm_defect = std::max(r.herm_defect, std::abs(c.data[j] - std::conj(c.data[i])));
    // |C| ≤ e^{(1/2 − σ)|ξ|²} per ordering (1/2, 0... exponents 1/2−σ ∈ {1/2, 0, −1/2}).
    double bound = std::exp((0.5 - sigma) * g.xi_norm2(i));
    r.bound_violation = std::max(r.bound_violation, std::abs(c.data[i]) - bound);
  }
  r.bound_violation = std::max(r.bound_violation, 0.0);
  return r;
}

CharField convert_ordering(const CharField& c, Ordering target) {
  double from = ordering_sigma(c.ordering);
  double to = ordering_sigma(target);
  CharField out(c.grid, target);
  out.truncation_warning = c.truncation_warning;
  const PhaseGrid& g = *c.grid;
  for (std::size_t i = 0; i < c.data.size(); ++i)
    out.data[i] = c.data[i] * std::exp((from - to) * g.xi_norm2(i));
  return out;
}

CharField make_state_charfn(const StateSpec& spec, const GridPtr& grid, Ordering ordering,
                            uint32_t n_max) {
  FockDensity rho = fock_density(spec, n_max);
  return density_to_charfn(rho, grid, ordering);
}

namespace {

/// 1-D central stencil of derivative order d, 4th-order accurate: weights on
/// nodes −m..m (times h^−d), solved from the moment conditions.
std::vector<double> central_stencil(int d) {
  int m = (d + 1) / 2 + 1;
  int n = 2 * m + 1;
  Eigen::MatrixXd a(n, n);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  for (int q = 0; q < n; ++q) {
    double fact = 1.0;
    for (int i = 2; i <= q; ++i) fact *= i;
    for (int j = -m; j <= m; ++j) a(q, j + m) = std::pow(static_cast<double>(j), q) / fact;
    if (q == d) b(q) = 1.0;
  }
  Eigen::VectorXd w = a.fullPivLu().solve(b);
  return {w.data(), w.data() + n};
}

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

cplx moments_from_charfn(const CharField& c, uint32_t m, uint32_t n) {
  if (c.ordering != Ordering::kNormal)
    throw ConfigError("moments require a normal-ordered field (convert explicitly)");
  if (m + n > 4) throw ConfigError("moment order m+n must be at most 4");
  const PhaseGrid& g = *c.grid;
  if (g.dims() != 1) throw ConfigError("moments are single-mode");
  if (g.points(0) < 8) throw ConfigError("grid too small for moment stencils");

  // ∂^a_λ ∂^b_μ C at the origin for all a+b ≤ m+n, by tensor-product stencils.
  int dmax = static_cast<int>(m + n);
  std::size_t g0 = g.points(0) / 2;
  std::vector<std::vector<double>> stencil(dmax + 1);
  for (int d = 0; d <= dmax; ++d) stencil[d] = central_stencil(d);

  auto partial = [&](int a, int b) {
    const auto& wa = stencil[a];
    const auto& wb = stencil[b];
    int ma = (static_cast<int>(wa.size()) - 1) / 2;
    int mb = (static_cast<int>(wb.size()) - 1) / 2;
    KahanSumCplx s;
    for (int j = -ma; j <= ma; ++j) {
      for (int k = -mb; k <= mb; ++k) {
        if (wa[j + ma] == 0.0 || wb[k + mb] == 0.0) continue;
        std::size_t idx[2] = {g0 + j, g0 + k};
        s.add(wa[j + ma] * wb[k + mb] * c.data[g.flatten(idx)]);
      }
    }
    return s.value() / (std::pow(g.delta_lambda(0), a) * std::pow(g.delta_mu(0), b));
  };

  // ⟨a†^m a^n⟩ = [−i/(2s)]^{m+n} (∂_λ − (i/ω)∂_μ)^m (∂_λ + (i/ω)∂_μ)^n C|₀
  double s0 = std::sqrt(g.hbar() / (2.0 * g.omega()));
  cplx pre = std::pow(cplx(0.0, -1.0) / (2.0 * s0), static_cast<double>(m + n));
  cplx acc = 0.0;
  for (uint32_t r = 0; r <= m; ++r) {
    for (uint32_t t = 0; t <= n; ++t) {
      cplx coef = binom(m, r) * binom(n, t) *
                  std::pow(cplx(0.0, -1.0 / g.omega()), static_cast<double>(m - r)) *
                  std::pow(cplx(0.0, 1.0 / g.omega()), static_cast<double>(n - t));
      acc += coef * partial(static_cast<int>(r + t), static_cast<int>((m - r) + (n - t)));
    }
  }
  return pre * acc;
}

CharField reinterpret_as_classical(const CharField& c_symmetric) {
  if (c_symmetric.ordering != Ordering::kSymmetric)
    throw ConfigError("classical phase-space data is seeded from the symmetric ordering");
  CharField out = c_symmetric;
  out.ordering = Ordering::kClassical;
  return out;
}

}  // namespace charkin
