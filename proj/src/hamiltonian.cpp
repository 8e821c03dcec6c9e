#include "charkin/hamiltonian.hpp"

#include <algorithm>
#include <cmath>

#include "charkin/fock.hpp"

namespace charkin {

void DistHam::add(const JetExp& e, cplx c) {
  if (c == cplx{}) return;
  for (auto& t : terms) {
    if (t.exp == e) {
      t.c += c;
      return;
    }
  }
  terms.push_back({e, c});
  int order = 0;
  for (uint8_t q : e) order += q;
  max_order = std::max(max_order, order);
}

namespace {

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Expands Π_d ∂_{(iξ̄_d)}^{j_d} ∂_{(iξ_d)}^{k_d} into the (∂_u, ∂_v) basis:
///   ∂_{(iξ̄)} = −i/(2s)·(∂_u − (i/ω)∂_v),  ∂_{(iξ)} = −i/(2s)·(∂_u + (i/ω)∂_v).
void expand_term(DistHam& out, uint32_t dims, const LadderTerm& term, double hbar, double omega) {
  double s = std::sqrt(hbar / (2.0 * omega));
  struct Partial {
    JetExp e{};
    cplx c;
  };
  std::vector<Partial> acc{{JetExp{}, term.c}};
  for (uint32_t d = 0; d < dims; ++d) {
    int j = term.dag[d], k = term.ann[d];
    cplx pre = std::pow(cplx(0.0, -1.0) / (2.0 * s), j + k);
    std::vector<Partial> next;
    for (const auto& pt : acc) {
      for (int r = 0; r <= j; ++r) {
        for (int t = 0; t <= k; ++t) {
          cplx coef = pre * binom(j, r) * binom(k, t) *
                      std::pow(cplx(0.0, -1.0 / omega), j - r) *
                      std::pow(cplx(0.0, 1.0 / omega), k - t);
          Partial p = pt;
          p.e[d] = static_cast<uint8_t>(pt.e[d] + r + t);
          p.e[dims + d] = static_cast<uint8_t>(pt.e[dims + d] + (j - r) + (k - t));
          p.c *= coef;
          next.push_back(p);
        }
      }
    }
    acc = std::move(next);
  }
  for (const auto& p : acc) out.add(p.e, p.c);
}

}  // namespace

DistHam ham_distributional(const PolyHamiltonian& h, Ordering ord, double hbar, double omega) {
  if (h.degree() > kMaxHamiltonianDegree) throw ConfigError("hamiltonian degree overflow (max 6)");
  if (ord == Ordering::kClassical) {
    DistHam out = classical_distributional(weyl_symbol(h.op, hbar, omega));
    return out;
  }
  double t;
  switch (ord) {
    case Ordering::kNormal: t = -1.0; break;
    case Ordering::kSymmetric: t = 0.0; break;
    case Ordering::kAntinormal: t = 1.0; break;
    default: throw ConfigError("unsupported ordering for distributional symbol");
  }
  DistHam out;
  out.ordering = ord;
  out.dims = h.modes();
  for (const auto& term : h.op.s_ordered_coefficients(t)) expand_term(out, out.dims, term, hbar, omega);
  return out;
}

DistHam classical_distributional(const PhasePoly& h) {
  DistHam out;
  out.ordering = Ordering::kClassical;
  out.dims = h.dims();
  if (h.degree() > kMaxHamiltonianDegree) throw ConfigError("hamiltonian degree overflow (max 6)");
  for (const auto& t : h.terms()) {
    JetExp e{};
    int total = 0;
    for (uint32_t d = 0; d < out.dims; ++d) {
      e[d] = t.xe[d];
      e[out.dims + d] = t.pe[d];
      total += t.xe[d] + t.pe[d];
    }
    out.add(e, t.c * std::pow(cplx(0.0, -1.0), total));
  }
  return out;
}

HamGridRep ham_charfn_grid(const PolyHamiltonian& h, const GridPtr& grid, Ordering ordering,
                           uint32_t n_max) {
  if (!is_quantum(ordering)) throw ConfigError("grid-sampled symbols carry a quantum ordering");
  if (grid->dims() != 1 || h.modes() != 1)
    throw ConfigError("grid-sampled symbols are single-mode");
  HamGridRep rep;
  rep.grid = grid;
  rep.ordering = ordering;
  rep.n_max = n_max;
  rep.data.resize(grid->size());
  double sigma = ordering == Ordering::kNormal ? 0.0 : (ordering == Ordering::kSymmetric ? 0.5 : 1.0);
  double scale = grid->hbar() / (2.0 * kPi);

  Matrix hm = fock_matrix(h.op, n_max);
  parallel_for_each(grid->size(), [&](std::size_t i) {
    cplx xi;
    double xi2 = grid->xi(i, &xi);
    rep.data[i] = scale * ordered_exp_trace(hm, xi, n_max) * std::exp(-sigma * xi2);
  });

  // Truncation-divergence probe: boundary value still growing with N_max.
  cplx xi_corner;
  double xi2_corner = grid->xi(0, &xi_corner);
  uint32_t n2 = n_max * 2;
  Matrix hm2 = fock_matrix(h.op, n2);
  cplx v1 = scale * ordered_exp_trace(hm, xi_corner, n_max) * std::exp(-sigma * xi2_corner);
  cplx v2 = scale * ordered_exp_trace(hm2, xi_corner, n2) * std::exp(-sigma * xi2_corner);
  rep.divergence_flag = std::abs(v2) > 2.0 * std::abs(v1) + 1e-9;
  return rep;
}

}  // namespace charkin
