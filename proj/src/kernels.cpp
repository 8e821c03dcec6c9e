#include "charkin/kernels.hpp"

#include <cmath>

namespace charkin {

KernelKind kernel_kind_for(Ordering o) {
  switch (o) {
    case Ordering::kNormal: return KernelKind::kNormal;
    case Ordering::kSymmetric: return KernelKind::kSymmetric;
    case Ordering::kAntinormal: return KernelKind::kAntinormal;
    case Ordering::kClassical: return KernelKind::kClassical;
    default: throw ConfigError("no kernel for this ordering tag");
  }
}

Ordering ordering_for(KernelKind k) {
  switch (k) {
    case KernelKind::kNormal: return Ordering::kNormal;
    case KernelKind::kSymmetric: return Ordering::kSymmetric;
    case KernelKind::kAntinormal: return Ordering::kAntinormal;
    case KernelKind::kClassical: return Ordering::kClassical;
  }
  throw ConfigError("bad kernel kind");
}

namespace {

double cross(uint32_t dims, const double* lam, const double* mu, const double* lamp,
             const double* mup) {
  double s = 0.0;
  for (uint32_t d = 0; d < dims; ++d) s += lam[d] * mup[d] - mu[d] * lamp[d];
  return s;
}

double gauss_exponent(uint32_t dims, double hbar, double omega, const double* lam,
                      const double* mu, const double* lamp, const double* mup) {
  double s = 0.0;
  for (uint32_t d = 0; d < dims; ++d)
    s += lamp[d] * (lam[d] - lamp[d]) + omega * omega * mup[d] * (mu[d] - mup[d]);
  return s * hbar / (2.0 * omega);
}

}  // namespace

double eval_kernel(KernelKind kind, double hbar, double omega, uint32_t dims, const double* lam,
                   const double* mu, const double* lamp, const double* mup) {
  double kc = cross(dims, lam, mu, lamp, mup);
  if (kind == KernelKind::kClassical) return kc;
  if (!(hbar > 0.0)) throw ConfigError("hbar must be positive for quantum kernels");
  double s = (2.0 / hbar) * std::sin(0.5 * hbar * kc);
  if (kind == KernelKind::kSymmetric) return s;
  double e = gauss_exponent(dims, hbar, omega, lam, mu, lamp, mup);
  return s * std::exp(kind == KernelKind::kNormal ? e : -e);
}

double eval_kernel(KernelKind kind, double hbar, double omega, double lam, double mu, double lamp,
                   double mup) {
  return eval_kernel(kind, hbar, omega, 1, &lam, &mu, &lamp, &mup);
}

double kernel_limit_defect(double hbar, double omega, uint32_t dims, const double* lam,
                           const double* mu, const double* lamp, const double* mup) {
  double ks = eval_kernel(KernelKind::kSymmetric, hbar, omega, dims, lam, mu, lamp, mup);
  double kc = eval_kernel(KernelKind::kClassical, hbar, omega, dims, lam, mu, lamp, mup);
  return std::abs(ks - kc);
}

Jet eom_kernel_jet(KernelKind kind, double hbar, double omega,
                   std::shared_ptr<const JetSpace> space, uint32_t dims, const double* lam,
                   const double* mu) {
  // Shift substitution λ' = λ−u, μ' = μ−v:
  //   sine argument  (ħ/2)(μ·λ' − λ·μ') = (ħ/2) Σ (λ_d v_d − μ_d u_d)
  //   Gauss exponent (ħ/2ω) Σ [(λ_d−u_d)u_d + ω²(μ_d−v_d)v_d]
  Jet s(space);
  for (uint32_t d = 0; d < dims; ++d) {
    s.add_term(d, 1, -mu[d]);
    s.add_term(dims + d, 1, lam[d]);
  }

  if (kind == KernelKind::kClassical) return s;

  Jet arg = s;
  arg *= 0.5 * hbar;
  Jet k = jet_sin(arg);
  k *= 2.0 / hbar;
  if (kind == KernelKind::kSymmetric) return k;

  double w2 = omega * omega;
  Jet e(space);
  for (uint32_t d = 0; d < dims; ++d) {
    e.add_term(d, 1, lam[d]);
    e.add_term(d, 2, -1.0);
    e.add_term(dims + d, 1, w2 * mu[d]);
    e.add_term(dims + d, 2, -w2);
  }
  e *= hbar / (2.0 * omega) * (kind == KernelKind::kNormal ? 1.0 : -1.0);
  return k * jet_exp(e);
}

}  // namespace charkin
