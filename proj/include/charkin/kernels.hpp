#pragma once

#include "charkin/grid.hpp"
#include "charkin/jet.hpp"

namespace charkin {

enum class KernelKind : uint8_t {
  kNormal = 0,
  kSymmetric = 1,
  kAntinormal = 2,
  kClassical = 3,
};

KernelKind kernel_kind_for(Ordering o);
Ordering ordering_for(KernelKind k);

/// Closed-form kernel K(λ,μ,λ',μ'):
///   K⁽ˢ⁾ = (2/ħ)·sin[(ħ/2)(λ·μ' − μ·λ')]
///   K⁽ⁿ⁾ = (2/ħ)·e^{+(ħ/2ω)[λ'·(λ−λ') + ω²μ'·(μ−μ')]}·sin[(ħ/2)(λ·μ' − μ·λ')]
///   K⁽ᵃ⁾ = same with the exponent negated
///   K⁽ᶜ⁾ = λ·μ' − μ·λ'
/// Dot products over `dims` components; the classical kind ignores ħ.
double eval_kernel(KernelKind kind, double hbar, double omega, uint32_t dims,
                   const double* lam, const double* mu, const double* lamp, const double* mup);

/// 1-D convenience overload.
double eval_kernel(KernelKind kind, double hbar, double omega, double lam, double mu,
                   double lamp, double mup);

/// |K⁽ˢ⁾ − K⁽ᶜ⁾| at a point; bounded by (ħ²/24)|K⁽ᶜ⁾|³.
double kernel_limit_defect(double hbar, double omega, uint32_t dims, const double* lam,
                           const double* mu, const double* lamp, const double* mup);

// ---------------------------------------------------------------------------
// Jet form used by the distributional equations of motion.
//
// The EOM convolution kernel, as a truncated Taylor series in the shift
// variables (u, v) = (λ−λ', μ−μ') about u = v = 0. The sign is the one
// consistent with ∂ρ/∂t = (i/ħ)(ρH − Hρ): the sine argument is
// (ħ/2)(λ·v − μ·u), i.e. the closed forms above enter the dynamics negated
// (see tests against the Fock-space derivative).
// ---------------------------------------------------------------------------

/// Builds the EOM kernel jet at evaluation point (λ, μ). Variables are
/// ordered (u_1..u_N, v_1..v_N); `space` fixes dimension count and degree.
Jet eom_kernel_jet(KernelKind kind, double hbar, double omega,
                   std::shared_ptr<const JetSpace> space, uint32_t dims, const double* lam,
                   const double* mu);

}  // namespace charkin
