#pragma once

#include "charkin/evolution.hpp"

namespace charkin {

/// Classical phase-space Hamiltonian: polynomial H(x,p) plus its
/// characteristic representations.
struct ClassicalHamiltonian {
  PhasePoly symbol;

  explicit ClassicalHamiltonian(PhasePoly s = PhasePoly(1)) : symbol(std::move(s)) {}

  DistHam distributional() const { return classical_distributional(symbol); }
};

/// Classical-kernel EOM right-hand side (distributional fast path).
CharField classical_rhs(const CharField& c, const ClassicalHamiltonian& h);

/// Liouville transport on the dual grid: ∂P/∂t = ∂_xH·∂_pP − ∂_pH·∂_xP with
/// spectral P-derivatives and analytic H-derivatives.
std::vector<cplx> liouville_pde_rhs(const PhaseGrid& grid, const std::vector<cplx>& p_field,
                                    const PhasePoly& h);

// Analytic reference fields for tests (method-of-characteristics solutions).

/// C⁽ˢ⁾ of a coherent state, closed form e^{−|ξ|²/2 + iξ̄ᾱ + iξα} (dims = 1).
CharField coherent_symmetric_closed_form(const GridPtr& grid, cplx alpha);
/// Same state after harmonic evolution for time t: α ↦ α e^{−iωt}.
CharField coherent_symmetric_rotated(const GridPtr& grid, cplx alpha, double t);
/// Free-particle shear of a centered Gaussian C₀ = e^{−(aλ²+bμ²)/2}:
/// C(λ,μ,t) = C₀(λ, μ + λt) for H = p²/2 (dims = 1).
CharField gaussian_sheared(const GridPtr& grid, double a, double b, double t);

}  // namespace charkin
