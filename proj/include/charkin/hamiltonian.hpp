#pragma once

#include "charkin/grid.hpp"
#include "charkin/jet.hpp"
#include "charkin/ladder.hpp"

namespace charkin {

inline constexpr int kMaxHamiltonianDegree = 6;

/// Hermitian polynomial in ladder operators, normal-ordered coefficients.
struct PolyHamiltonian {
  LadderPoly op;

  explicit PolyHamiltonian(uint32_t modes = 1) : op(modes) {}
  explicit PolyHamiltonian(LadderPoly p) : op(std::move(p)) {}

  uint32_t modes() const { return op.modes(); }
  int degree() const { return op.degree(); }
  double hermiticity_defect() const { return op.hermiticity_defect(); }
  bool is_hermitian(double tol = 1e-12) const { return hermiticity_defect() <= tol; }
};

/// Grid-sampled characteristic symbol (ħ/2π)·Tr_{N_max}[Ĥ·E_ord(ξ)].
/// For polynomial Ĥ the continuum symbol is distribution-valued; this form is
/// a truncation regularization for the quadrature/diagnostic paths only.
struct HamGridRep {
  GridPtr grid;
  std::vector<cplx> data;
  Ordering ordering = Ordering::kNormal;
  uint32_t n_max = 0;
  bool divergence_flag = false;  // boundary value still growing with N_max
};

/// Distributional characteristic symbol: Σ c·∂^e δ^{2N}(λ,μ), with the
/// exponent `e` over the (λ-axes, μ-axes) derivative basis.
struct DistTerm {
  JetExp exp{};  // u axes then v axes
  cplx c{};
};

struct DistHam {
  Ordering ordering = Ordering::kNormal;
  uint32_t dims = 1;
  std::vector<DistTerm> terms;
  int max_order = 0;

  void add(const JetExp& e, cplx c);
};

/// Distributional symbol of a polynomial Hamiltonian for a given EOM
/// ordering. Ordering changes happen at the operator level: the ordered
/// exponential of kind `ord` pairs with the s-ordered expansion of Ĥ at
/// t = {normal: −1, symmetric: 0, antinormal: +1}, each basis element
/// {a†^j a^k}_t mapping to ∂^j_{(iξ̄)} ∂^k_{(iξ)} δ(λ)δ(μ).
/// `ord = classical` takes the Weyl symbol as the classical H(x,p).
DistHam ham_distributional(const PolyHamiltonian& h, Ordering ord, double hbar, double omega);

/// Distributional symbol of a classical polynomial H(x,p):
/// x^a p^b ↦ (−i)^{a+b} ∂^a_λ ∂^b_μ δ(λ)δ(μ).
DistHam classical_distributional(const PhasePoly& h);

/// Truncated-trace grid sampling (single mode). Flags truncation divergence
/// when the boundary magnitude keeps growing as N_max is raised.
HamGridRep ham_charfn_grid(const PolyHamiltonian& h, const GridPtr& grid, Ordering ordering,
                           uint32_t n_max);

}  // namespace charkin
