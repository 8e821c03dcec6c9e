#pragma once

#include <Eigen/Dense>

#include "charkin/grid.hpp"
#include "charkin/ladder.hpp"
#include "charkin/state_spec.hpp"

namespace charkin {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Truncated density matrix in the number basis.
struct FockDensity {
  uint32_t n_max = 0;
  Matrix rho;

  double trace_defect() const;
  double hermiticity_defect() const;
  double min_eigenvalue() const;
  double purity() const;
};

/// Single-mode ladder/quadrature matrices at truncation N_max.
struct FockOps {
  uint32_t n_max = 0;
  Matrix a, adag, x, p;
};

FockOps build_ops(uint32_t n_max, double hbar, double omega);

/// Dense matrix of a normal-ordered ladder polynomial (single mode).
Matrix fock_matrix(const LadderPoly& op, uint32_t n_max);

/// Density matrix of a library state, truncated and renormalized to trace 1.
FockDensity fock_density(const StateSpec& spec, uint32_t n_max);
/// Pure-state vector for coherent/fock/cat specs (normalized at truncation).
Vector fock_vector(const StateSpec& spec, uint32_t n_max);

/// ρ(t) = U ρ₀ U†, U = exp(−iĤt/ħ), via eigendecomposition (exact at
/// truncation scale). Rejects non-Hermitian Ĥ.
FockDensity von_neumann_evolve(const FockDensity& rho0, const Matrix& hamiltonian, double t,
                               double hbar);

/// Samples Tr[ρ·E_ord(ξ)] on the grid. The normal-order product trace is
/// evaluated with exact nilpotent exponentials; symmetric and antinormal
/// variants attach the exact factors e^{−|ξ|²/2} and e^{−|ξ|²}.
/// Sets the field's truncation flag when max |ξ|² > N_max/4.
CharField density_to_charfn(const FockDensity& rho, const GridPtr& grid, Ordering ordering);

/// Inverse map: ρ_{mn} = ∫dx dp F(x,p)·⟨m|α⟩⟨α|n⟩ with F the phase-space
/// transform of C⁽ⁿ⁾ and α = (ωx+ip)/√(2ħω). Valid for states with regular P.
FockDensity charfn_to_density(const CharField& c_normal, uint32_t n_max);

/// Fidelity ⟨ψ|ρ|ψ⟩ against a pure target.
double fidelity_against_pure(const FockDensity& rho, const Vector& psi);

/// Tr[M·e^{iξ̄a†}e^{iξa}] at truncation n (exact nilpotent exponentials).
cplx ordered_exp_trace(const Matrix& m, cplx xi, uint32_t n);

/// Central finite-difference d/dt of density_to_charfn under von Neumann
/// evolution at t = 0: the master oracle for every RHS method.
CharField oracle_rhs_fd(const FockDensity& rho0, const Matrix& hamiltonian, const GridPtr& grid,
                        Ordering ordering, double dt);

}  // namespace charkin
