#pragma once

#include "charkin/hamiltonian.hpp"
#include "charkin/kernels.hpp"
#include "charkin/states.hpp"

namespace charkin {

enum class RhsMethod : uint8_t {
  kQuadrature = 0,
  kDistributional = 1,
  kStarProduct = 2,
};

RhsMethod rhs_method_from_name(const std::string& name);
const char* rhs_method_name(RhsMethod m);

/// One-time oracle calibration of the star-product normalization landed on
/// exactly 1 with this project's symbol conventions (𝟙 ↦ δ(λ)δ(μ));
/// calibrate_star_kappa() regression-tests the frozen value.
inline constexpr double kStarProductKappa = 1.0;

/// ∂C/∂t by trapezoid quadrature of the kernel convolution; H sampled on the
/// same grid, zero-padded outside (truncated-domain integral, not circular).
CharField rhs_quadrature(const CharField& c, const HamGridRep& h);

/// ∂C/∂t with the delta-derivative symbol collapsed onto the kernel jet and
/// spectral derivatives of C (the production path for polynomial Ĥ).
CharField rhs_distributional(const CharField& c, const DistHam& h);

/// ∂C/∂t = (i/ħ)·κ·(C_ρH − C_Hρ) by quadrature with the two Gaussian-phase
/// weights (normal ordering only).
CharField rhs_star_product(const CharField& c, const HamGridRep& h);

/// Bundles a method with its Hamiltonian representation.
class RhsOperator {
 public:
  static RhsOperator quadrature(HamGridRep h);
  static RhsOperator distributional(DistHam h);
  static RhsOperator star_product(HamGridRep h);

  CharField operator()(const CharField& c) const;
  RhsMethod method() const { return method_; }
  const DistHam* dist() const { return method_ == RhsMethod::kDistributional ? &dist_ : nullptr; }

 private:
  RhsMethod method_ = RhsMethod::kDistributional;
  HamGridRep grid_rep_;
  DistHam dist_;
};

struct EvolveConfig {
  double dt = 0.0;
  double t_final = 0.0;
  uint64_t n_steps_override = 0;  // used when dt == 0 (identity stepping)
  uint32_t snapshot_every = 1;    // steps between stored snapshots
  uint32_t monitor_every = 1;     // steps between monitor evaluations
  double norm_tol = 1e-6;
  double herm_tol = 1e-6;
  double bound_tol = 1e-6;

  void validate() const;
};

struct Trajectory {
  struct Entry {
    double t = 0.0;
    CharField field;
    InvariantReport monitor;
  };
  std::vector<Entry> entries;  // strictly increasing t (single entry repeats when dt = 0)
  bool aborted = false;
  std::string abort_reason;
  CharField diagnostic;  // state at abort
};

/// Classical explicit RK4 step.
CharField step_rk4(const CharField& c, const RhsOperator& rhs, double dt);

/// RK4 time integration with cadence monitors; aborts (without throwing) on
/// monitor breach and carries the diagnostic snapshot.
Trajectory evolve(const CharField& c0, const RhsOperator& rhs, const EvolveConfig& cfg);

/// dt ≤ 0.1·‖C‖/‖RHS(C)‖ probed at t = 0.
double suggest_dt(const CharField& c0, const RhsOperator& rhs);

/// Least-squares fit of the star-product output against the normal-kernel
/// quadrature on the same inputs; returns the fitted κ (≈ kStarProductKappa).
double calibrate_star_kappa(const CharField& c, const HamGridRep& h);

}  // namespace charkin
