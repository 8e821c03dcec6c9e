#pragma once

#include "charkin/evolution.hpp"

namespace charkin {

/// Real Wigner samples on the dual (x,p) grid.
struct WignerField {
  GridPtr grid;
  std::vector<double> data;
  double mass = 0.0;          // Σ W Δx Δp
  double imag_residue = 0.0;  // max |Im| left behind by the transform

  WignerField() = default;
  WignerField(GridPtr g) : grid(std::move(g)), data(grid->size()) {}
};

/// Fourier transform of a symmetric-order field. Throws when the imaginary
/// residue exceeds a loose sanity bound; the stored residue carries the
/// precise defect for tests.
WignerField to_wigner(const CharField& c_symmetric);
CharField from_wigner(const WignerField& w);

double wigner_mass(const WignerField& w);

/// Generalized Wigner series RHS truncated at m = M, with
/// b_m = (−1)^m (ħ/2)^{2m}/(2m+1)!; W derivatives spectral, symbol
/// derivatives analytic. Single mode.
WignerField moyal_rhs(const WignerField& w, const PhasePoly& h_weyl, int m_max);

/// Separable special case H̃ = p²/2 + V(x): drift terms plus the b_m-weighted
/// odd-derivative correction sum (terminates for polynomial V, degree ≤ 6).
/// `v_coeffs[k]` multiplies x^k.
WignerField kinetic_potential_rhs(const WignerField& w, const std::vector<double>& v_coeffs);

}  // namespace charkin
