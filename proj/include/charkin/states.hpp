#pragma once

#include "charkin/fock.hpp"
#include "charkin/grid.hpp"
#include "charkin/state_spec.hpp"

namespace charkin {

/// Report-only invariant check of a quantum characteristic field.
struct InvariantReport {
  double norm_defect = 0.0;       // |C(0,0) − 1|
  double herm_defect = 0.0;       // max |C(−λ,−μ) − conj C(λ,μ)| (periodic reflection)
  double bound_violation = 0.0;   // max (|C| − ordering bound), clipped at 0
};

InvariantReport check_invariants(const CharField& c);

/// Pointwise ordering change via the Gaussian multipliers e^{±|ξ|²/2}, e^{±|ξ|²}.
/// Classical fields are rejected in either direction.
CharField convert_ordering(const CharField& c, Ordering target);

/// Samples a library state through the Fock oracle (density_to_charfn).
CharField make_state_charfn(const StateSpec& spec, const GridPtr& grid, Ordering ordering,
                            uint32_t n_max);

/// ⟨a†^m a^n⟩ from a normal-ordered field by 4th-order central differences
/// at the origin (m + n ≤ 4; single mode).
cplx moments_from_charfn(const CharField& c_normal, uint32_t m, uint32_t n);

/// Retags a symmetric-order field as classical phase-space data (identical
/// samples; the starting point of quantum-vs-classical comparisons).
CharField reinterpret_as_classical(const CharField& c_symmetric);

}  // namespace charkin
