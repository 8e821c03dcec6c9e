#pragma once

#include <array>

#include "charkin/common.hpp"

namespace charkin {

/// A monomial a†^{dag}·a^{ann} per mode, normal-ordered.
struct LadderTerm {
  std::array<uint8_t, 2> dag{};
  std::array<uint8_t, 2> ann{};
  cplx c{};
};

/// Polynomial in ladder operators over `modes` independent modes, kept in
/// normal-ordered form. Multiplication re-normal-orders via the per-mode
/// identity a^k a†^j = Σ_m binom(k,m) binom(j,m) m! a†^{j−m} a^{k−m}.
class LadderPoly {
 public:
  explicit LadderPoly(uint32_t modes = 1) : modes_(modes) {}

  uint32_t modes() const { return modes_; }
  const std::vector<LadderTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(const LadderTerm& t);
  void add_monomial(uint32_t mode, int dag, int ann, cplx c);

  LadderPoly& operator+=(const LadderPoly& o);
  LadderPoly& operator*=(cplx s);
  friend LadderPoly operator*(const LadderPoly& a, const LadderPoly& b);
  friend LadderPoly operator+(LadderPoly a, const LadderPoly& b) { return a += b; }

  LadderPoly adjoint() const;
  /// Max Σ(dag+ann) over terms.
  int degree() const;
  /// Max hermiticity defect |c_{jk} − conj(c_{kj})|.
  double hermiticity_defect() const;

  /// Coefficients in the s-ordered basis t ∈ [−1, 1]: Ĥ = Σ e_{jk}·{a†^j a^k}_t
  /// (t = 1 normal, 0 symmetric/Weyl, −1 antinormal).
  std::vector<LadderTerm> s_ordered_coefficients(double t) const;

 private:
  uint32_t modes_;
  std::vector<LadderTerm> terms_;  // merged, no exact-zero entries

  void merge(const LadderTerm& t);
};

/// Builders (single reference frequency ω, action scale ħ as in the grid).
LadderPoly ladder_a(uint32_t modes, uint32_t mode);
LadderPoly ladder_adag(uint32_t modes, uint32_t mode);
LadderPoly ladder_number(uint32_t modes, uint32_t mode);
LadderPoly ladder_identity(uint32_t modes);
/// x̂ = √(ħ/2ω)(a† + a), p̂ = i√(ħω/2)(a† − a) for the given mode.
LadderPoly ladder_x(uint32_t modes, uint32_t mode, double hbar, double omega);
LadderPoly ladder_p(uint32_t modes, uint32_t mode, double hbar, double omega);

// ---------------------------------------------------------------------------
// Phase-space polynomials H(x,p) (used for Weyl symbols, classical symbols,
// and analytic derivative sampling on the dual grid).
// ---------------------------------------------------------------------------

struct PhaseMono {
  std::array<uint8_t, 2> xe{};  // per-dim x exponents
  std::array<uint8_t, 2> pe{};  // per-dim p exponents
  cplx c{};
};

class PhasePoly {
 public:
  explicit PhasePoly(uint32_t dims = 1) : dims_(dims) {}

  uint32_t dims() const { return dims_; }
  const std::vector<PhaseMono>& terms() const { return terms_; }

  void add_monomial(const std::array<uint8_t, 2>& xe, const std::array<uint8_t, 2>& pe, cplx c);
  void add_monomial_1d(int xpow, int ppow, cplx c);

  PhasePoly& operator+=(const PhasePoly& o);
  friend PhasePoly operator*(const PhasePoly& a, const PhasePoly& b);

  /// ∂^{xo}_x ∂^{po}_p, exact.
  PhasePoly derivative(const std::array<uint8_t, 2>& xo, const std::array<uint8_t, 2>& po) const;
  PhasePoly derivative_1d(int xo, int po) const;

  cplx eval(const double* x, const double* p) const;
  int degree() const;
  double max_imag_coefficient() const;

 private:
  uint32_t dims_;
  std::vector<PhaseMono> terms_;
};

/// Weyl symbol of a ladder polynomial: s-order to t=0, then
/// {a†^j a^k}_W ↦ ᾱ^j α^k with α_i = (ω x_i + i p_i)/√(2ħω).
PhasePoly weyl_symbol(const LadderPoly& op, double hbar, double omega);

}  // namespace charkin
