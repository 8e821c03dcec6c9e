#pragma once

#include <array>
#include <cstdint>
#include <memory>

#include "charkin/common.hpp"

namespace charkin {

/// Exponent multi-index for up to four variables (N ≤ 2 phase-space dims).
inline constexpr int kJetMaxVars = 4;
using JetExp = std::array<uint8_t, kJetMaxVars>;

/// Shared tables for truncated Taylor arithmetic in `n_vars` variables with
/// total degree ≤ `degree`. Monomials are enumerated degree-major; products
/// that exceed the cap are dropped (truncation).
class JetSpace {
 public:
  JetSpace(int n_vars, int degree);

  int n_vars() const { return n_vars_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(monomials_.size()); }

  const JetExp& exponent(int i) const { return monomials_[i]; }
  /// Index of a multi-index, or -1 when it exceeds the degree cap.
  int index_of(const JetExp& e) const;
  /// Product index table entry: index of monomial i·j, or -1 if truncated.
  int product(int i, int j) const { return product_[static_cast<std::size_t>(i) * monomials_.size() + j]; }
  /// e! = prod_i e_i! as a double.
  double factorial(int i) const { return fact_[i]; }

  static std::shared_ptr<const JetSpace> get(int n_vars, int degree);

 private:
  int n_vars_;
  int degree_;
  std::vector<JetExp> monomials_;
  std::vector<int> lookup_;  // dense exponent hash -> index
  std::vector<int> product_;
  std::vector<double> fact_;

  int pack(const JetExp& e) const;
};

/// A truncated Taylor polynomial about the origin: value + mixed partials.
/// Coefficient i multiplies the monomial with exponent space->exponent(i),
/// i.e. f ≈ Σ_e coef[e]·u^e; the mixed partial ∂^e f(0) = coef[e]·e!.
class Jet {
 public:
  Jet() = default;
  explicit Jet(std::shared_ptr<const JetSpace> space) : space_(std::move(space)), coef_(space_->size()) {}

  const JetSpace& space() const { return *space_; }
  std::shared_ptr<const JetSpace> space_ptr() const { return space_; }
  cplx& operator[](int i) { return coef_[i]; }
  const cplx& operator[](int i) const { return coef_[i]; }
  int size() const { return static_cast<int>(coef_.size()); }

  void set_zero();
  /// Adds c·u_axis^power (power ≤ degree).
  void add_term(int axis, int power, cplx c);
  void add_constant(cplx c) { coef_[0] += c; }

  Jet& operator+=(const Jet& o);
  Jet& operator*=(cplx s);

  friend Jet operator*(const Jet& a, const Jet& b);

  /// Derivative with respect to variable `axis` (exact, degree drops by one).
  Jet derivative(int axis) const;

  /// Mixed-partial value ∂^e(this)(0) = coef(e)·e!; 0 when e exceeds the cap.
  cplx partial(const JetExp& e) const;

  cplx value_at_zero() const { return coef_[0]; }

 private:
  std::shared_ptr<const JetSpace> space_;
  std::vector<cplx> coef_;
};

/// exp of a jet (constant term allowed).
Jet jet_exp(const Jet& p);
/// sin of a jet (constant term allowed).
Jet jet_sin(const Jet& p);

}  // namespace charkin
