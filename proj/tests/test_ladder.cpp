#include <doctest.h>

#include <cmath>

#include "charkin/ladder.hpp"

using namespace charkin;

namespace {

cplx coeff_of(const LadderPoly& p, int dag, int ann) {
  for (const auto& t : p.terms())
    if (t.dag[0] == dag && t.ann[0] == ann) return t.c;
  return {};
}

cplx coeff_of(const std::vector<LadderTerm>& terms, int dag, int ann) {
  for (const auto& t : terms)
    if (t.dag[0] == dag && t.ann[0] == ann) return t.c;
  return {};
}

cplx phase_coeff(const PhasePoly& p, int xe, int pe) {
  for (const auto& t : p.terms())
    if (t.xe[0] == xe && t.pe[0] == pe) return t.c;
  return {};
}

}  // namespace

TEST_CASE("normal-ordering products") {
  LadderPoly a = ladder_a(1, 0);
  LadderPoly ad = ladder_adag(1, 0);

  SUBCASE("a a† = a†a + 1") {
    LadderPoly p = a * ad;
    CHECK(coeff_of(p, 1, 1) == cplx(1.0, 0.0));
    CHECK(coeff_of(p, 0, 0) == cplx(1.0, 0.0));
  }
  SUBCASE("a² a†² = a†²a² + 4a†a + 2") {
    LadderPoly p = (a * a) * (ad * ad);
    CHECK(coeff_of(p, 2, 2) == cplx(1.0, 0.0));
    CHECK(coeff_of(p, 1, 1) == cplx(4.0, 0.0));
    CHECK(coeff_of(p, 0, 0) == cplx(2.0, 0.0));
  }
  SUBCASE("(a†a)² = a†²a² + a†a") {
    LadderPoly n = ladder_number(1, 0);
    LadderPoly p = n * n;
    CHECK(coeff_of(p, 2, 2) == cplx(1.0, 0.0));
    CHECK(coeff_of(p, 1, 1) == cplx(1.0, 0.0));
    CHECK(coeff_of(p, 0, 0) == cplx(0.0, 0.0));
  }
}

TEST_CASE("s-ordered expansions of a†a") {
  LadderPoly n = ladder_number(1, 0);
  SUBCASE("antinormal: a†a = aa† − 1") {
    auto e = n.s_ordered_coefficients(-1.0);
    CHECK(coeff_of(e, 1, 1) == cplx(1.0, 0.0));
    CHECK(coeff_of(e, 0, 0) == cplx(-1.0, 0.0));
  }
  SUBCASE("Weyl: a†a = {a†a}_W − 1/2") {
    auto e = n.s_ordered_coefficients(0.0);
    CHECK(coeff_of(e, 1, 1) == cplx(1.0, 0.0));
    CHECK(coeff_of(e, 0, 0) == cplx(-0.5, 0.0));
  }
  SUBCASE("normal basis is the identity") {
    auto e = n.s_ordered_coefficients(1.0);
    CHECK(e.size() == 1);
    CHECK(coeff_of(e, 1, 1) == cplx(1.0, 0.0));
  }
}

TEST_CASE("quadrature operators and their symbols") {
  double hbar = 1.3, omega = 0.8;
  LadderPoly x = ladder_x(1, 0, hbar, omega);
  LadderPoly p = ladder_p(1, 0, hbar, omega);

  SUBCASE("[x, p] = iħ") {
    LadderPoly comm = x * p;
    LadderPoly px = p * x;
    px *= -1.0;
    comm += px;
    CHECK(coeff_of(comm, 0, 0).imag() == doctest::Approx(hbar).epsilon(1e-14));
    CHECK(std::abs(coeff_of(comm, 1, 1)) < 1e-14);
    CHECK(std::abs(coeff_of(comm, 2, 0)) < 1e-14);
  }
  SUBCASE("Weyl symbol of x² is exactly x²") {
    PhasePoly s = weyl_symbol(x * x, hbar, omega);
    CHECK(phase_coeff(s, 2, 0).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(phase_coeff(s, 0, 0)) < 1e-14);
    CHECK(std::abs(phase_coeff(s, 1, 0)) < 1e-14);
  }
  SUBCASE("Weyl symbol of the oscillator is (p² + ω²x²)/2") {
    LadderPoly n = ladder_number(1, 0);
    LadderPoly h = n;
    h *= hbar * omega;
    LadderPoly half = ladder_identity(1);
    half *= hbar * omega * 0.5;
    h += half;
    PhasePoly s = weyl_symbol(h, hbar, omega);
    CHECK(phase_coeff(s, 2, 0).real() == doctest::Approx(0.5 * omega * omega).epsilon(1e-14));
    CHECK(phase_coeff(s, 0, 2).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(phase_coeff(s, 0, 0)) < 1e-14);  // the ħω/2 cancels the Weyl shift
  }
  SUBCASE("Weyl symbol of x⁴ is exactly x⁴") {
    PhasePoly s = weyl_symbol(x * x * x * x, hbar, omega);
    CHECK(phase_coeff(s, 4, 0).real() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(phase_coeff(s, 2, 0)) < 1e-13);
    CHECK(std::abs(phase_coeff(s, 0, 0)) < 1e-13);
    CHECK(s.max_imag_coefficient() < 1e-13);
  }
  SUBCASE("p²/2 in normal order") {
    LadderPoly k = p * p;
    k *= 0.5;
    // p²/2 = (ħω/4)(2a†a + 1 − a†² − a²)
    CHECK(coeff_of(k, 1, 1).real() == doctest::Approx(hbar * omega / 2.0));
    CHECK(coeff_of(k, 0, 0).real() == doctest::Approx(hbar * omega / 4.0));
    CHECK(coeff_of(k, 2, 0).real() == doctest::Approx(-hbar * omega / 4.0));
    CHECK(coeff_of(k, 0, 2).real() == doctest::Approx(-hbar * omega / 4.0));
  }
}

TEST_CASE("hermiticity defect") {
  LadderPoly h(1);
  h.add_monomial(0, 2, 0, cplx(0.3, 0.1));
  h.add_monomial(0, 0, 2, cplx(0.3, -0.1));
  CHECK(h.hermiticity_defect() < 1e-15);
  h.add_monomial(0, 1, 0, cplx(1.0, 0.0));  // a† alone is not Hermitian
  CHECK(h.hermiticity_defect() == doctest::Approx(1.0));
  CHECK(h.adjoint().adjoint().hermiticity_defect() == doctest::Approx(1.0));
}

TEST_CASE("two-mode operators commute across modes") {
  LadderPoly a1 = ladder_a(2, 0);
  LadderPoly ad2 = ladder_adag(2, 1);
  LadderPoly lhs = a1 * ad2;
  LadderPoly rhs = ad2 * a1;
  REQUIRE(lhs.terms().size() == 1);
  REQUIRE(rhs.terms().size() == 1);
  CHECK(lhs.terms()[0].dag == rhs.terms()[0].dag);
  CHECK(lhs.terms()[0].ann == rhs.terms()[0].ann);
  CHECK(lhs.terms()[0].c == rhs.terms()[0].c);
}

TEST_CASE("phase polynomial derivatives and evaluation") {
  PhasePoly v(1);
  v.add_monomial_1d(4, 0, 1.0);  // x⁴
  PhasePoly v3 = v.derivative_1d(3, 0);
  double x = 1.7, p = 0.0;
  CHECK(v3.eval(&x, &p).real() == doctest::Approx(24.0 * x));
  CHECK(v.derivative_1d(5, 0).terms().empty());
}
