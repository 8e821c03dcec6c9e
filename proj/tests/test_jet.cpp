#include <doctest.h>

#include <cmath>

#include "charkin/jet.hpp"

using namespace charkin;

TEST_CASE("jet arithmetic reproduces mixed partials of exp/sin compositions") {
  // f(u,v) = exp(au + bv²)·sin(cu + dv); compare partials against closed forms
  // differentiated by hand at the origin.
  auto space = JetSpace::get(2, 4);
  double a = 0.7, b = -0.3, c = 1.1, d = 0.4;
  Jet e(space), s(space);
  e.add_term(0, 1, a);
  e.add_term(1, 2, b);
  s.add_term(0, 1, c);
  s.add_term(1, 1, d);
  Jet f = jet_exp(e) * jet_sin(s);

  // ∂_u f|0 = a·sin(0) + c·cos(0) = c
  CHECK(f.partial({1, 0}).real() == doctest::Approx(c).epsilon(1e-14));
  // ∂_v f|0 = d
  CHECK(f.partial({0, 1}).real() == doctest::Approx(d).epsilon(1e-14));
  // ∂_u² f|0 = 2ac − 0·... : d²/du²[e^{au}sin(cu)] = (a²−c²)sin + 2ac·cos → 2ac
  CHECK(f.partial({2, 0}).real() == doctest::Approx(2 * a * c).epsilon(1e-14));
  // ∂_v² f|0: e^{bv²}sin(dv) → second derivative at 0 is 0 (odd function times even)
  CHECK(f.partial({0, 2}).real() == doctest::Approx(0.0).epsilon(1e-14));
  // ∂_v³: d³/dv³[e^{bv²}sin(dv)]|0 = 6bd − d³
  CHECK(f.partial({0, 3}).real() == doctest::Approx(6 * b * d - d * d * d).epsilon(1e-13));
  // mixed ∂_u∂_v f|0 = a·d·sin + ... : f_uv = e^{au+bv²}[(a)(2bv·sin + d cos) ...] at 0: a·d·0? compute:
  // f_u = a e·sin + c e·cos ; f_uv at 0 = a·d·cos(0)·... = a·d + c·(−d·0) → a·d? No:
  // f_uv = ∂_v [a e sin + c e cos] = a(2bv e sin + d e cos) + c(2bv e cos − d e sin) → at 0: a·d.
  CHECK(f.partial({1, 1}).real() == doctest::Approx(a * d).epsilon(1e-14));
}

TEST_CASE("jet exp handles non-zero constant term") {
  auto space = JetSpace::get(1, 5);
  Jet p(space);
  p.add_constant(0.5);
  p.add_term(0, 1, 2.0);
  Jet f = jet_exp(p);
  // f(u) = e^{0.5+2u}: ∂^k f|0 = 2^k e^{0.5}
  for (int k = 0; k <= 5; ++k) {
    JetExp e{};
    e[0] = static_cast<uint8_t>(k);
    CHECK(f.partial(e).real() ==
          doctest::Approx(std::pow(2.0, k) * std::exp(0.5)).epsilon(1e-13));
  }
}

TEST_CASE("jet derivative operator matches coefficient shifts") {
  auto space = JetSpace::get(2, 3);
  Jet s(space);
  s.add_term(0, 1, 1.5);
  s.add_term(1, 1, -0.25);
  Jet f = jet_sin(s);
  Jet fu = f.derivative(0);
  CHECK(fu.value_at_zero().real() == doctest::Approx(1.5));
  // ∂_u sin(1.5u − 0.25v) twice → −1.5²·sin → 0 at origin
  CHECK(fu.derivative(0).value_at_zero().real() == doctest::Approx(0.0));
  CHECK(fu.derivative(1).value_at_zero().real() == doctest::Approx(0.0));
}
