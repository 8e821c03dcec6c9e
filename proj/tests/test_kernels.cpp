#include <doctest.h>

#include <cmath>
#include <random>

#include "charkin/kernels.hpp"

using namespace charkin;

TEST_CASE("kernel closed-form spot values") {
  SUBCASE("symmetric, hbar = 2") {
    // (2/2)·sin(1)
    CHECK(eval_kernel(KernelKind::kSymmetric, 2.0, 1.0, 1.0, 0.0, 0.0, 1.0) ==
          doctest::Approx(0.841470985).epsilon(1e-9));
  }
  SUBCASE("coincident points vanish for every kind") {
    for (auto kind : {KernelKind::kNormal, KernelKind::kSymmetric, KernelKind::kAntinormal,
                      KernelKind::kClassical}) {
      CHECK(eval_kernel(kind, 0.7, 1.2, 0.4, -0.3, 0.4, -0.3) == doctest::Approx(0.0));
    }
  }
  SUBCASE("normal kernel with vanishing exponent") {
    // exponent (1/2)[1·(2−1) + 1·(0−1)] = 0 → 2·sin(1)
    CHECK(eval_kernel(KernelKind::kNormal, 1.0, 1.0, 2.0, 0.0, 1.0, 1.0) ==
          doctest::Approx(1.682941970).epsilon(1e-9));
  }
  SUBCASE("classical") {
    CHECK(eval_kernel(KernelKind::kClassical, 1.0, 1.0, 1.0, 0.0, 0.0, 1.0) == doctest::Approx(1.0));
  }
}

TEST_CASE("classical-limit defect") {
  SUBCASE("hbar = 0.1 at a unit classical kernel point") {
    double lam = 1.0, mu = 0.0, lamp = 0.0, mup = 1.0;
    double d = kernel_limit_defect(0.1, 1.0, 1, &lam, &mu, &lamp, &mup);
    CHECK(d == doctest::Approx(4.16614586e-4).epsilon(1e-6));
    CHECK(d <= 0.1 * 0.1 / 24.0);
  }
  SUBCASE("vanishing classical kernel point") {
    double lam = 1.0, mu = 0.0, lamp = 2.0, mup = 0.0;
    double d = kernel_limit_defect(0.3, 1.0, 1, &lam, &mu, &lamp, &mup);
    CHECK(d == doctest::Approx(0.0));
  }
  SUBCASE("halving hbar shrinks the defect fourfold") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-1.2, 1.2);
    for (int trial = 0; trial < 50; ++trial) {
      double lam = u(rng), mu = u(rng), lamp = u(rng), mup = u(rng);
      double kc = lam * mup - mu * lamp;
      if (std::abs(kc) < 0.1) continue;
      double d1 = kernel_limit_defect(0.2, 1.0, 1, &lam, &mu, &lamp, &mup);
      double d2 = kernel_limit_defect(0.1, 1.0, 1, &lam, &mu, &lamp, &mup);
      CHECK(d1 / d2 == doctest::Approx(4.0).epsilon(0.05));
    }
  }
}

TEST_CASE("kernel identities on random tuples") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  std::uniform_real_distribution<double> uh(0.05, 3.0);
  for (int trial = 0; trial < 500; ++trial) {
    double hbar = uh(rng), omega = uh(rng);
    double lam[2] = {u(rng), u(rng)}, mu[2] = {u(rng), u(rng)};
    double lamp[2] = {u(rng), u(rng)}, mup[2] = {u(rng), u(rng)};
    for (uint32_t dims = 1; dims <= 2; ++dims) {
      double kc = eval_kernel(KernelKind::kClassical, hbar, omega, dims, lam, mu, lamp, mup);
      double ks = eval_kernel(KernelKind::kSymmetric, hbar, omega, dims, lam, mu, lamp, mup);
      double kn = eval_kernel(KernelKind::kNormal, hbar, omega, dims, lam, mu, lamp, mup);
      double ka = eval_kernel(KernelKind::kAntinormal, hbar, omega, dims, lam, mu, lamp, mup);

      // K⁽ˢ⁾ = (2/ħ)·sin(ħK⁽ᶜ⁾/2)
      CHECK(ks == doctest::Approx((2.0 / hbar) * std::sin(0.5 * hbar * kc)).epsilon(1e-12));
      // swap antisymmetry
      CHECK(eval_kernel(KernelKind::kSymmetric, hbar, omega, dims, lamp, mup, lam, mu) ==
            doctest::Approx(-ks).epsilon(1e-12));
      CHECK(eval_kernel(KernelKind::kClassical, hbar, omega, dims, lamp, mup, lam, mu) ==
            doctest::Approx(-kc).epsilon(1e-12));
      // K⁽ⁿ⁾(a,b) = −K⁽ᵃ⁾(b,a)·e^{−(ħ/2ω)[(Δλ)² + ω²(Δμ)²]}: the swap sends the
      // Gauss exponent to −E minus the squared shift, not to −E alone.
      double shift2 = 0.0;
      for (uint32_t d = 0; d < dims; ++d) {
        double dl = lam[d] - lamp[d], dm = mu[d] - mup[d];
        shift2 += dl * dl + omega * omega * dm * dm;
      }
      double ka_swap = eval_kernel(KernelKind::kAntinormal, hbar, omega, dims, lamp, mup, lam, mu);
      double expect = -ka_swap * std::exp(-hbar / (2.0 * omega) * shift2);
      CHECK(kn == doctest::Approx(expect).epsilon(1e-10));
      // K⁽ⁿ⁾·K⁽ᵃ⁾ = (K⁽ˢ⁾)²
      CHECK(kn * ka == doctest::Approx(ks * ks).epsilon(1e-12));
    }
  }
}

TEST_CASE("kernels vanish on parallel argument pairs") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const double scales[] = {2.0, 0.5, -1.0, 0.25};  // exact in binary floating point
  for (int trial = 0; trial < 30; ++trial) {
    double lam = u(rng), mu = u(rng), scale = scales[trial % 4];
    double lamp = scale * lam, mup = scale * mu;
    for (auto kind : {KernelKind::kNormal, KernelKind::kSymmetric, KernelKind::kAntinormal,
                      KernelKind::kClassical}) {
      CHECK(std::abs(eval_kernel(kind, 0.9, 1.1, lam, mu, lamp, mup)) < 1e-12);
    }
  }
}

TEST_CASE("hbar to zero recovers the classical kernel pointwise") {
  double lam = 1.3, mu = -0.4, lamp = 0.6, mup = 0.9;
  double kc = eval_kernel(KernelKind::kClassical, 1.0, 1.0, lam, mu, lamp, mup);
  for (auto kind : {KernelKind::kNormal, KernelKind::kSymmetric, KernelKind::kAntinormal}) {
    double prev = 1e300;
    for (double hbar : {1e-2, 1e-4, 1e-6}) {
      double d = std::abs(eval_kernel(kind, hbar, 1.0, lam, mu, lamp, mup) - kc);
      CHECK(d < prev);
      prev = d;
    }
    // The Gauss factor approaches 1 linearly in ħ, so the defect is O(ħ).
    CHECK(prev < 1e-5);
  }
}

TEST_CASE("EOM kernel jet matches finite differences of the negated closed form") {
  auto space = JetSpace::get(2, 3);
  double hbar = 0.8, omega = 1.3;
  double lam = 1.1, mu = -0.7;
  for (auto kind : {KernelKind::kNormal, KernelKind::kSymmetric, KernelKind::kAntinormal,
                    KernelKind::kClassical}) {
    Jet kj = eom_kernel_jet(kind, hbar, omega, space, 1, &lam, &mu);
    auto f = [&](double du, double dv) {
      double lamp = lam - du, mup = mu - dv;
      return -eval_kernel(kind, hbar, omega, lam, mu, lamp, mup);
    };
    double h = 1e-4;
    // ∂_u and ∂_v by central differences.
    CHECK(kj.partial({1, 0}).real() ==
          doctest::Approx((f(h, 0) - f(-h, 0)) / (2 * h)).epsilon(1e-6));
    CHECK(kj.partial({0, 1}).real() ==
          doctest::Approx((f(0, h) - f(0, -h)) / (2 * h)).epsilon(1e-6));
    // mixed second derivative
    double fdm = (f(h, h) - f(h, -h) - f(-h, h) + f(-h, -h)) / (4 * h * h);
    CHECK(kj.partial({1, 1}).real() == doctest::Approx(fdm).epsilon(1e-5));
    CHECK(kj.value_at_zero() == cplx{});
  }
}
