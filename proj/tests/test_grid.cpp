#include <doctest.h>

#include <cmath>
#include <random>

#include "charkin/grid.hpp"

using namespace charkin;

namespace {

GridPtr grid_1d(uint32_t g, double extent, double hbar = 1.0, double omega = 1.0) {
  return PhaseGrid::create(make_grid_spec_1d(g, extent, hbar, omega));
}

std::size_t node_1d(const PhaseGrid& g, std::size_t kl, std::size_t km) {
  std::size_t idx[2] = {kl, km};
  return g.flatten(idx);
}

std::vector<cplx> random_field(const PhaseGrid& g, uint32_t seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> nd;
  std::vector<cplx> v(g.size());
  for (auto& z : v) z = {nd(rng), nd(rng)};
  return v;
}

}  // namespace

TEST_CASE("grid spacing and node layout") {
  auto g = grid_1d(64, 8.0);
  CHECK(g->delta_lambda(0) == doctest::Approx(0.25));
  CHECK(g->delta_mu(0) == doctest::Approx(0.25));
  // Origin is a node.
  double lam, mu;
  g->node(g->origin_index(), &lam, &mu);
  CHECK(lam == 0.0);
  CHECK(mu == 0.0);
  // Dual pairing Δx·Δλ = 2π/G.
  CHECK(g->delta_x(0) * g->delta_lambda(0) == doctest::Approx(2.0 * kPi / 64));
}

TEST_CASE("grid rejects odd sizes and non-positive parameters") {
  CHECK_THROWS_WITH_AS(grid_1d(63, 8.0), doctest::Contains("odd grid size"), ConfigError);
  CHECK_THROWS_AS(grid_1d(64, -1.0), ConfigError);
  CHECK_THROWS_AS(grid_1d(64, 8.0, -1.0), ConfigError);
  CHECK_THROWS_AS(grid_1d(64, 8.0, 1.0, 0.0), ConfigError);
}

TEST_CASE("two-dimensional field length is the product of squared axis sizes") {
  GridSpec s;
  s.dims = 2;
  s.points = {32, 32};
  s.extent_lambda = {6.0, 6.0};
  s.extent_mu = {6.0, 6.0};
  auto g = PhaseGrid::create(s);
  CharField f(g, Ordering::kSymmetric);
  CHECK(f.data.size() == 32u * 32u * 32u * 32u);
}

TEST_CASE("xi at grid nodes") {
  SUBCASE("origin") {
    auto g = grid_1d(64, 8.0);
    cplx xi;
    double n2 = g->xi(g->origin_index(), &xi);
    CHECK(std::abs(xi) == 0.0);
    CHECK(n2 == 0.0);
  }
  SUBCASE("hbar=2 at (1,1)") {
    auto g = grid_1d(64, 8.0, 2.0, 1.0);
    // λ = 1 at node k = 36 (Δ = 0.25).
    double n2 = g->xi_norm2(node_1d(*g, 36, 36));
    CHECK(n2 == doctest::Approx(2.0).epsilon(1e-14));
  }
  SUBCASE("omega=2 at (2,0)") {
    auto g = grid_1d(64, 8.0, 1.0, 2.0);
    cplx xi;
    g->xi(node_1d(*g, 40, 32), &xi);
    CHECK(xi.real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(xi.imag() == doctest::Approx(0.0));
    CHECK(std::norm(xi) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("transform of the constant field is a unit-mass spike at the origin") {
  auto g = grid_1d(32, 6.0);
  std::vector<cplx> c(g->size(), cplx(1.0, 0.0));
  auto f = fourier_to_phase(*g, c);
  double mass = 0.0;
  for (auto& z : f) mass += z.real();
  mass *= g->cell_x_p();
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
  std::size_t o = g->origin_index();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i == o) continue;
    CHECK(std::abs(f[i]) < 1e-12 * std::abs(f[o]));
  }
}

TEST_CASE("vacuum Gaussian transforms to a unit-mass Gaussian") {
  auto g = grid_1d(64, 7.0);
  std::vector<cplx> c(g->size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::exp(-0.5 * g->xi_norm2(i));
  auto w = fourier_to_phase(*g, c);
  KahanSum mass;
  for (auto& z : w) mass.add(z.real());
  CHECK(mass.value() * g->cell_x_p() == doctest::Approx(1.0).epsilon(1e-6));
  for (auto& z : w) CHECK(std::abs(z.imag()) < 1e-10);
}

TEST_CASE("delta spike maps back to the constant field") {
  auto g = grid_1d(32, 6.0);
  std::vector<cplx> f(g->size(), cplx{});
  f[g->origin_index()] = 1.0 / g->cell_x_p();  // unit mass
  auto c = fourier_from_phase(*g, f);
  for (auto& z : c) CHECK(std::abs(z - cplx(1.0, 0.0)) < 1e-10);
}

TEST_CASE("zero-frequency component equals total mass") {
  auto g = grid_1d(64, 7.0);
  std::vector<cplx> c(g->size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::exp(-0.5 * g->xi_norm2(i));
  auto w = fourier_to_phase(*g, c);
  auto back = fourier_from_phase(*g, w);
  CHECK(std::abs(back[g->origin_index()] - c[g->origin_index()]) < 1e-10);
}

TEST_CASE("transform round trip is the identity on random fields") {
  for (uint32_t dims = 1; dims <= 2; ++dims) {
    GridSpec s;
    s.dims = dims;
    s.points.assign(dims, dims == 1 ? 32 : 8);
    s.extent_lambda.assign(dims, 5.0);
    s.extent_mu.assign(dims, 4.0);
    auto g = PhaseGrid::create(s);
    auto c = random_field(*g, 17 + dims);
    auto back = fourier_from_phase(*g, fourier_to_phase(*g, c));
    double num = l2_distance(back, c);
    double den = std::sqrt(sum_abs2(c));
    CHECK(num / den < 1e-12);
  }
}

TEST_CASE("Parseval consistency under the declared convention") {
  auto g = grid_1d(32, 6.0);
  auto c = random_field(*g, 5);
  auto f = fourier_to_phase(*g, c);
  double lhs = sum_abs2(f) * g->cell_x_p();
  double rhs = sum_abs2(c) * g->cell_lambda_mu() / std::pow(2.0 * kPi, 2);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("spectral derivatives are exact for band-limited data") {
  auto g = grid_1d(32, kPi);  // Δλ = 2π/32: integer wavenumbers are exact modes
  std::vector<cplx> c(g->size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    double lam[1], mu[1];
    g->node(i, lam, mu);
    c[i] = std::sin(2.0 * lam[0]) * std::cos(3.0 * mu[0]);
  }
  auto d = spectral_derivative(*g, c, {1, 2});
  for (std::size_t i = 0; i < c.size(); ++i) {
    double lam[1], mu[1];
    g->node(i, lam, mu);
    double expect = 2.0 * std::cos(2.0 * lam[0]) * (-9.0) * std::cos(3.0 * mu[0]);
    CHECK(d[i].real() == doctest::Approx(expect).epsilon(1e-9));
    CHECK(std::abs(d[i].imag()) < 1e-9);
  }
}

TEST_CASE("reflected index pairs nodes periodically") {
  auto g = grid_1d(8, 2.0);
  std::size_t idx[2] = {3, 5};
  std::size_t i = g->flatten(idx);
  std::size_t j = g->reflected_index(i);
  std::size_t jdx[2];
  g->unflatten(j, jdx);
  CHECK(jdx[0] == 5);
  CHECK(jdx[1] == 3);
  std::size_t edge[2] = {0, 0};
  CHECK(g->reflected_index(g->flatten(edge)) == g->flatten(edge));
}

TEST_CASE("finite check flags NaN samples") {
  auto g = grid_1d(8, 2.0);
  CharField f(g, Ordering::kSymmetric);
  f.data[3] = cplx(std::nan(""), 0.0);
  CHECK_THROWS_AS(f.require_finite(), NumericError);
}
