#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fewbody/density_maps.hpp"

using namespace fewbody;

namespace {

GridSpec grid(int n, double half_width = 6.0) { return {-half_width, half_width, -half_width, half_width, n, n}; }

double reference_pair(int n, const MoSet& mos, const Eigen::Vector2d& r1, const Eigen::Vector2d& r2) {
  const double g1 = mos.at("g").evaluate(r1).real(), g2 = mos.at("g").evaluate(r2).real();
  const double e1 = mos.at("e").evaluate(r1).real(), e2 = mos.at("e").evaluate(r2).real();
  const double mixed = g1 * e1 * g2 * e2;
  if (n == 3) return (g1 * g1 * g2 * g2 + g1 * g1 * e2 * e2 + e1 * e1 * g2 * g2 - mixed) / 3.0;
  return (0.5 * g1 * g1 * g2 * g2 + 0.5 * e1 * e1 * e2 * e2 + g1 * g1 * e2 * e2 + e1 * e1 * g2 * g2 - mixed) / 3.0;
}

}  // namespace

TEST_CASE("grid layout") {
  const GridSpec s = grid(8, 4.0);
  CHECK(s.point(0, 0) == Eigen::Vector2d(-3.5, -3.5));
  CHECK(s.point(7, 7) == Eigen::Vector2d(3.5, 3.5));
  CHECK_THROWS(GridSpec{1, 0, -1, 1, 16, 16}.validate());
  CHECK_THROWS(GridSpec{-1, 1, -1, 1, 4, 16}.validate());
}

TEST_CASE("sampled Gaussian integrates to one") {
  const DensityGrid d = sample(grid(128), [](const Eigen::Vector2d& r) { return std::exp(-r.squaredNorm()) / std::numbers::pi; });
  CHECK(d.integral() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(d.values.rows() == 128);
}

TEST_CASE("single-particle densities are normalized") {
  for (const auto& [n, mos] : {std::pair{3, triangle_mos(2.0, 2.5)}, std::pair{4, rectangle_mos(2.0, 2.5)}}) {
    const DensityGrid rho = single_density(n, mos, grid(256, 7.0));
    CHECK(rho.integral() == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(rho.values.minCoeff() >= 0.0);
  }
  CHECK_THROWS(single_density(5, triangle_mos(2.0, 2.5), grid(16)));
}

TEST_CASE("pair kernel matches the closed-form pair densities and is coupling independent") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (const auto& [n, mos] : {std::pair{3, triangle_mos(2.0, 2.5)}, std::pair{4, rectangle_mos(2.0, 2.5)}})
    for (Statistics st : {Statistics::fermion, Statistics::boson}) {
      const PairKernel low(n, mos, Coupling::low, st), high(n, mos, Coupling::high, st);
      for (int k = 0; k < 200; ++k) {
        const Eigen::Vector2d r1(u(rng), u(rng)), r2(u(rng), u(rng));
        CHECK(std::abs(low(r1, r2) - reference_pair(n, mos, r1, r2)) < 1e-12);
        CHECK(std::abs(low(r1, r2) - high(r1, r2)) < 1e-12);
        CHECK(std::abs(low(r1, r2) - low(r2, r1)) < 1e-14);
        CHECK(std::abs(low.marginal(r1) - single_density_at(n, mos, r1)) < 1e-12);
      }
    }
}

TEST_CASE("coincidence values of the pair density") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (const auto& [n, mos] : {std::pair{3, triangle_mos(2.0, 2.5)}, std::pair{4, rectangle_mos(2.0, 2.5)}}) {
    const PairKernel kernel(n, mos);
    for (int k = 0; k < 100; ++k) {
      const Eigen::Vector2d r(u(rng), u(rng));
      const double g2 = std::norm(mos.at("g").evaluate(r)), e2 = std::norm(mos.at("e").evaluate(r));
      const double expected = n == 3 ? (g2 * g2 + g2 * e2) / 3.0 : (0.5 * g2 * g2 + 0.5 * e2 * e2 + g2 * e2) / 3.0;
      CHECK(std::abs(kernel(r, r) - expected) < 1e-14);
    }
  }
}

TEST_CASE("pair density integrates to the single density") {
  const MoSet mos = triangle_mos(2.0, 2.5);
  const PairKernel kernel(3, mos);
  const GridSpec s = grid(160, 7.0);
  for (const Eigen::Vector2d r1 : {Eigen::Vector2d(0.0, 2.5), Eigen::Vector2d(-1.0, 0.3), Eigen::Vector2d(0.7, 1.1)}) {
    const DensityGrid slice = sample(s, [&](const Eigen::Vector2d& r2) { return kernel(r1, r2); });
    CHECK(slice.integral() == doctest::Approx(kernel.marginal(r1)).epsilon(1e-8));
  }
}

TEST_CASE("conditional densities") {
  const MoSet mos = triangle_mos(2.0, 2.5);
  const PairKernel kernel(3, mos);
  const DensityGrid cond = conditional_density(kernel, {0.0, 2.5}, grid(64));
  CHECK(cond.integral() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cond.values.minCoeff() >= 0.0);
  CHECK_THROWS_AS(conditional_density(kernel, {80.0, 80.0}, grid(64)), std::domain_error);
  const PairKernel high(3, mos, Coupling::high);
  const DensityGrid other = conditional_density(high, {0.0, 2.5}, grid(64));
  CHECK((cond.values - other.values).abs().maxCoeff() <= 1e-10);
}

TEST_CASE("antibunching check") {
  const MoSet mos = rectangle_mos(2.0, 2.5);
  const PairKernel kernel(4, mos);
  const DensityGrid rho = single_density(4, mos, grid(64));
  const AntibunchingReport good = antibunching_check(kernel.as_function(), rho);
  CHECK(good.antibunched);
  CHECK(good.violations == 0);
  CHECK(good.max_ratio == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
  const PairFunction uncorrelated = [&](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return single_density_at(4, mos, a) * single_density_at(4, mos, b);
  };
  const AntibunchingReport bad = antibunching_check(uncorrelated, rho);
  CHECK(!bad.antibunched);
  CHECK(bad.violations == bad.qualifying_points);
}

TEST_CASE("probability flux of real and complex orbitals") {
  const MoSet mos = rectangle_mos(2.0, 2.0);
  const FluxGrid real_flux = probability_flux(mos.at("e"), grid(32));
  CHECK(real_flux.jx.abs().maxCoeff() == 0.0);
  CHECK(real_flux.jy.abs().maxCoeff() == 0.0);
  const auto combos = degenerate_superpositions(mos.at("e"), mos.at("e'"));
  const FluxGrid plus = probability_flux(combos[2], grid(64));
  const FluxGrid minus = probability_flux(combos[3], grid(64));
  CHECK((plus.jx + minus.jx).abs().maxCoeff() == 0.0);
  CHECK((plus.jy + minus.jy).abs().maxCoeff() == 0.0);
  CHECK(plus.jx.abs().maxCoeff() > 1e-3);
  const double c_plus = circulation(combos[2], Eigen::Vector2d::Zero(), std::sqrt(2.0));
  const double c_minus = circulation(combos[3], Eigen::Vector2d::Zero(), std::sqrt(2.0));
  CHECK(c_plus == doctest::Approx(-c_minus));
  CHECK(std::abs(c_plus) > 0.1);
  CHECK(circulation(mos.at("e"), Eigen::Vector2d::Zero(), 1.0) == 0.0);
}

TEST_CASE("discrete divergence is second-order accurate") {
  // (2 sin x cos 2y, -cos x sin 2y) is solenoidal; (x^2, y) has divergence 2x + 1.
  const auto make = [](int n, bool solenoidal) {
    const GridSpec s = grid(n, 2.0);
    FluxGrid f{s, Eigen::ArrayXXd(n, n), Eigen::ArrayXXd(n, n)};
    for (int iy = 0; iy < n; ++iy)
      for (int ix = 0; ix < n; ++ix) {
        const Eigen::Vector2d r = s.point(ix, iy);
        f.jx(iy, ix) = solenoidal ? 2.0 * std::sin(r.x()) * std::cos(2.0 * r.y()) : r.x() * r.x();
        f.jy(iy, ix) = solenoidal ? -std::cos(r.x()) * std::sin(2.0 * r.y()) : r.y();
      }
    return f;
  };
  double previous = 0.0;
  for (int n : {32, 64, 128}) {
    const DensityGrid d = divergence(make(n, true));
    const double interior = d.values.block(1, 1, n - 2, n - 2).abs().maxCoeff();
    if (previous > 0.0) CHECK(previous / interior == doctest::Approx(4.0).epsilon(0.05));
    previous = interior;
  }
  const DensityGrid exact = divergence(make(32, false));
  const GridSpec s = grid(32, 2.0);
  for (int iy = 1; iy < 31; ++iy)
    for (int ix = 1; ix < 31; ++ix) CHECK(exact.values(iy, ix) == doctest::Approx(2.0 * s.point(ix, iy).x() + 1.0));
}

TEST_CASE("local maxima") {
  const DensityGrid two = sample(grid(96, 6.0), [](const Eigen::Vector2d& r) {
    return std::exp(-(r - Eigen::Vector2d(-2.5, 0.0)).squaredNorm()) + 0.5 * std::exp(-(r - Eigen::Vector2d(2.5, 1.0)).squaredNorm());
  });
  const auto maxima = local_maxima(two);
  REQUIRE(maxima.size() == 2);
  for (const auto& m : maxima) {
    const bool near_first = (m.position - Eigen::Vector2d(-2.5, 0.0)).norm() < two.spec.dx();
    const bool near_second = (m.position - Eigen::Vector2d(2.5, 1.0)).norm() < two.spec.dx();
    CHECK((near_first || near_second));
  }
}
