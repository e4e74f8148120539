#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fewbody/orbitals.hpp"

using namespace fewbody;

namespace {

double identity_error(const Eigen::MatrixXcd& gram) {
  return (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

// Trapezoid rule on a box wide enough that the Gaussian tails are below double precision.
double quadrature_overlap(const SiteOrbital& a, const SiteOrbital& b) {
  const double h = 0.04;
  const double x0 = std::min(a.center.x(), b.center.x()) - 9.0, x1 = std::max(a.center.x(), b.center.x()) + 9.0;
  const double y0 = std::min(a.center.y(), b.center.y()) - 9.0, y1 = std::max(a.center.y(), b.center.y()) + 9.0;
  double sum = 0.0;
  for (double x = x0; x <= x1; x += h)
    for (double y = y0; y <= y1; y += h) sum += a.value({x, y}) * b.value({x, y});
  return sum * h * h;
}

}  // namespace

TEST_CASE("site orbitals are normalized Gaussians") {
  const SiteOrbital s{{0.3, -0.2}, 1.0};
  CHECK(s.value(s.center) == doctest::Approx(1.0 / std::sqrt(std::numbers::pi)));
  CHECK(overlap(s, s) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(quadrature_overlap(s, s) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS(overlap(s, SiteOrbital{{0, 0}, 2.0}));
}

TEST_CASE("closed-form overlap matches numeric quadrature") {
  double worst = 0.0;
  for (double d = 0.0; d <= 6.0; d += 0.5) {
    const SiteOrbital a{{0.0, 0.0}, 1.0};
    const SiteOrbital b{{d * 0.6, d * 0.8}, 1.0};
    CHECK(overlap(a, b) == doctest::Approx(std::exp(-d * d / 4.0)).epsilon(1e-15));
    worst = std::max(worst, std::abs(overlap(a, b) - quadrature_overlap(a, b)));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("orbital gradients match finite differences") {
  const MoSet mos = triangle_mos(2.0, 2.5);
  const auto plus = degenerate_superpositions(rectangle_mos(2.0, 2.0).at("e"), rectangle_mos(2.0, 2.0).at("e'"))[2];
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const double h = 1e-5;
  for (int k = 0; k < 50; ++k) {
    const Eigen::Vector2d r(u(rng), u(rng));
    for (const MolecularOrbital& mo : {mos.at("g"), mos.at("e"), mos.at("e'"), plus}) {
      const Eigen::Vector2cd grad = mo.gradient(r);
      const std::complex<double> fx = (mo.evaluate(r + Eigen::Vector2d(h, 0)) - mo.evaluate(r - Eigen::Vector2d(h, 0))) / (2 * h);
      const std::complex<double> fy = (mo.evaluate(r + Eigen::Vector2d(0, h)) - mo.evaluate(r - Eigen::Vector2d(0, h))) / (2 * h);
      CHECK(std::abs(grad(0) - fx) < 1e-8);
      CHECK(std::abs(grad(1) - fy) < 1e-8);
    }
  }
}

TEST_CASE("geometry layouts") {
  const Geometry t = Geometry::triangle(2.0, 2.5);
  CHECK(t.sites()[0].center == Eigen::Vector2d(0.0, 2.5));
  CHECK(t.sites()[1].center == Eigen::Vector2d(-1.0, 0.0));
  CHECK(t.sites()[2].center == Eigen::Vector2d(1.0, 0.0));
  CHECK(t.site_names() == std::vector<std::string>{"A", "B", "C"});
  const Geometry r = Geometry::rectangle(2.0, 2.5);
  CHECK((r.sites()[0].center - r.sites()[1].center).norm() == doctest::Approx(2.5));
  CHECK((r.sites()[1].center - r.sites()[2].center).norm() == doctest::Approx(2.0));
  CHECK(!r.is_square());
  CHECK(Geometry::rectangle(2.0, 2.0).is_square());
  const Eigen::MatrixXd s = r.overlap_matrix();
  CHECK(s.isApprox(s.transpose()));
  CHECK(s(0, 0) == doctest::Approx(1.0));
  CHECK_THROWS(Geometry::triangle(-1.0, 2.0));
}

TEST_CASE("zero-overlap limits of the triangle coefficients") {
  const TriangleParameters p = triangle_parameters(0.0, 0.0, 0.0);
  CHECK(std::abs(p.q - 1.0 / std::sqrt(3.0)) <= 1e-16);
  CHECK(std::abs(p.p - 1.0 / std::sqrt(2.0)) <= 1e-16);
  CHECK(p.f == 2.0);
}

TEST_CASE("molecular orbital sets are orthonormal without fallback") {
  for (const MoSet& mos : {triangle_mos(2.0, 2.5), rectangle_mos(2.0, 2.5), rectangle_mos(2.0, 2.0), triangle_mos(1.0, 0.8),
                           rectangle_mos(1.2, 3.0)}) {
    CHECK(identity_error(mos.gram()) <= 1e-12);
    CHECK(!mos.fallback_orthonormalized);
    for (const auto& mo : mos.orbitals) CHECK(mo.is_real());
  }
  CHECK_THROWS_AS(triangle_mos(2.0, 2.5).at("e''"), std::out_of_range);
}

TEST_CASE("rectangle orbitals follow their sign patterns") {
  const MoSet mos = rectangle_mos(2.0, 2.5);
  const std::vector<std::pair<std::string, Eigen::Vector4d>> patterns{
      {"g", {1, 1, 1, 1}}, {"e", {1, -1, -1, 1}}, {"e'", {-1, -1, 1, 1}}, {"e''", {-1, 1, -1, 1}}};
  for (const auto& [label, signs] : patterns) {
    const Eigen::VectorXcd c = mos.at(label).coefficients();
    for (int k = 0; k < 4; ++k) CHECK(c(k).real() * signs(k) > 0.0);
  }
}

TEST_CASE("degenerate superpositions on the square") {
  const MoSet mos = rectangle_mos(2.0, 2.0);
  const auto combos = degenerate_superpositions(mos.at("e"), mos.at("e'"));
  REQUIRE(combos.size() == 4);
  CHECK(combos[2].label() == "e+ie'");
  for (const auto& mo : combos) CHECK(mo.norm_squared() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(!combos[2].is_real());
  CHECK(std::abs(overlap(combos[2], combos[3])) < 1e-14);
  CHECK(std::abs(overlap(combos[0], combos[1])) < 1e-14);
  const MoSet rect = rectangle_mos(2.0, 2.5);
  CHECK_THROWS(degenerate_superpositions(rect.at("e"), rect.at("e'")));
}
