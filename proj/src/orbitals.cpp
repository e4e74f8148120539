#include "fewbody/orbitals.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace fewbody {

namespace {

constexpr double kOrthonormalityTolerance = 1e-10;

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be positive");
}

MolecularOrbital make_mo(const std::string& label, const Geometry& g, std::initializer_list<double> coefficients) {
  Eigen::VectorXcd c(static_cast<Eigen::Index>(coefficients.size()));
  Eigen::Index i = 0;
  for (double v : coefficients) c(i++) = v;
  return MolecularOrbital(label, g, c).normalized();
}

// Löwdin orthonormalization C ← C (CᴴSC)^{-1/2}, applied only when the analytic coefficients miss.
MoSet finalize(std::vector<MolecularOrbital> orbitals) {
  MoSet set{std::move(orbitals), false};
  const Eigen::MatrixXcd gram = set.gram();
  const double deviation = (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
  if (deviation <= kOrthonormalityTolerance) return set;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram);
  const Eigen::MatrixXcd inv_sqrt = solver.eigenvectors() *
                                    solver.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                                    solver.eigenvectors().adjoint();
  const auto n = static_cast<Eigen::Index>(set.orbitals.size());
  Eigen::MatrixXcd coefficients(set.orbitals.front().coefficients().size(), n);
  for (Eigen::Index k = 0; k < n; ++k) coefficients.col(k) = set.orbitals[k].coefficients();
  const Eigen::MatrixXcd corrected = coefficients * inv_sqrt;
  std::vector<MolecularOrbital> fixed;
  for (Eigen::Index k = 0; k < n; ++k)
    fixed.emplace_back(set.orbitals[k].label(), set.orbitals[k].geometry(), corrected.col(k));
  return MoSet{std::move(fixed), true};
}

}  // namespace

double SiteOrbital::value(const Eigen::Vector2d& r) const {
  return std::exp(-(r - center).squaredNorm() / (2.0 * width * width)) / (std::sqrt(std::numbers::pi) * width);
}

Eigen::Vector2d SiteOrbital::gradient(const Eigen::Vector2d& r) const {
  return -(r - center) / (width * width) * value(r);
}

double overlap(const SiteOrbital& a, const SiteOrbital& b) {
  if (a.width != b.width) throw std::invalid_argument("overlap requires equal trap widths");
  return std::exp(-(a.center - b.center).squaredNorm() / (4.0 * a.width * a.width));
}

Geometry::Geometry(Kind kind, double a, double second, double width)
    : kind_(kind), a_(a), second_(second), width_(width) {
  require_positive(a, "a");
  require_positive(second, kind == Kind::triangle ? "h" : "b");
  require_positive(width, "width");
  if (kind == Kind::triangle) {
    sites_ = {{{0.0, second}, width}, {{-a / 2, 0.0}, width}, {{a / 2, 0.0}, width}};
  } else {
    sites_ = {{{-a / 2, second / 2}, width},
              {{-a / 2, -second / 2}, width},
              {{a / 2, -second / 2}, width},
              {{a / 2, second / 2}, width}};
  }
}

Geometry Geometry::triangle(double a, double h, double width) { return Geometry(Kind::triangle, a, h, width); }

Geometry Geometry::rectangle(double a, double b, double width) { return Geometry(Kind::rectangle, a, b, width); }

std::vector<std::string> Geometry::site_names() const {
  if (kind_ == Kind::triangle) return {"A", "B", "C"};
  return {"A", "B", "C", "D"};
}

Eigen::MatrixXd Geometry::overlap_matrix() const {
  const auto n = static_cast<Eigen::Index>(sites_.size());
  Eigen::MatrixXd s(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) s(i, j) = overlap(sites_[i], sites_[j]);
  return s;
}

bool Geometry::is_square(double tolerance) const {
  return kind_ == Kind::rectangle && std::abs(a_ - second_) <= tolerance * std::max(a_, second_);
}

MolecularOrbital::MolecularOrbital(std::string label, Geometry geometry, Eigen::VectorXcd coefficients)
    : label_(std::move(label)), geometry_(std::move(geometry)), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != static_cast<Eigen::Index>(geometry_.sites().size()))
    throw std::invalid_argument("one coefficient per site required");
}

bool MolecularOrbital::is_real() const { return coefficients_.imag().isZero(0.0); }

std::complex<double> MolecularOrbital::evaluate(const Eigen::Vector2d& r) const {
  std::complex<double> sum{};
  for (std::size_t k = 0; k < geometry_.sites().size(); ++k)
    sum += coefficients_(static_cast<Eigen::Index>(k)) * geometry_.sites()[k].value(r);
  return sum;
}

Eigen::Vector2cd MolecularOrbital::gradient(const Eigen::Vector2d& r) const {
  Eigen::Vector2cd sum = Eigen::Vector2cd::Zero();
  for (std::size_t k = 0; k < geometry_.sites().size(); ++k)
    sum += coefficients_(static_cast<Eigen::Index>(k)) * geometry_.sites()[k].gradient(r).cast<std::complex<double>>();
  return sum;
}

double MolecularOrbital::norm_squared() const {
  return (coefficients_.adjoint() * geometry_.overlap_matrix().cast<std::complex<double>>() * coefficients_)(0, 0).real();
}

MolecularOrbital MolecularOrbital::normalized() const {
  const double n2 = norm_squared();
  if (!(n2 > 0.0)) throw std::domain_error("molecular orbital has zero norm");
  return MolecularOrbital(label_, geometry_, coefficients_ / std::sqrt(n2));
}

std::complex<double> overlap(const MolecularOrbital& a, const MolecularOrbital& b) {
  return (a.coefficients().adjoint() * a.geometry().overlap_matrix().cast<std::complex<double>>() * b.coefficients())(0, 0);
}

TriangleParameters triangle_parameters(double s_ab, double s_bc, double s_ac) {
  return {1.0 / std::sqrt(3.0 + 2.0 * s_ab + 2.0 * s_bc + 2.0 * s_ac), 1.0 / std::sqrt(2.0 * (1.0 - s_bc)),
          (2.0 * (1.0 + s_bc) + s_ab + s_ac) / (1.0 + s_ab + s_ac)};
}

const MolecularOrbital& MoSet::at(const std::string& label) const {
  for (const auto& mo : orbitals)
    if (mo.label() == label) return mo;
  throw std::out_of_range("no molecular orbital labelled " + label);
}

Eigen::MatrixXcd MoSet::gram() const {
  const auto n = static_cast<Eigen::Index>(orbitals.size());
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = overlap(orbitals[i], orbitals[j]);
  return g;
}

MoSet triangle_mos(double a, double h, double width) {
  const Geometry g = Geometry::triangle(a, h, width);
  const auto& s = g.sites();
  const auto [q, p, f] = triangle_parameters(overlap(s[0], s[1]), overlap(s[1], s[2]), overlap(s[0], s[2]));
  // φ_g and φ_e′ are normalized by q and p already; normalized() only removes rounding.
  return finalize({make_mo("g", g, {q, q, q}), make_mo("e", g, {q * f, -q, -q}), make_mo("e'", g, {0.0, p, -p})});
}

MoSet rectangle_mos(double a, double b, double width) {
  const Geometry g = Geometry::rectangle(a, b, width);
  return finalize({make_mo("g", g, {1, 1, 1, 1}), make_mo("e", g, {1, -1, -1, 1}), make_mo("e'", g, {-1, -1, 1, 1}),
                   make_mo("e''", g, {-1, 1, -1, 1})});
}

std::vector<MolecularOrbital> degenerate_superpositions(const MolecularOrbital& e, const MolecularOrbital& e_prime) {
  if (!e.geometry().is_square() || !e_prime.geometry().is_square())
    throw std::invalid_argument("degenerate superpositions need the square geometry");
  const std::complex<double> i{0.0, 1.0};
  const double r = 1.0 / std::sqrt(2.0);
  const Eigen::VectorXcd& c1 = e.coefficients();
  const Eigen::VectorXcd& c2 = e_prime.coefficients();
  return {MolecularOrbital("e+e'", e.geometry(), r * (c1 + c2)).normalized(),
          MolecularOrbital("e-e'", e.geometry(), r * (c1 - c2)).normalized(),
          MolecularOrbital("e+ie'", e.geometry(), r * (c1 + i * c2)).normalized(),
          MolecularOrbital("e-ie'", e.geometry(), r * (c1 - i * c2)).normalized()};
}

}  // namespace fewbody
