#pragma once

// Gaussian trap orbitals and MO-LCAO combinations for the triangle and
// rectangle trap layouts. Lengths are in units of the oscillator length δx.

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace fewbody {

struct SiteOrbital {
  Eigen::Vector2d center = Eigen::Vector2d::Zero();
  double width = 1.0;

  // exp(−|r−c|²/(2w²)) / (√π w)
  double value(const Eigen::Vector2d& r) const;
  Eigen::Vector2d gradient(const Eigen::Vector2d& r) const;
};

// exp(−d²/(4w²)); widths must agree.
double overlap(const SiteOrbital& a, const SiteOrbital& b);

class Geometry {
 public:
  enum class Kind { triangle, rectangle };

  // Sites A=(0,h), B=(−a/2,0), C=(a/2,0).
  static Geometry triangle(double a, double h, double width = 1.0);
  // Sites A=(−a/2, b/2), B=(−a/2, −b/2), C=(a/2, −b/2), D=(a/2, b/2): |AB| = b, |BC| = a.
  static Geometry rectangle(double a, double b, double width = 1.0);

  Kind kind() const { return kind_; }
  double a() const { return a_; }
  // h for the triangle, b for the rectangle.
  double second() const { return second_; }
  double width() const { return width_; }
  const std::vector<SiteOrbital>& sites() const { return sites_; }
  std::vector<std::string> site_names() const;
  Eigen::MatrixXd overlap_matrix() const;
  bool is_square(double tolerance = 1e-12) const;

 private:
  Geometry(Kind kind, double a, double second, double width);

  Kind kind_;
  double a_;
  double second_;
  double width_;
  std::vector<SiteOrbital> sites_;
};

class MolecularOrbital {
 public:
  MolecularOrbital(std::string label, Geometry geometry, Eigen::VectorXcd coefficients);

  const std::string& label() const { return label_; }
  const Geometry& geometry() const { return geometry_; }
  const Eigen::VectorXcd& coefficients() const { return coefficients_; }
  bool is_real() const;

  std::complex<double> evaluate(const Eigen::Vector2d& r) const;
  Eigen::Vector2cd gradient(const Eigen::Vector2d& r) const;

  // c^H S c.
  double norm_squared() const;
  MolecularOrbital normalized() const;

 private:
  std::string label_;
  Geometry geometry_;
  Eigen::VectorXcd coefficients_;
};

// ⟨a|b⟩ under the site-overlap metric.
std::complex<double> overlap(const MolecularOrbital& a, const MolecularOrbital& b);

struct TriangleParameters {
  double q;
  double p;
  double f;
};

TriangleParameters triangle_parameters(double s_ab, double s_bc, double s_ac);

struct MoSet {
  std::vector<MolecularOrbital> orbitals;
  // Set when the coefficient choice missed orthonormality by more than 1e-10 and
  // symmetric orthonormalization was applied.
  bool fallback_orthonormalized = false;

  const MolecularOrbital& at(const std::string& label) const;
  Eigen::MatrixXcd gram() const;
};

// g, e, e′.
MoSet triangle_mos(double a, double h, double width = 1.0);
// g, e, e′, e″ with sign patterns (++++), (+−−+), (−−++), (−+−+) over A, B, C, D.
MoSet rectangle_mos(double a, double b, double width = 1.0);
// (e ± e′)/√2 and (e ± ie′)/√2, renormalized; labels e+e', e-e', e+ie', e-ie'.
std::vector<MolecularOrbital> degenerate_superpositions(const MolecularOrbital& e, const MolecularOrbital& e_prime);

}  // namespace fewbody
