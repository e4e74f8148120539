#pragma once

// Scalar and vector fields on regular 2D grids. Cell-centred sampling,
// midpoint-rule integrals; array rows index y, columns index x.

#include <functional>
#include <vector>

#include <Eigen/Core>

#include "fewbody/orbitals.hpp"
#include "fewbody/wavefunction.hpp"

namespace fewbody {

struct GridSpec {
  double x_min = -6.0;
  double x_max = 6.0;
  double y_min = -6.0;
  double y_max = 6.0;
  int nx = 256;
  int ny = 256;

  void validate() const;
  double dx() const { return (x_max - x_min) / nx; }
  double dy() const { return (y_max - y_min) / ny; }
  double cell_area() const { return dx() * dy(); }
  Eigen::Vector2d point(int ix, int iy) const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

struct DensityGrid {
  GridSpec spec;
  Eigen::ArrayXXd values;  // ny × nx

  double integral() const { return values.sum() * spec.cell_area(); }
};

struct FluxGrid {
  GridSpec spec;
  Eigen::ArrayXXd jx;
  Eigen::ArrayXXd jy;
};

DensityGrid sample(const GridSpec& spec, const std::function<double(const Eigen::Vector2d&)>& field);

// ρ = (2/3)|φ_g|² + (1/3)|φ_e|² for three particles, (|φ_g|² + |φ_e|²)/2 for four.
double single_density_at(int n, const MoSet& mos, const Eigen::Vector2d& r);
DensityGrid single_density(int n, const MoSet& mos, const GridSpec& spec);

using PairFunction = std::function<double(const Eigen::Vector2d&, const Eigen::Vector2d&)>;

// Two-coordinate marginal of the spin-traced ground-state density, with orbital
// labels g and e resolved against an MO set.
class PairKernel {
 public:
  PairKernel(int n, const MoSet& mos, Coupling coupling = Coupling::low, Statistics statistics = Statistics::fermion);

  int particle_count() const { return n_; }
  const Density& symbolic() const { return pair_; }
  double operator()(const Eigen::Vector2d& r1, const Eigen::Vector2d& r2) const;
  // One-coordinate marginal of the same state.
  double marginal(const Eigen::Vector2d& r) const;
  PairFunction as_function() const;

 private:
  int n_;
  MoSet mos_;
  Density pair_;
  Density single_;
};

// ρ(r|r0) = pair(r, r0) normalized to unit grid integral.
DensityGrid conditional_density(const PairKernel& kernel, const Eigen::Vector2d& r0, const GridSpec& spec);

struct AntibunchingReport {
  bool antibunched = false;
  double max_ratio = 0.0;
  Eigen::Vector2d argmax = Eigen::Vector2d::Zero();
  std::size_t qualifying_points = 0;
  std::size_t violations = 0;
};

// pair(r, r) < ρ(r)² wherever ρ(r) > 1e-8.
AntibunchingReport antibunching_check(const PairFunction& pair, const DensityGrid& marginal);

// j = Im[φ* ∇φ] with ħ/m = 1.
FluxGrid probability_flux(const MolecularOrbital& mo, const GridSpec& spec);

// Central differences in the interior; one-sided on the boundary.
DensityGrid divergence(const FluxGrid& flux);

// ∮ j·dl counter-clockwise around a circle.
double circulation(const MolecularOrbital& mo, const Eigen::Vector2d& center, double radius, int samples = 2000);

struct LocalMaximum {
  Eigen::Vector2d position;
  double value;
};

// Strict local maxima over the 8-neighbourhood, interior cells only.
std::vector<LocalMaximum> local_maxima(const DensityGrid& grid, double relative_floor = 1e-3);

}  // namespace fewbody
