#include "fewbody/density_maps.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace fewbody {

namespace {

constexpr double kMarginalFloor = 1e-15;
constexpr double kQualifyingDensity = 1e-8;

OrbitalEvaluator resolver(const MoSet& mos) {
  return [&mos](const OrbitalLabel& label, const Eigen::Vector2d& r) { return mos.at(label.name).evaluate(r); };
}

}  // namespace

void GridSpec::validate() const {
  if (!(x_max > x_min) || !(y_max > y_min)) throw std::invalid_argument("grid ranges must be non-degenerate");
  if (nx < 8 || ny < 8) throw std::invalid_argument("grid resolution must be at least 8 per axis");
}

Eigen::Vector2d GridSpec::point(int ix, int iy) const {
  return {x_min + (ix + 0.5) * dx(), y_min + (iy + 0.5) * dy()};
}

DensityGrid sample(const GridSpec& spec, const std::function<double(const Eigen::Vector2d&)>& field) {
  spec.validate();
  DensityGrid grid{spec, Eigen::ArrayXXd(spec.ny, spec.nx)};
  for (int iy = 0; iy < spec.ny; ++iy)
    for (int ix = 0; ix < spec.nx; ++ix) grid.values(iy, ix) = field(spec.point(ix, iy));
  return grid;
}

double single_density_at(int n, const MoSet& mos, const Eigen::Vector2d& r) {
  const double g = std::norm(mos.at("g").evaluate(r));
  const double e = std::norm(mos.at("e").evaluate(r));
  if (n == 3) return 2.0 / 3.0 * g + 1.0 / 3.0 * e;
  if (n == 4) return 0.5 * g + 0.5 * e;
  throw std::invalid_argument("particle count must be 3 or 4");
}

DensityGrid single_density(int n, const MoSet& mos, const GridSpec& spec) {
  if (n != 3 && n != 4) throw std::invalid_argument("particle count must be 3 or 4");
  return sample(spec, [&](const Eigen::Vector2d& r) { return single_density_at(n, mos, r); });
}

PairKernel::PairKernel(int n, const MoSet& mos, Coupling coupling, Statistics statistics)
    : n_(n), mos_(mos), pair_(2), single_(1) {
  const SpinPositionState psi = assemble_state(n, coupling, statistics, ground_assignment(n));
  const Density full = spin_trace(psi, psi, 1.0, 0.0);
  pair_ = marginalize(full, {0, 1});
  single_ = marginalize(full, {0});
}

double PairKernel::operator()(const Eigen::Vector2d& r1, const Eigen::Vector2d& r2) const {
  const Eigen::Vector2d points[] = {r1, r2};
  return evaluate_density(pair_, resolver(mos_), points).real();
}

double PairKernel::marginal(const Eigen::Vector2d& r) const {
  const Eigen::Vector2d points[] = {r};
  return evaluate_density(single_, resolver(mos_), points).real();
}

PairFunction PairKernel::as_function() const {
  return [this](const Eigen::Vector2d& r1, const Eigen::Vector2d& r2) { return (*this)(r1, r2); };
}

DensityGrid conditional_density(const PairKernel& kernel, const Eigen::Vector2d& r0, const GridSpec& spec) {
  if (!(kernel.marginal(r0) > kMarginalFloor))
    throw std::domain_error("conditioning point has vanishing density");
  DensityGrid grid = sample(spec, [&](const Eigen::Vector2d& r) { return kernel(r, r0); });
  const double total = grid.integral();
  if (!(total > 0.0)) throw std::domain_error("conditional density integrates to zero on the grid");
  grid.values /= total;
  return grid;
}

AntibunchingReport antibunching_check(const PairFunction& pair, const DensityGrid& marginal) {
  AntibunchingReport report;
  report.max_ratio = -std::numeric_limits<double>::infinity();
  for (int iy = 0; iy < marginal.spec.ny; ++iy)
    for (int ix = 0; ix < marginal.spec.nx; ++ix) {
      const double rho = marginal.values(iy, ix);
      if (!(rho > kQualifyingDensity)) continue;
      const Eigen::Vector2d r = marginal.spec.point(ix, iy);
      const double ratio = pair(r, r) / (rho * rho);
      ++report.qualifying_points;
      if (!(ratio < 1.0)) ++report.violations;
      if (ratio > report.max_ratio) {
        report.max_ratio = ratio;
        report.argmax = r;
      }
    }
  report.antibunched = report.qualifying_points > 0 && report.violations == 0;
  return report;
}

FluxGrid probability_flux(const MolecularOrbital& mo, const GridSpec& spec) {
  spec.validate();
  FluxGrid flux{spec, Eigen::ArrayXXd(spec.ny, spec.nx), Eigen::ArrayXXd(spec.ny, spec.nx)};
  for (int iy = 0; iy < spec.ny; ++iy)
    for (int ix = 0; ix < spec.nx; ++ix) {
      const Eigen::Vector2d r = spec.point(ix, iy);
      const std::complex<double> phi = mo.evaluate(r);
      const Eigen::Vector2cd grad = mo.gradient(r);
      flux.jx(iy, ix) = (std::conj(phi) * grad(0)).imag();
      flux.jy(iy, ix) = (std::conj(phi) * grad(1)).imag();
    }
  return flux;
}

DensityGrid divergence(const FluxGrid& flux) {
  const GridSpec& s = flux.spec;
  DensityGrid out{s, Eigen::ArrayXXd(s.ny, s.nx)};
  auto d = [](const Eigen::ArrayXXd& f, int iy, int ix, int n, bool along_x, double h) {
    auto at = [&](int k) { return along_x ? f(iy, k) : f(k, ix); };
    const int i = along_x ? ix : iy;
    if (i == 0) return (at(1) - at(0)) / h;
    if (i == n - 1) return (at(n - 1) - at(n - 2)) / h;
    return (at(i + 1) - at(i - 1)) / (2.0 * h);
  };
  for (int iy = 0; iy < s.ny; ++iy)
    for (int ix = 0; ix < s.nx; ++ix)
      out.values(iy, ix) = d(flux.jx, iy, ix, s.nx, true, s.dx()) + d(flux.jy, iy, ix, s.ny, false, s.dy());
  return out;
}

double circulation(const MolecularOrbital& mo, const Eigen::Vector2d& center, double radius, int samples) {
  if (samples < 8) throw std::invalid_argument("circulation needs at least 8 samples");
  double sum = 0.0;
  const double step = 2.0 * std::numbers::pi / samples;
  for (int k = 0; k < samples; ++k) {
    const double t = k * step;
    const Eigen::Vector2d r = center + radius * Eigen::Vector2d(std::cos(t), std::sin(t));
    const std::complex<double> phi = mo.evaluate(r);
    const Eigen::Vector2cd grad = mo.gradient(r);
    const Eigen::Vector2d j((std::conj(phi) * grad(0)).imag(), (std::conj(phi) * grad(1)).imag());
    sum += j.dot(Eigen::Vector2d(-std::sin(t), std::cos(t))) * radius * step;
  }
  return sum;
}

std::vector<LocalMaximum> local_maxima(const DensityGrid& grid, double relative_floor) {
  const double floor = relative_floor * grid.values.maxCoeff();
  std::vector<LocalMaximum> out;
  for (int iy = 1; iy + 1 < grid.spec.ny; ++iy)
    for (int ix = 1; ix + 1 < grid.spec.nx; ++ix) {
      const double v = grid.values(iy, ix);
      if (v < floor) continue;
      bool is_max = true;
      for (int dy = -1; dy <= 1 && is_max; ++dy)
        for (int dx = -1; dx <= 1 && is_max; ++dx) {
          if (dx == 0 && dy == 0) continue;
          const double w = grid.values(iy + dy, ix + dx);
          // Ties broken towards the lower-left cell so a flat pair yields one maximum.
          if (w > v || (w == v && (dy < 0 || (dy == 0 && dx < 0)))) is_max = false;
        }
      if (is_max) out.push_back({grid.spec.point(ix, iy), v});
    }
  return out;
}

}  // namespace fewbody
