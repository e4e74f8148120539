#include "experiments.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "fewbody/density_maps.hpp"
#include "fewbody/orbitals.hpp"
#include "fewbody/spin.hpp"
#include "fewbody/wavefunction.hpp"
#include "writers.hpp"

namespace fewbody::cli {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4;
constexpr double kAmplitudeTolerance = 1e-12;

// 1H, 1V, 2H, 2V.
Occupation occ(int n1h, int n1v, int n2h, int n2v) { return {n1h, n1v, n2h, n2v}; }

StateVector pair(Statistics s, const Occupation& first, double c1, const Occupation& second, double c2) {
  return StateVector::basis(s, first, c1) + StateVector::basis(s, second, c2);
}

std::string scientific(double v) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << v;
  return out.str();
}

MoSet mos_for(const ExperimentConfig& c) {
  if (c.geometry == "triangle") return triangle_mos(c.a, c.h);
  if (c.geometry == "rectangle") return rectangle_mos(c.a, c.b);
  return rectangle_mos(c.a, c.a);
}

OrbitalEvaluator resolve(const MoSet& mos) {
  return [&mos](const OrbitalLabel& label, const Eigen::Vector2d& r) { return mos.at(label.name).evaluate(r); };
}

// Real, linearly independent stand-ins for the labels I..IV.
std::complex<double> distinct_gaussians(const OrbitalLabel& label, const Eigen::Vector2d& r) {
  static const std::map<std::string, Eigen::Vector2d> centres{
      {"I", {0.0, 0.0}}, {"II", {1.0, 0.3}}, {"III", {-0.7, 1.1}}, {"IV", {0.4, -1.2}}};
  return std::exp(-(r - centres.at(label.name)).squaredNorm() / 2.0);
}

}  // namespace

void RunReport::check(std::string name, bool passed, std::string detail) {
  assertions.push_back({std::move(name), passed, std::move(detail)});
}

void RunReport::note(std::string key, std::string value) { summaries.emplace_back(std::move(key), std::move(value)); }

bool RunReport::all_passed() const {
  for (const auto& a : assertions)
    if (!a.passed) return false;
  return true;
}

std::string RunReport::str() const {
  std::ostringstream out;
  out << "== " << experiment << " ==\n";
  if (!input_echo.empty()) out << "-- input --\n" << input_echo;
  if (!summaries.empty()) {
    out << "-- summary --\n";
    for (const auto& [k, v] : summaries) out << k << ": " << v << "\n";
  }
  out << "-- assertions --\n";
  std::size_t passed = 0;
  for (const auto& a : assertions) {
    out << (a.passed ? "PASS  " : "FAIL  ") << a.name;
    if (!a.detail.empty()) out << "  [" << a.detail << "]";
    out << "\n";
    passed += a.passed ? 1 : 0;
  }
  out << passed << "/" << assertions.size() << " assertions passed\n";
  if (!outputs.empty()) {
    out << "-- outputs --\n";
    for (const auto& f : outputs) out << f << "\n";
  }
  return out.str();
}

StateVector hom_input(Statistics s, const std::string& name) {
  const double r = 1.0 / std::sqrt(2.0);
  if (name == "HH") return StateVector::basis(s, occ(1, 0, 1, 0));
  if (name == "VV") return StateVector::basis(s, occ(0, 1, 0, 1));
  if (name == "triplet") return pair(s, occ(1, 0, 0, 1), r, occ(0, 1, 1, 0), r);
  if (name == "singlet") return pair(s, occ(1, 0, 0, 1), r, occ(0, 1, 1, 0), -r);
  throw std::invalid_argument("unknown input state: " + name);
}

std::vector<HomOutcome> hom_outcomes() {
  const double r = 1.0 / std::sqrt(2.0);
  const std::complex<double> mi_r{0.0, -r};
  const auto B = Statistics::boson;
  const auto F = Statistics::fermion;
  const auto O = Convention::optical;
  const auto A = Convention::atomic;
  return {
      {"bosons HH, optical: NOON output", B, "HH", O, kQuarterPi, pair(B, occ(2, 0, 0, 0), r, occ(0, 0, 2, 0), -r)},
      {"bosons VV, optical: NOON output", B, "VV", O, kQuarterPi, pair(B, occ(0, 2, 0, 0), r, occ(0, 0, 0, 2), -r)},
      {"bosons symmetric polarization, optical: bunched", B, "triplet", O, kQuarterPi,
       pair(B, occ(1, 1, 0, 0), r, occ(0, 0, 1, 1), -r)},
      {"bosons antisymmetric polarization, optical: eigenstate with -1", B, "singlet", O, kQuarterPi,
       -1.0 * hom_input(B, "singlet")},
      {"fermions HH, optical: eigenstate with -1", F, "HH", O, kQuarterPi, -1.0 * hom_input(F, "HH")},
      {"fermions VV, optical: eigenstate with -1", F, "VV", O, kQuarterPi, -1.0 * hom_input(F, "VV")},
      {"fermions triplet M=0, optical: eigenstate with -1", F, "triplet", O, kQuarterPi,
       -1.0 * hom_input(F, "triplet")},
      {"fermions singlet, optical: bunched singlet", F, "singlet", O, kQuarterPi,
       pair(F, occ(1, 1, 0, 0), r, occ(0, 0, 1, 1), -r)},
      {"bosons aa, atomic pi/4: -i NOON output", B, "HH", A, kQuarterPi,
       StateVector::basis(B, occ(2, 0, 0, 0), mi_r) + StateVector::basis(B, occ(0, 0, 2, 0), mi_r)},
      {"bosons pseudospin triplet, atomic pi/4: -i bunched", B, "triplet", A, kQuarterPi,
       StateVector::basis(B, occ(1, 1, 0, 0), mi_r) + StateVector::basis(B, occ(0, 0, 1, 1), mi_r)},
      {"bosons pseudospin singlet, atomic pi/4: antibunched eigenstate", B, "singlet", A, kQuarterPi,
       hom_input(B, "singlet")},
  };
}

double bunching_probability(const StateVector& state) {
  double p = 0.0;
  double total = 0.0;
  for (const auto& [o, amp] : state.terms()) {
    total += std::norm(amp);
    if (o[0] + o[1] == 0 || o[2] + o[3] == 0) p += std::norm(amp);
  }
  return total > 0.0 ? p / total : 0.0;
}

RunReport run_hom(const ExperimentConfig& config) {
  RunReport report;
  report.experiment = "hom";
  std::vector<HomOutcome> selected;
  if (config.input == "all") {
    selected = hom_outcomes();
  } else {
    const StateVector in = hom_input(config.statistics, config.input);
    bool catalogued = false;
    for (auto& o : hom_outcomes())
      if (o.statistics == config.statistics && o.input == config.input && o.convention == config.convention &&
          (config.convention == Convention::optical || std::abs(o.theta - config.theta) <= 1e-9)) {
        o.theta = config.theta;
        selected.push_back(o);
        catalogued = true;
      }
    if (!catalogued) {
      const StateVector out = apply_mode_transform(in, beamsplitter(config.theta, config.convention));
      report.input_echo = "statistics = " + to_string(config.statistics) + "\ninput = " + config.input +
                          "\nconvention = " + to_string(config.convention) + "\ntheta = " +
                          format_double(config.theta) + "\n";
      report.note("in", to_string(in));
      report.note("out", to_string(out));
      report.note("bunching probability", format_double(bunching_probability(out)));
      report.check("norm preserved", std::abs(out.norm() - in.norm()) <= kAmplitudeTolerance);
      return report;
    }
  }
  for (const auto& o : selected) {
    const StateVector in = hom_input(o.statistics, o.input);
    const StateVector out = apply_mode_transform(in, beamsplitter(o.theta, o.convention));
    const double residual = max_abs_difference(out, o.expected);
    report.note(o.title + " | in", to_string(in));
    report.note(o.title + " | out", to_string(out));
    report.note(o.title + " | bunching probability", format_double(bunching_probability(out)));
    report.check(o.title, residual <= kAmplitudeTolerance, "max amplitude error " + scientific(residual));
  }
  return report;
}

RunReport run_density(const ExperimentConfig& config) {
  config.validate();
  RunReport report;
  report.experiment = "density";
  report.input_echo = serialize(config);
  const int n = config.particle_count();
  const MoSet mos = mos_for(config);
  const Geometry& geometry = mos.orbitals.front().geometry();
  const GridSpec& spec = config.grid;
  const std::string dir = config.output_dir + "/";
  auto emit = [&](const std::string& name, const std::string& contents) {
    write_file(dir + name, contents);
    report.outputs.push_back(dir + name);
  };

  report.note("particles", std::to_string(n));
  report.note("conditional normalization", "unit integral over the grid");
  report.note("flux units", "hbar/m = 1, j = Im(phi* grad phi)");
  report.note("orthonormalization fallback", mos.fallback_orthonormalized ? "applied" : "not needed");
  const Eigen::MatrixXcd gram = mos.gram();
  const double gram_error = (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
  report.check("molecular orbitals orthonormal", gram_error <= 1e-12, "max |G - I| " + scientific(gram_error));

  const DensityGrid rho = single_density(n, mos, spec);
  emit("single_density.csv", grid_csv(rho));
  emit("single_density.pgm", grid_pgm(rho));
  report.check("single density integrates to 1", std::abs(rho.integral() - 1.0) <= 1e-3,
               "integral " + format_double(rho.integral()));
  report.check("single density non-negative", rho.values.minCoeff() >= -1e-12);

  const PairKernel low(n, mos, Coupling::low, config.statistics);
  const PairKernel high(n, mos, Coupling::high, config.statistics);
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> ux(spec.x_min, spec.x_max), uy(spec.y_min, spec.y_max);
  double dual = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const Eigen::Vector2d r1(ux(rng), uy(rng)), r2(ux(rng), uy(rng));
    dual = std::max(dual, std::abs(low(r1, r2) - high(r1, r2)));
  }
  report.check("pair density independent of spin coupling", dual <= 1e-10, "max difference " + scientific(dual));

  const AntibunchingReport ab = antibunching_check(low.as_function(), rho);
  report.check("coincidence antibunching pair(r,r) < rho(r)^2", ab.antibunched,
               "max ratio " + format_double(ab.max_ratio) + " at (" + format_double(ab.argmax.x()) + ", " +
                   format_double(ab.argmax.y()) + "), " + std::to_string(ab.qualifying_points) + " points");

  std::vector<ConditioningPoint> points = config.conditioning;
  const auto names = geometry.site_names();
  if (points.empty())
    for (const auto& name : names) points.push_back({name, {}});
  for (auto& p : points) {
    if (p.site.empty()) continue;
    const auto it = std::find(names.begin(), names.end(), p.site);
    if (it == names.end()) throw std::invalid_argument("unknown site " + p.site);
    p.position = geometry.sites()[it - names.begin()].center;
  }
  int index = 0;
  for (const auto& p : points) {
    const std::string tag = p.site.empty() ? "point" + std::to_string(index) : p.site;
    ++index;
    const DensityGrid cond = conditional_density(low, p.position, spec);
    emit("conditional_" + tag + ".csv", grid_csv(cond));
    emit("conditional_" + tag + ".pgm", grid_pgm(cond));
    const double at_point = low(p.position, p.position) / low.marginal(p.position);
    const double unconditional = single_density_at(n, mos, p.position);
    report.check("conditioning at " + tag + " suppresses density there", at_point < unconditional,
                 "rho(r0|r0) " + format_double(at_point) + " vs rho(r0) " + format_double(unconditional));
  }

  // Full-coordinate density of C1 Ψ1 + C2 Ψ2 on the ground assignment.
  const Assignment ground = ground_assignment(n);
  const auto density_of = [&](Statistics s) {
    return spin_trace(assemble_state(n, Coupling::low, s, ground), assemble_state(n, Coupling::high, s, ground),
                      config.c1(), config.c2());
  };
  const Density full = density_of(config.statistics);
  report.note("full density trace", format_double(full.trace().real()));
  if (std::abs(config.c1() - std::conj(config.c2())) <= 1e-12) {
    const Density other = density_of(config.statistics == Statistics::boson ? Statistics::fermion : Statistics::boson);
    double worst = 0.0;
    std::vector<Eigen::Vector2d> tuple(n);
    for (int k = 0; k < 200; ++k) {
      for (auto& r : tuple) r = {ux(rng), uy(rng)};
      worst = std::max(worst, std::abs(evaluate_density(full, resolve(mos), tuple) -
                                       evaluate_density(other, resolve(mos), tuple)));
    }
    report.check("boson and fermion densities agree at C1 = C2*", worst <= 1e-10, "max difference " + scientific(worst));
  }

  if (geometry.is_square()) {
    const auto combos = degenerate_superpositions(mos.at("e"), mos.at("e'"));
    const FluxGrid plus = probability_flux(combos[2], spec);
    const FluxGrid minus = probability_flux(combos[3], spec);
    emit("flux_e+ie'.csv", flux_csv(plus));
    emit("flux_e-ie'.csv", flux_csv(minus));
    emit("flux_e+ie'.ppm", flux_ppm(plus));
    emit("flux_e-ie'.ppm", flux_ppm(minus));
    const double opposite = std::max((plus.jx + minus.jx).abs().maxCoeff(), (plus.jy + minus.jy).abs().maxCoeff());
    report.check("complex combinations carry opposite flux", opposite <= 1e-12, "max |j+ + j-| " + scientific(opposite));
    const double radius = config.a / std::sqrt(2.0);
    const double c_plus = circulation(combos[2], Eigen::Vector2d::Zero(), radius);
    const double c_minus = circulation(combos[3], Eigen::Vector2d::Zero(), radius);
    report.check("opposite circulation around the trap centre", c_plus * c_minus < 0.0,
                 "circulations " + format_double(c_plus) + ", " + format_double(c_minus));
    const FluxGrid real_flux = probability_flux(mos.at("e"), spec);
    report.check("real orbital carries no flux",
                 real_flux.jx.abs().maxCoeff() == 0.0 && real_flux.jy.abs().maxCoeff() == 0.0);
    const DensityGrid div = divergence(plus);
    report.note("flux max |j|", format_double(std::sqrt((plus.jx.square() + plus.jy.square()).maxCoeff())));
    report.note("flux max |div j| (discrete)", format_double(div.values.abs().maxCoeff()));
  }
  return report;
}

RunReport run_verify() {
  RunReport report;
  report.experiment = "verify";
  const HalfInteger h1 = half(1), zero = half(0), one = half(2);

  for (HalfInteger s : {zero, one}) {
    const Surd sixj = wigner6j(h1, h1, s, h1, h1, s);
    const int sign = s == zero ? 1 : -1;
    const Surd identity = Surd(1) + Surd(sign * 2 * (s.twice + 1)) * sixj;
    report.check("6j row identity, s = " + s.str(), identity.is_zero(), "{1/2 1/2 s; 1/2 1/2 s} = " + sixj.str());
  }

  for (HalfInteger M : {h1, -h1})
    for (Coupling c : {Coupling::low, Coupling::high}) {
      const SpinState sum = spin_family_member(3, 0, c, M) + spin_family_member(3, 1, c, M) +
                            spin_family_member(3, 2, c, M);
      report.check("three-particle " + to_string(c) + " pair states sum to zero, M = " + M.str(), sum.is_zero());
    }
  for (Coupling c : {Coupling::low, Coupling::high}) {
    const SpinState sum = spin_family_member(4, 0, c, zero) + spin_family_member(4, 1, c, zero) +
                          spin_family_member(4, 2, c, zero);
    report.check("four-particle " + to_string(c) + " pair states sum to zero", sum.is_zero());
  }
  {
    const Surd cross = spin_overlap(coupled_state_3(1, zero, h1), coupled_state_3(2, one, h1));
    const Surd expected = Surd::sqrt(Rational(3)) * wigner6j(h1, h1, one, h1, h1, zero);
    report.check("pair-singlet / pair-triplet overlap equals sqrt3 {1/2 1/2 1; 1/2 1/2 0}", cross == expected,
                 cross.str());
  }

  const Assignment generic3 = make_assignment({"I", "II", "III"});
  const Assignment generic4 = make_assignment({"I", "II", "III", "IV"});
  for (Statistics st : {Statistics::fermion, Statistics::boson}) {
    for (HalfInteger M : {h1, -h1}) {
      const Surd overlap = inner_product(assemble_state(3, Coupling::low, st, generic3, M),
                                         assemble_state(3, Coupling::high, st, generic3, M));
      report.check("<Psi1|Psi2> = 0, n = 3, " + to_string(st) + ", M = " + M.str(), overlap.is_zero(), overlap.str());
    }
    const Surd overlap =
        inner_product(assemble_state(4, Coupling::low, st, generic4), assemble_state(4, Coupling::high, st, generic4));
    report.check("<Psi1|Psi2> = 0, n = 4, " + to_string(st), overlap.is_zero(), overlap.str());
  }

  for (int n : {3, 4}) {
    const Assignment generic = n == 3 ? generic3 : generic4;
    for (Statistics st : {Statistics::fermion, Statistics::boson}) {
      const SpinPositionState psi = assemble_state(n, Coupling::low, st, generic, n == 3 ? h1 : zero);
      bool ok = true;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          auto swapped = expand(psi.permuted(Permutation::transposition(n, i, j)));
          if (st == Statistics::fermion)
            for (auto& [k, v] : swapped) v = -v;
          ok = ok && swapped == expand(psi);
        }
      report.check("exchange symmetry of assembled state, n = " + std::to_string(n) + ", " + to_string(st), ok);
    }
  }

  for (int n : {3, 4}) {
    const Assignment generic = n == 3 ? generic3 : generic4;
    const PositionFamily sym = ansatz_family(n, PositionSymmetry::pair_symmetric, generic);
    const PositionFamily anti = ansatz_family(n, PositionSymmetry::pair_antisymmetric, generic);
    report.check("raw pair-symmetric ansatz family sums to zero, n = " + std::to_string(n),
                 (sym[0] + sym[1] + sym[2]).is_zero());
    report.check("raw pair-antisymmetric ansatz family sums to zero, n = " + std::to_string(n),
                 (anti[0] + anti[1] + anti[2]).is_zero());
    // Member 0 pairs coordinates (2,3) for three particles and (1,2) for four.
    const Permutation swap12 = n == 3 ? Permutation::transposition(n, 1, 2) : Permutation::transposition(n, 0, 1);
    report.check("pair-symmetric family member symmetric in its pair, n = " + std::to_string(n),
                 permute_arguments(sym[0], swap12) == sym[0]);
    report.check("pair-antisymmetric family member antisymmetric in its pair, n = " + std::to_string(n),
                 permute_arguments(anti[0], swap12) == -anti[0]);
  }

  for (int n : {3, 4}) {
    const Assignment ground = ground_assignment(n);
    for (Statistics st : {Statistics::fermion, Statistics::boson}) {
      const std::string tag = "n = " + std::to_string(n) + ", " + to_string(st);
      const PositionSymmetry first = st == Statistics::fermion ? PositionSymmetry::pair_symmetric
                                                              : PositionSymmetry::pair_antisymmetric;
      const PositionSymmetry second = st == Statistics::fermion ? PositionSymmetry::pair_antisymmetric
                                                               : PositionSymmetry::pair_symmetric;
      const PositionFamily f1 = project_out_symmetric_sum(ansatz_family(n, first, ground));
      const PositionFamily f2 = project_out_symmetric_sum(ansatz_family(n, second, ground));
      const SpinPositionState psi1 = assemble_state(n, Coupling::low, st, ground);
      const SpinPositionState psi2 = assemble_state(n, Coupling::high, st, ground);

      const auto l1 = proportionality(trace_kernel(psi1, psi1), family_kernel(f1, f1));
      const auto l2 = proportionality(trace_kernel(psi2, psi2), family_kernel(f2, f2));
      report.check("spin trace of Psi1 gives 3/2 cyclic sum, " + tag, l1 && *l1 == Surd(Rational(3, 2)),
                   l1 ? l1->str() : "not proportional");
      report.check("spin trace of Psi2 gives 3/2 cyclic sum, " + tag, l2 && *l2 == Surd(Rational(3, 2)),
                   l2 ? l2->str() : "not proportional");

      const ExactDensity interference = trace_kernel(psi1, psi2);
      const auto li = proportionality(interference, family_kernel(f1, f2));
      const Surd target = -(Surd::sqrt(Rational(3)) / Rational(2));
      const Surd x01 = spin_overlap(spin_family_member(n, 0, Coupling::low, n == 3 ? h1 : zero),
                                    spin_family_member(n, 1, Coupling::high, n == 3 ? h1 : zero));
      const Surd x02 = spin_overlap(spin_family_member(n, 0, Coupling::low, n == 3 ? h1 : zero),
                                    spin_family_member(n, 2, Coupling::high, n == 3 ? h1 : zero));
      report.check("interference kernel is -sqrt3/2 cyclic sum, " + tag, li && *li == target,
                   (li ? "factor " + li->str() : std::string("not proportional")) + "; spin cross overlaps " +
                       x01.str() + ", " + x02.str());
      report.check("interference kernel empty for ground assignment, " + tag, interference.is_zero(),
                   std::to_string(interference.terms().size()) + " terms; normalized <Psi1|Psi2> = " +
                       format_double(inner_product(psi1, psi2).to_double() /
                                     std::sqrt(psi1.norm_squared().to_double() * psi2.norm_squared().to_double())));

      const ExactDensity pair1 = marginalize(trace_kernel(psi1, psi1), {0, 1});
      const ExactDensity pair2 = marginalize(trace_kernel(psi2, psi2), {0, 1});
      const Rational scale = psi2.norm_squared().rational_part() / psi1.norm_squared().rational_part();
      ExactDensity scaled(2);
      scaled.accumulate(pair1, Surd(scale));
      report.check("normalized pair densities of Psi1 and Psi2 coincide, " + tag, scaled == pair2);
    }

    const Assignment generic = n == 3 ? generic3 : generic4;
    const std::complex<double> c1(0.6, 0.3), c2 = std::conj(c1);
    const Density fermi = spin_trace(assemble_state(n, Coupling::low, Statistics::fermion, generic),
                                     assemble_state(n, Coupling::high, Statistics::fermion, generic), c1, c2);
    const Density bose = spin_trace(assemble_state(n, Coupling::low, Statistics::boson, generic),
                                    assemble_state(n, Coupling::high, Statistics::boson, generic), c1, c2);
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    double worst = 0.0;
    std::vector<Eigen::Vector2d> tuple(n);
    for (int k = 0; k < 500; ++k) {
      for (auto& r : tuple) r = {u(rng), u(rng)};
      worst = std::max(worst, std::abs(evaluate_density(fermi, distinct_gaussians, tuple) -
                                       evaluate_density(bose, distinct_gaussians, tuple)));
    }
    report.check("boson and fermion densities agree pointwise at C1 = C2*, n = " + std::to_string(n),
                 worst <= 1e-10, "max difference " + scientific(worst));
  }
  return report;
}

}  // namespace fewbody::cli
