#include "fewbody/wavefunction.hpp"

#include <cmath>

namespace fewbody {

Assignment make_assignment(std::initializer_list<const char*> names) {
  Assignment out;
  for (const char* n : names) out.push_back(OrbitalLabel{n});
  return out;
}

std::string to_string(const Assignment& assignment) {
  std::string out;
  for (std::size_t q = 0; q < assignment.size(); ++q)
    out += assignment[q].name + "(" + std::to_string(q + 1) + ")";
  return out;
}

std::string to_string(Coupling c) { return c == Coupling::low ? "low" : "high"; }

Coupling parse_coupling(std::string_view text) {
  if (text == "low") return Coupling::low;
  if (text == "high") return Coupling::high;
  throw std::invalid_argument("unknown coupling: " + std::string(text));
}

namespace {

void require_family_size(int n) {
  if (n != 3 && n != 4) throw std::invalid_argument("particle count must be 3 or 4");
}

PositionSymmetry position_symmetry(Coupling coupling, Statistics statistics) {
  const bool symmetric = (coupling == Coupling::low) == (statistics == Statistics::fermion);
  return symmetric ? PositionSymmetry::pair_symmetric : PositionSymmetry::pair_antisymmetric;
}

}  // namespace

Assignment ground_assignment(int n) {
  require_family_size(n);
  return n == 3 ? make_assignment({"g", "g", "e"}) : make_assignment({"g", "g", "e", "e"});
}

YoungTableau family_tableau(int n, PositionSymmetry symmetry) {
  require_family_size(n);
  const YoungTableau base = n == 3 ? YoungTableau{{1, 2}, {3}} : YoungTableau{{1, 2}, {3, 4}};
  return symmetry == PositionSymmetry::pair_symmetric ? base : transpose(base);
}

Symmetrizer family_symmetrizer(int n, PositionSymmetry symmetry) {
  const YoungTableau tableau = family_tableau(n, symmetry);
  std::vector<int> rows;
  for (const auto& r : tableau) rows.push_back(static_cast<int>(r.size()));
  const auto order = symmetry == PositionSymmetry::pair_symmetric ? SymmetrizerOrder::columns_then_rows
                                                                  : SymmetrizerOrder::rows_then_columns;
  return build_symmetrizer(YoungDiagram(rows), tableau, order);
}

Permutation family_relabeling(int n, int member) {
  require_family_size(n);
  if (member < 0 || member > 2) throw std::invalid_argument("family member must be 0, 1 or 2");
  if (n == 3) {
    const int lone = member + 1;
    const auto [j, k] = cyclic_pair(lone);
    return Permutation::from_one_based({j, k, lone});
  }
  const auto members = pairing_members(kPairings[member]);
  return Permutation::from_one_based({members[0][0], members[0][1], members[1][0], members[1][1]});
}

PositionFamily ansatz_family(int n, PositionSymmetry symmetry, const Assignment& orbitals) {
  require_family_size(n);
  if (static_cast<int>(orbitals.size()) != n) throw std::invalid_argument("orbital assignment length mismatch");
  const ExactWavefunction g = apply_symmetrizer(family_symmetrizer(n, symmetry), ExactWavefunction::monomial(orbitals));
  return {permute_arguments(g, family_relabeling(n, 0)), permute_arguments(g, family_relabeling(n, 1)),
          permute_arguments(g, family_relabeling(n, 2))};
}

PositionFamily project_out_symmetric_sum(const PositionFamily& family) {
  const int n = family[0].particle_count();
  require_family_size(n);
  const Permutation cycle = n == 3 ? Permutation::from_one_based({2, 3, 1}) : Permutation::from_one_based({2, 3, 1, 4});
  if (permute_arguments(family[0], cycle) != family[1] || permute_arguments(family[1], cycle) != family[2])
    throw std::invalid_argument("family is not closed under the cyclic relabeling");
  ExactWavefunction third = family[0] + family[1] + family[2];
  third *= Surd(Rational(1, 3));
  return {family[0] - third, family[1] - third, family[2] - third};
}

SpinState spin_family_member(int n, int member, Coupling coupling, HalfInteger M) {
  require_family_size(n);
  const HalfInteger s = coupling == Coupling::low ? half(0) : half(2);
  if (n == 3) return coupled_state_3(member + 1, s, M);
  if (M != half(0)) throw std::invalid_argument("four-particle states have M = 0");
  return coupled_state_4(kPairings.at(member), s);
}

SpinPositionState::SpinPositionState(Statistics statistics, int particle_count, std::vector<SpinPositionPair> pairs)
    : statistics_(statistics), particles_(particle_count), pairs_(std::move(pairs)) {
  for (const auto& p : pairs_)
    if (p.spin.particle_count() != particles_ || p.position.particle_count() != particles_)
      throw std::invalid_argument("spin and position particle counts disagree");
}

Surd SpinPositionState::norm_squared() const { return inner_product(*this, *this); }

SpinPositionState SpinPositionState::permuted(const Permutation& p) const {
  std::vector<SpinPositionPair> out;
  for (const auto& pair : pairs_) out.push_back({pair.spin.permuted(p), permute_arguments(pair.position, p)});
  return SpinPositionState(statistics_, particles_, std::move(out));
}

Surd inner_product(const SpinPositionState& a, const SpinPositionState& b) {
  if (a.particle_count() != b.particle_count()) throw std::invalid_argument("particle count mismatch");
  Surd sum;
  for (const auto& x : a.pairs())
    for (const auto& y : b.pairs()) {
      const Surd spin = spin_overlap(x.spin, y.spin);
      if (!spin.is_zero()) sum += spin * position_inner_product(x.position, y.position);
    }
  return sum;
}

std::map<ProductBasisKey, Surd> expand(const SpinPositionState& state) {
  std::map<ProductBasisKey, Surd> out;
  for (const auto& pair : state.pairs())
    for (std::size_t s = 0; s < pair.spin.dimension(); ++s) {
      if (pair.spin[s].is_zero()) continue;
      for (const auto& [assignment, c] : pair.position.terms()) {
        Surd& slot = out[{s, assignment}];
        slot += pair.spin[s] * c;
        if (slot.is_zero()) out.erase({s, assignment});
      }
    }
  return out;
}

SpinPositionState assemble_state(int n, Coupling coupling, Statistics statistics, const Assignment& orbitals,
                                 HalfInteger M) {
  require_family_size(n);
  if (n == 3 && M != half(1) && M != half(-1)) throw std::invalid_argument("three-particle projection must be ±½");
  if (n == 4) M = half(0);
  const PositionFamily family =
      project_out_symmetric_sum(ansatz_family(n, position_symmetry(coupling, statistics), orbitals));
  if (family[0].is_zero() && family[1].is_zero() && family[2].is_zero())
    throw VanishingRepresentation("orbital assignment " + to_string(orbitals) +
                                  " annihilates the position representation");
  // Bosonic high-coupling parts carry an overall −1 so that boson and fermion densities agree at |C1| = |C2|.
  const Surd phase = statistics == Statistics::boson && coupling == Coupling::high ? Surd(-1) : Surd(1);
  std::vector<SpinPositionPair> pairs;
  for (int c = 0; c < 3; ++c) pairs.push_back({spin_family_member(n, c, coupling, M), phase * family[c]});
  SpinPositionState state(statistics, n, std::move(pairs));
  if (state.norm_squared().is_zero())
    throw VanishingRepresentation("assembled state has zero norm for " + to_string(orbitals));
  return state;
}

ExactDensity trace_kernel(const SpinPositionState& bra, const SpinPositionState& ket) {
  if (bra.particle_count() != ket.particle_count()) throw std::invalid_argument("particle count mismatch");
  ExactDensity out(bra.particle_count());
  for (const auto& x : bra.pairs())
    for (const auto& y : ket.pairs()) {
      const Surd spin = spin_overlap(x.spin, y.spin);
      if (spin.is_zero()) continue;
      for (const auto& [a, ca] : x.position.terms())
        for (const auto& [b, cb] : y.position.terms()) out.add(a, b, spin * conj(ca) * cb);
    }
  return out;
}

ExactDensity family_kernel(const PositionFamily& bra, const PositionFamily& ket) {
  ExactDensity out(bra[0].particle_count());
  for (int c = 0; c < 3; ++c)
    for (const auto& [a, ca] : bra[c].terms())
      for (const auto& [b, cb] : ket[c].terms()) out.add(a, b, conj(ca) * cb);
  return out;
}

std::optional<Surd> proportionality(const ExactDensity& kernel, const ExactDensity& reference) {
  if (kernel.coordinate_count() != reference.coordinate_count()) return std::nullopt;
  if (reference.is_zero()) return std::nullopt;
  const auto& [key, c] = *reference.terms().begin();
  if (!c.is_rational()) throw std::invalid_argument("reference kernel must have rational coefficients");
  auto it = kernel.terms().find(key);
  const Surd lambda = it == kernel.terms().end() ? Surd{} : it->second / c.rational_part();
  ExactDensity scaled(reference.coordinate_count());
  scaled.accumulate(reference, lambda);
  if (scaled == kernel) return lambda;
  return std::nullopt;
}

Density to_numeric(const ExactDensity& density) {
  return density.cast<std::complex<double>>([](const Surd& s) { return to_complex(s); });
}

Density spin_trace(const SpinPositionState& psi1, const SpinPositionState& psi2, std::complex<double> c1,
                   std::complex<double> c2) {
  if (psi1.statistics() != psi2.statistics()) throw std::invalid_argument("statistics mismatch between branches");
  if (psi1.particle_count() != psi2.particle_count()) throw std::invalid_argument("particle count mismatch");
  const double n1 = psi1.norm_squared().to_double();
  const double n2 = psi2.norm_squared().to_double();
  const double cross = std::sqrt(n1 * n2);
  Density out(psi1.particle_count());
  out.accumulate(to_numeric(trace_kernel(psi1, psi1)), std::norm(c1) / n1);
  out.accumulate(to_numeric(trace_kernel(psi2, psi2)), std::norm(c2) / n2);
  out.accumulate(to_numeric(trace_kernel(psi1, psi2)), std::conj(c1) * c2 / cross);
  out.accumulate(to_numeric(trace_kernel(psi2, psi1)), c1 * std::conj(c2) / cross);
  return out;
}

std::complex<double> evaluate_density(const Density& density, const OrbitalEvaluator& evaluator,
                                      std::span<const Eigen::Vector2d> coordinates) {
  if (static_cast<int>(coordinates.size()) != density.coordinate_count())
    throw std::invalid_argument("coordinate tuple length mismatch");
  std::vector<std::map<OrbitalLabel, std::complex<double>>> cache(coordinates.size());
  auto value = [&](std::size_t q, const OrbitalLabel& label) {
    auto [it, inserted] = cache[q].try_emplace(label);
    if (inserted) it->second = evaluator(label, coordinates[q]);
    return it->second;
  };
  std::complex<double> sum{};
  for (const auto& [key, c] : density.terms()) {
    std::complex<double> product = c;
    for (std::size_t q = 0; q < coordinates.size(); ++q)
      product *= std::conj(value(q, key.first[q])) * value(q, key.second[q]);
    sum += product;
  }
  return sum;
}

std::vector<std::complex<double>> evaluate_density(const Density& density, const OrbitalEvaluator& evaluator,
                                                   const std::vector<std::vector<Eigen::Vector2d>>& points) {
  std::vector<std::complex<double>> out;
  out.reserve(points.size());
  for (const auto& tuple : points) out.push_back(evaluate_density(density, evaluator, tuple));
  return out;
}

}  // namespace fewbody
