#pragma once

// Spin⊗position states of three and four particles with minimal total spin,
// their spin-traced densities, and marginals by orthonormal contraction.

#include <array>
#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "fewbody/exact.hpp"
#include "fewbody/position_wavefunction.hpp"
#include "fewbody/spin.hpp"
#include "fewbody/statistics.hpp"
#include "fewbody/young.hpp"

namespace fewbody {

// low: pair spins 0; high: pair spins 1.
enum class Coupling { low, high };

std::string to_string(Coupling c);
Coupling parse_coupling(std::string_view text);

// pair_symmetric: Φ symmetric in its pair coordinates (columns-first Young symmetrizer).
// pair_antisymmetric: the transposed pattern (rows-first on the transposed tableau).
enum class PositionSymmetry { pair_symmetric, pair_antisymmetric };

using ExactWavefunction = PositionWavefunction<Surd>;
using PositionFamily = std::array<ExactWavefunction, 3>;

// Doubly occupied ground orbital plus excited ones: {g,g,e} or {g,g,e,e}.
Assignment ground_assignment(int n);

// Young tableau used for one family, and the symmetrizer built from it.
YoungTableau family_tableau(int n, PositionSymmetry symmetry);
Symmetrizer family_symmetrizer(int n, PositionSymmetry symmetry);

// Argument order of family member c, one-based: n=3 members (1;2,3), (2;3,1), (3;1,2)
// are G(x_j, x_k, x_i); n=4 members (1,2;3,4), (2,3;1,4), (3,1;2,4) are G(x_i, x_j, x_k, x_l).
Permutation family_relabeling(int n, int member);

// Three cyclically relabeled copies of the Young-symmetrized monomial; not projected.
PositionFamily ansatz_family(int n, PositionSymmetry symmetry, const Assignment& orbitals);

// Subtracts one third of the family sum from each member.
PositionFamily project_out_symmetric_sum(const PositionFamily& family);

SpinState spin_family_member(int n, int member, Coupling coupling, HalfInteger M);

struct SpinPositionPair {
  SpinState spin;
  ExactWavefunction position;
};

class SpinPositionState {
 public:
  SpinPositionState(Statistics statistics, int particle_count, std::vector<SpinPositionPair> pairs);

  Statistics statistics() const { return statistics_; }
  int particle_count() const { return particles_; }
  const std::vector<SpinPositionPair>& pairs() const { return pairs_; }

  Surd norm_squared() const;
  // Acts on spin and position coordinates together.
  SpinPositionState permuted(const Permutation& p) const;

 private:
  Statistics statistics_;
  int particles_;
  std::vector<SpinPositionPair> pairs_;
};

Surd inner_product(const SpinPositionState& a, const SpinPositionState& b);

using ProductBasisKey = std::pair<std::size_t, Assignment>;
// Coefficients on (spin basis index, orbital assignment) product vectors.
std::map<ProductBasisKey, Surd> expand(const SpinPositionState& state);

class VanishingRepresentation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Unnormalized; the exact norm is available through norm_squared().
SpinPositionState assemble_state(int n, Coupling coupling, Statistics statistics, const Assignment& orbitals,
                                 HalfInteger M = half(1));

// Operator kernel Σ c · ∏_q conj(φ_bra[q](r_q)) φ_ket[q](r_q).
template <typename Scalar>
class ReducedDensity {
 public:
  using Key = std::pair<Assignment, Assignment>;
  using Terms = std::map<Key, Scalar>;

  explicit ReducedDensity(int coordinate_count) : coordinates_(coordinate_count) {}

  int coordinate_count() const { return coordinates_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Assignment& bra, const Assignment& ket, const Scalar& coefficient) {
    if (static_cast<int>(bra.size()) != coordinates_ || static_cast<int>(ket.size()) != coordinates_)
      throw std::invalid_argument("density assignment length mismatch");
    auto [it, inserted] = terms_.try_emplace(Key{bra, ket}, coefficient);
    if (!inserted) it->second = it->second + coefficient;
    if (is_negligible(it->second)) terms_.erase(it);
  }

  void accumulate(const ReducedDensity& o, const Scalar& factor) {
    if (o.coordinates_ != coordinates_) throw std::invalid_argument("density coordinate mismatch");
    for (const auto& [key, c] : o.terms_) add(key.first, key.second, c * factor);
  }

  bool is_hermitian() const {
    for (const auto& [key, c] : terms_) {
      auto it = terms_.find(Key{key.second, key.first});
      if (it == terms_.end() || !is_negligible(it->second - conj(c))) return false;
    }
    return true;
  }

  // Σ over diagonal terms: the full contraction of every coordinate.
  Scalar trace() const {
    Scalar sum(0);
    for (const auto& [key, c] : terms_)
      if (key.first == key.second) sum = sum + c;
    return sum;
  }

  template <typename Other, typename Convert>
  ReducedDensity<Other> cast(Convert convert) const {
    ReducedDensity<Other> out(coordinates_);
    for (const auto& [key, c] : terms_) out.add(key.first, key.second, convert(c));
    return out;
  }

  friend bool operator==(const ReducedDensity&, const ReducedDensity&) = default;

 private:
  int coordinates_;
  Terms terms_;
};

using ExactDensity = ReducedDensity<Surd>;
using Density = ReducedDensity<std::complex<double>>;

// Σ_{a,b} ⟨χ_a|χ_b⟩ Φ_a* ⊗ Φ_b with a from bra, b from ket.
ExactDensity trace_kernel(const SpinPositionState& bra, const SpinPositionState& ket);

// Σ_c Φ_c* ⊗ Φ'_c.
ExactDensity family_kernel(const PositionFamily& bra, const PositionFamily& ket);

// λ with kernel = λ · reference exactly, if one exists. The reference must have rational coefficients.
std::optional<Surd> proportionality(const ExactDensity& kernel, const ExactDensity& reference);

// Density of C1 Ψ1/‖Ψ1‖ + C2 Ψ2/‖Ψ2‖ over all coordinates.
Density spin_trace(const SpinPositionState& psi1, const SpinPositionState& psi2, std::complex<double> c1,
                   std::complex<double> c2);

// keep: zero-based coordinates, retained in the given order.
template <typename Scalar>
ReducedDensity<Scalar> marginalize(const ReducedDensity<Scalar>& density, const std::vector<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("marginal must keep at least one coordinate");
  std::vector<bool> kept(density.coordinate_count(), false);
  for (int q : keep) {
    if (q < 0 || q >= density.coordinate_count() || kept[q])
      throw std::invalid_argument("invalid coordinate in marginal");
    kept[q] = true;
  }
  ReducedDensity<Scalar> out(static_cast<int>(keep.size()));
  for (const auto& [key, c] : density.terms()) {
    bool contracts = true;
    for (int q = 0; q < density.coordinate_count() && contracts; ++q)
      if (!kept[q] && key.first[q] != key.second[q]) contracts = false;
    if (!contracts) continue;
    Assignment bra, ket;
    for (int q : keep) {
      bra.push_back(key.first[q]);
      ket.push_back(key.second[q]);
    }
    out.add(bra, ket, c);
  }
  return out;
}

Density to_numeric(const ExactDensity& density);

using OrbitalEvaluator = std::function<std::complex<double>(const OrbitalLabel&, const Eigen::Vector2d&)>;

// One value per coordinate tuple; each tuple holds one point per retained coordinate.
std::complex<double> evaluate_density(const Density& density, const OrbitalEvaluator& evaluator,
                                      std::span<const Eigen::Vector2d> coordinates);
std::vector<std::complex<double>> evaluate_density(const Density& density, const OrbitalEvaluator& evaluator,
                                                   const std::vector<std::vector<Eigen::Vector2d>>& points);

}  // namespace fewbody
