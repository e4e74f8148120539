#pragma once

// Symbolic position wavefunctions over an orthonormal orbital alphabet.
// A term assigns one orbital label to each particle coordinate.

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fewbody/exact.hpp"
#include "fewbody/permutation.hpp"

namespace fewbody {

struct OrbitalLabel {
  std::string name;

  friend bool operator==(const OrbitalLabel&, const OrbitalLabel&) = default;
  friend auto operator<=>(const OrbitalLabel&, const OrbitalLabel&) = default;
};

using Assignment = std::vector<OrbitalLabel>;

Assignment make_assignment(std::initializer_list<const char*> names);
std::string to_string(const Assignment& assignment);

template <typename Scalar>
class PositionWavefunction {
 public:
  using Terms = std::map<Assignment, Scalar>;

  explicit PositionWavefunction(int particle_count) : particles_(particle_count) {
    if (particle_count < 1) throw std::invalid_argument("particle count must be positive");
  }

  static PositionWavefunction monomial(const Assignment& assignment, const Scalar& coefficient = Scalar(1)) {
    PositionWavefunction wf(static_cast<int>(assignment.size()));
    wf.add(assignment, coefficient);
    return wf;
  }

  int particle_count() const { return particles_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Assignment& assignment, const Scalar& coefficient) {
    if (static_cast<int>(assignment.size()) != particles_) throw std::invalid_argument("assignment length mismatch");
    auto [it, inserted] = terms_.try_emplace(assignment, coefficient);
    if (!inserted) it->second = it->second + coefficient;
    if (is_negligible(it->second)) terms_.erase(it);
  }

  PositionWavefunction& operator+=(const PositionWavefunction& o) {
    require_same_size(o);
    for (const auto& [a, c] : o.terms_) add(a, c);
    return *this;
  }
  PositionWavefunction& operator-=(const PositionWavefunction& o) {
    require_same_size(o);
    for (const auto& [a, c] : o.terms_) add(a, -c);
    return *this;
  }
  PositionWavefunction& operator*=(const Scalar& f) {
    Terms scaled;
    for (const auto& [a, c] : terms_) {
      Scalar v = c * f;
      if (!is_negligible(v)) scaled.emplace(a, std::move(v));
    }
    terms_ = std::move(scaled);
    return *this;
  }
  friend PositionWavefunction operator+(PositionWavefunction a, const PositionWavefunction& b) { return a += b; }
  friend PositionWavefunction operator-(PositionWavefunction a, const PositionWavefunction& b) { return a -= b; }
  friend PositionWavefunction operator*(const Scalar& f, PositionWavefunction a) { return a *= f; }
  friend PositionWavefunction operator-(PositionWavefunction a) { return a *= Scalar(-1); }
  friend bool operator==(const PositionWavefunction&, const PositionWavefunction&) = default;

  template <typename Other, typename Convert>
  PositionWavefunction<Other> cast(Convert convert) const {
    PositionWavefunction<Other> out(particles_);
    for (const auto& [a, c] : terms_) out.add(a, convert(c));
    return out;
  }

 private:
  void require_same_size(const PositionWavefunction& o) const {
    if (o.particles_ != particles_) throw std::invalid_argument("particle count mismatch");
  }

  int particles_;
  Terms terms_;
};

// (p·f)(x_1, ..., x_N) = f(x_{p(1)}, ..., x_{p(N)}): the orbital at coordinate q moves to p(q).
// Composition: p·(q·f) = (p*q)·f.
template <typename Scalar>
PositionWavefunction<Scalar> permute_arguments(const PositionWavefunction<Scalar>& wf, const Permutation& p) {
  if (p.size() != wf.particle_count()) throw std::invalid_argument("permutation size mismatch");
  PositionWavefunction<Scalar> out(wf.particle_count());
  for (const auto& [assignment, coefficient] : wf.terms()) {
    Assignment moved(assignment.size());
    for (int q = 0; q < p.size(); ++q) moved[p(q)] = assignment[q];
    out.add(moved, coefficient);
  }
  return out;
}

template <typename Scalar>
Scalar position_inner_product(const PositionWavefunction<Scalar>& a, const PositionWavefunction<Scalar>& b) {
  if (a.particle_count() != b.particle_count()) throw std::invalid_argument("particle count mismatch");
  Scalar sum(0);
  for (const auto& [assignment, coefficient] : a.terms()) {
    auto it = b.terms().find(assignment);
    if (it != b.terms().end()) sum = sum + conj(coefficient) * it->second;
  }
  return sum;
}

template <typename Scalar>
std::string to_string(const PositionWavefunction<Scalar>& wf) {
  if (wf.is_zero()) return "0";
  std::string out;
  for (const auto& [assignment, coefficient] : wf.terms()) {
    if (!out.empty()) out += " + ";
    out += "[" + coefficient.str() + "]" + to_string(assignment);
  }
  return out;
}

}  // namespace fewbody
