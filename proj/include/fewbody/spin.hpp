#pragma once

// Exact angular-momentum coupling for two to four spin-½ particles.
// Condon–Shortley phases. Coupled three-particle states couple the lone
// spin first, then the pair; pairs follow the cyclic order (2,3), (3,1), (1,2).

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "fewbody/exact.hpp"
#include "fewbody/permutation.hpp"

namespace fewbody {

struct HalfInteger {
  int twice = 0;

  constexpr bool is_integer() const { return twice % 2 == 0; }
  constexpr double value() const { return twice / 2.0; }
  std::string str() const;

  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) { return {a.twice + b.twice}; }
  friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) { return {a.twice - b.twice}; }
  friend constexpr HalfInteger operator-(HalfInteger a) { return {-a.twice}; }
  friend constexpr bool operator==(HalfInteger, HalfInteger) = default;
  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;
};

// half(1) = ½, half(2) = 1.
constexpr HalfInteger half(int twice) { return HalfInteger{twice}; }

Surd clebsch_gordan(HalfInteger j1, HalfInteger m1, HalfInteger j2, HalfInteger m2, HalfInteger J,
                    HalfInteger M);

// {j1 j2 j3; j4 j5 j6}
Surd wigner6j(HalfInteger j1, HalfInteger j2, HalfInteger j3, HalfInteger j4, HalfInteger j5,
              HalfInteger j6);

// Row-major {j1 j2 j3; j4 j5 j6; j7 j8 j9}.
Surd wigner9j(const std::array<HalfInteger, 9>& j);

// Product basis index: particle 1 is the most significant bit; bit set = projection −½.
class SpinState {
 public:
  explicit SpinState(int particle_count);

  static SpinState basis(const std::vector<int>& twice_projections);

  int particle_count() const { return particles_; }
  std::size_t dimension() const { return coefficients_.size(); }
  const Surd& operator[](std::size_t index) const { return coefficients_[index]; }
  Surd& operator[](std::size_t index) { return coefficients_[index]; }

  // Twice the projection of one particle in a basis vector.
  static int twice_projection(int particle_count, std::size_t index, int particle);

  bool is_zero() const;
  // (P·χ) with basis projections b moved to b'[p(q)] = b[q].
  SpinState permuted(const Permutation& p) const;
  std::string str() const;

  SpinState& operator+=(const SpinState& o);
  SpinState& operator-=(const SpinState& o);
  SpinState& operator*=(const Surd& f);
  friend SpinState operator+(SpinState a, const SpinState& b) { return a += b; }
  friend SpinState operator-(SpinState a, const SpinState& b) { return a -= b; }
  friend SpinState operator*(const Surd& f, SpinState a) { return a *= f; }
  friend bool operator==(const SpinState&, const SpinState&) = default;

 private:
  void require_same_size(const SpinState& o) const;

  int particles_;
  std::vector<Surd> coefficients_;
};

Surd spin_overlap(const SpinState& a, const SpinState& b);

// The pair partners of the lone particle, in cyclic order: 1 -> (2,3), 2 -> (3,1), 3 -> (1,2).
std::array<int, 2> cyclic_pair(int lone_particle);

SpinState coupled_state_3(int lone_particle, HalfInteger s_pair, HalfInteger M);

enum class Pairing { p12_34, p23_14, p31_24 };

inline constexpr std::array<Pairing, 3> kPairings{Pairing::p12_34, Pairing::p23_14, Pairing::p31_24};

std::array<std::array<int, 2>, 2> pairing_members(Pairing pairing);
std::string to_string(Pairing pairing);
Pairing parse_pairing(const std::string& text);

// |s s; 0 0⟩, first pair coupled first.
SpinState coupled_state_4(Pairing pairing, HalfInteger s_pair);

}  // namespace fewbody
