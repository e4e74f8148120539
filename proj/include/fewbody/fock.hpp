#pragma once

// Second quantization over two sites times two spin labels.
// Mode order is frozen: 1H < 1H̄ < 2H < 2H̄ (site-major, spin-minor).

#include <array>
#include <complex>
#include <map>
#include <span>
#include <string>

#include <Eigen/Core>

#include "fewbody/statistics.hpp"

namespace fewbody {

using complex = std::complex<double>;

inline constexpr int kSiteCount = 2;
inline constexpr int kSpinCount = 2;
inline constexpr int kModeCount = kSiteCount * kSpinCount;

struct Mode {
  int site = 1;  // 1 or 2
  int spin = 0;  // 0 = H (a), 1 = H̄ (V, b)

  friend bool operator==(const Mode&, const Mode&) = default;
};

int mode_index(Mode m);
Mode mode_at(int index);
std::string mode_name(Mode m);

using Occupation = std::array<int, kModeCount>;

class StateVector {
 public:
  using Terms = std::map<Occupation, complex>;

  explicit StateVector(Statistics statistics) : statistics_(statistics) {}

  static StateVector vacuum(Statistics statistics);
  static StateVector basis(Statistics statistics, const Occupation& occupation, complex amplitude = 1.0);

  Statistics statistics() const { return statistics_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  complex amplitude(const Occupation& occupation) const;

  // Accumulates; entries that cancel below 1e-15 are dropped.
  void add(const Occupation& occupation, complex amplitude);

  double norm() const;

  StateVector& operator+=(const StateVector& other);
  StateVector& operator-=(const StateVector& other);
  StateVector& operator*=(complex factor);
  friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
  friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
  friend StateVector operator*(complex f, StateVector a) { return a *= f; }

 private:
  void require_compatible(const StateVector& other) const;

  Statistics statistics_;
  Terms terms_;
};

StateVector create(const StateVector& state, Mode mode);
StateVector annihilate(const StateVector& state, Mode mode);

complex inner_product(const StateVector& a, const StateVector& b);
double max_abs_difference(const StateVector& a, const StateVector& b);
std::string to_string(const StateVector& state);

// a†_j -> Σ_i matrix(i, j) a†_i; block-diagonal in spin.
struct ModeTransform {
  Eigen::Matrix4cd matrix = Eigen::Matrix4cd::Identity();

  static ModeTransform from_site_block(const Eigen::Matrix2cd& block);
  bool is_unitary(double tolerance = 1e-12) const;

  friend ModeTransform operator*(const ModeTransform& a, const ModeTransform& b) {
    return ModeTransform{a.matrix * b.matrix};
  }
};

enum class Convention { optical, atomic };

std::string to_string(Convention c);
Convention parse_convention(std::string_view text);

// optical: [[cos, sin], [sin, -cos]]; atomic: [[cos, -i sin], [-i sin, cos]].
ModeTransform beamsplitter(double theta, Convention convention);

// Vacuum phase fixed to zero.
StateVector apply_mode_transform(const StateVector& state, const ModeTransform& transform);

struct PhaseSample {
  double time;
  double detuning;
};

// θ = −∫Δ dt, trapezoid rule.
double accumulated_phase(std::span<const PhaseSample> trajectory);

}  // namespace fewbody
