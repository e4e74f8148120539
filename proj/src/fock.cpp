#include "fewbody/fock.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace fewbody {

namespace {

constexpr double kDropThreshold = 1e-15;

void validate_occupation(Statistics statistics, const Occupation& occupation) {
  for (int n : occupation) {
    if (n < 0) throw std::invalid_argument("negative occupation");
    if (statistics == Statistics::fermion && n > 1)
      throw std::invalid_argument("fermionic occupation exceeds one");
  }
}

int occupied_before(const Occupation& occupation, int index) {
  int sum = 0;
  for (int i = 0; i < index; ++i) sum += occupation[i];
  return sum;
}

}  // namespace

int mode_index(Mode m) {
  if (m.site < 1 || m.site > kSiteCount || m.spin < 0 || m.spin >= kSpinCount)
    throw std::invalid_argument("mode out of range");
  return (m.site - 1) * kSpinCount + m.spin;
}

Mode mode_at(int index) {
  if (index < 0 || index >= kModeCount) throw std::invalid_argument("mode index out of range");
  return Mode{index / kSpinCount + 1, index % kSpinCount};
}

std::string mode_name(Mode m) {
  return std::to_string(m.site) + (m.spin == 0 ? "H" : "V");
}

StateVector StateVector::vacuum(Statistics statistics) {
  return basis(statistics, Occupation{});
}

StateVector StateVector::basis(Statistics statistics, const Occupation& occupation, complex amplitude) {
  validate_occupation(statistics, occupation);
  StateVector s(statistics);
  s.add(occupation, amplitude);
  return s;
}

complex StateVector::amplitude(const Occupation& occupation) const {
  auto it = terms_.find(occupation);
  return it == terms_.end() ? complex{} : it->second;
}

void StateVector::add(const Occupation& occupation, complex amplitude) {
  validate_occupation(statistics_, occupation);
  auto [it, inserted] = terms_.try_emplace(occupation, amplitude);
  if (!inserted) it->second += amplitude;
  if (std::abs(it->second) <= kDropThreshold) terms_.erase(it);
}

double StateVector::norm() const { return std::sqrt(inner_product(*this, *this).real()); }

void StateVector::require_compatible(const StateVector& other) const {
  if (statistics_ != other.statistics_) throw std::invalid_argument("statistics mismatch");
}

StateVector& StateVector::operator+=(const StateVector& other) {
  require_compatible(other);
  for (const auto& [occ, amp] : other.terms_) add(occ, amp);
  return *this;
}

StateVector& StateVector::operator-=(const StateVector& other) {
  require_compatible(other);
  for (const auto& [occ, amp] : other.terms_) add(occ, -amp);
  return *this;
}

StateVector& StateVector::operator*=(complex factor) {
  if (std::abs(factor) <= kDropThreshold) {
    terms_.clear();
    return *this;
  }
  for (auto& [occ, amp] : terms_) amp *= factor;
  return *this;
}

StateVector create(const StateVector& state, Mode mode) {
  const int k = mode_index(mode);
  StateVector out(state.statistics());
  for (const auto& [occupation, amp] : state.terms()) {
    Occupation o = occupation;
    if (state.statistics() == Statistics::boson) {
      const double factor = std::sqrt(o[k] + 1.0);
      o[k] += 1;
      out.add(o, amp * factor);
    } else {
      if (o[k] == 1) continue;
      const double sign = occupied_before(o, k) % 2 == 0 ? 1.0 : -1.0;
      o[k] = 1;
      out.add(o, amp * sign);
    }
  }
  return out;
}

StateVector annihilate(const StateVector& state, Mode mode) {
  const int k = mode_index(mode);
  StateVector out(state.statistics());
  for (const auto& [occupation, amp] : state.terms()) {
    Occupation o = occupation;
    if (o[k] == 0) continue;
    if (state.statistics() == Statistics::boson) {
      const double factor = std::sqrt(static_cast<double>(o[k]));
      o[k] -= 1;
      out.add(o, amp * factor);
    } else {
      const double sign = occupied_before(o, k) % 2 == 0 ? 1.0 : -1.0;
      o[k] = 0;
      out.add(o, amp * sign);
    }
  }
  return out;
}

complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.statistics() != b.statistics()) throw std::invalid_argument("statistics mismatch");
  complex sum{};
  for (const auto& [occ, amp] : a.terms()) sum += std::conj(amp) * b.amplitude(occ);
  return sum;
}

double max_abs_difference(const StateVector& a, const StateVector& b) {
  double worst = 0.0;
  for (const auto& [occ, amp] : a.terms()) worst = std::max(worst, std::abs(amp - b.amplitude(occ)));
  for (const auto& [occ, amp] : b.terms()) worst = std::max(worst, std::abs(amp - a.amplitude(occ)));
  return worst;
}

std::string to_string(const StateVector& state) {
  if (state.empty()) return "0";
  std::ostringstream out;
  out << std::setprecision(6);
  bool first = true;
  for (const auto& [occ, amp] : state.terms()) {
    if (!first) out << " + ";
    first = false;
    out << "(" << amp.real() << (amp.imag() < 0 ? "-" : "+") << std::abs(amp.imag()) << "i)|";
    bool any = false;
    for (int i = 0; i < kModeCount; ++i) {
      if (occ[i] == 0) continue;
      if (any) out << ",";
      out << occ[i] << "_" << mode_name(mode_at(i));
      any = true;
    }
    out << (any ? ">" : "0>");
  }
  return out.str();
}

ModeTransform ModeTransform::from_site_block(const Eigen::Matrix2cd& block) {
  ModeTransform t;
  t.matrix.setZero();
  for (int s1 = 1; s1 <= kSiteCount; ++s1)
    for (int s2 = 1; s2 <= kSiteCount; ++s2)
      for (int spin = 0; spin < kSpinCount; ++spin)
        t.matrix(mode_index({s1, spin}), mode_index({s2, spin})) = block(s1 - 1, s2 - 1);
  return t;
}

bool ModeTransform::is_unitary(double tolerance) const {
  return ((matrix.adjoint() * matrix) - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() <= tolerance;
}

std::string to_string(Convention c) { return c == Convention::optical ? "optical" : "atomic"; }

Convention parse_convention(std::string_view text) {
  if (text == "optical") return Convention::optical;
  if (text == "atomic") return Convention::atomic;
  throw std::invalid_argument("unknown convention: " + std::string(text));
}

ModeTransform beamsplitter(double theta, Convention convention) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const complex i{0.0, 1.0};
  Eigen::Matrix2cd block;
  if (convention == Convention::optical)
    block << c, s, s, -c;
  else
    block << c, -i * s, -i * s, c;
  return ModeTransform::from_site_block(block);
}

StateVector apply_mode_transform(const StateVector& state, const ModeTransform& transform) {
  if (!transform.is_unitary()) throw std::invalid_argument("mode transform is not unitary");
  const Statistics statistics = state.statistics();
  StateVector out(statistics);
  for (const auto& [occ, amp] : state.terms()) {
    // Canonical form: (∏ n!)^{-1/2} a†_{m1} ... a†_{mk} |0>, smallest mode leftmost.
    StateVector image = StateVector::vacuum(statistics);
    double factorials = 1.0;
    for (int k = kModeCount - 1; k >= 0; --k) {
      for (int rep = 0; rep < occ[k]; ++rep) {
        StateVector next(statistics);
        for (int i = 0; i < kModeCount; ++i) {
          const complex t = transform.matrix(i, k);
          if (t == complex{}) continue;
          next += t * create(image, mode_at(i));
        }
        image = std::move(next);
        factorials *= rep + 1;
      }
    }
    out += (amp / std::sqrt(factorials)) * image;
  }
  return out;
}

double accumulated_phase(std::span<const PhaseSample> trajectory) {
  if (trajectory.size() < 2) throw std::invalid_argument("phase trajectory needs at least two samples");
  double integral = 0.0;
  for (std::size_t i = 1; i < trajectory.size(); ++i) {
    const double dt = trajectory[i].time - trajectory[i - 1].time;
    if (!(dt > 0.0)) throw std::invalid_argument("phase trajectory times must increase strictly");
    integral += 0.5 * dt * (trajectory[i].detuning + trajectory[i - 1].detuning);
  }
  return -integral;
}

}  // namespace fewbody
