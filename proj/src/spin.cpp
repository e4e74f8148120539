#include "fewbody/spin.hpp"

#include <algorithm>
#include <stdexcept>

namespace fewbody {

namespace {

constexpr HalfInteger kHalf = half(1);

bool triangle(HalfInteger a, HalfInteger b, HalfInteger c) {
  if (a.twice < 0 || b.twice < 0 || c.twice < 0) return false;
  if ((a.twice + b.twice + c.twice) % 2 != 0) return false;
  return c.twice >= std::abs(a.twice - b.twice) && c.twice <= a.twice + b.twice;
}

bool valid_projection(HalfInteger j, HalfInteger m) {
  return j.twice >= 0 && std::abs(m.twice) <= j.twice && (j.twice - m.twice) % 2 == 0;
}

// Argument given in doubled units; must be an even non-negative number.
int whole(int twice) {
  if (twice % 2 != 0 || twice < 0) throw std::logic_error("non-integral factorial argument");
  return twice / 2;
}

Surd sqrt_factorial(int twice) { return Surd::sqrt(Rational(factorial(whole(twice)))); }

Rational parity(int exponent) { return exponent % 2 == 0 ? Rational(1) : Rational(-1); }

// Δ(abc) = √[(a+b−c)!(a−b+c)!(−a+b+c)!/(a+b+c+1)!]
Surd triangle_coefficient(HalfInteger a, HalfInteger b, HalfInteger c) {
  Surd out = sqrt_factorial(a.twice + b.twice - c.twice) * sqrt_factorial(a.twice - b.twice + c.twice) *
             sqrt_factorial(-a.twice + b.twice + c.twice);
  return out * Surd::sqrt(Rational(1, factorial(whole(a.twice + b.twice + c.twice + 2))));
}

}  // namespace

std::string HalfInteger::str() const {
  return is_integer() ? std::to_string(twice / 2) : std::to_string(twice) + "/2";
}

Surd clebsch_gordan(HalfInteger j1, HalfInteger m1, HalfInteger j2, HalfInteger m2, HalfInteger J,
                    HalfInteger M) {
  if (!triangle(j1, j2, J) || !valid_projection(j1, m1) || !valid_projection(j2, m2) ||
      !valid_projection(J, M) || m1 + m2 != M)
    return Surd{};
  const int a = j1.twice, b = j2.twice, c = J.twice;
  Surd prefactor = Surd::sqrt(Rational(c + 1)) * sqrt_factorial(c + a - b) * sqrt_factorial(c - a + b) *
                   sqrt_factorial(a + b - c) * Surd::sqrt(Rational(1, factorial(whole(a + b + c + 2))));
  prefactor *= sqrt_factorial(c + M.twice) * sqrt_factorial(c - M.twice) * sqrt_factorial(a - m1.twice) *
               sqrt_factorial(a + m1.twice) * sqrt_factorial(b - m2.twice) * sqrt_factorial(b + m2.twice);
  Rational sum;
  for (int k = 0;; ++k) {
    const int tk = 2 * k;
    const int args[] = {tk,
                        a + b - c - tk,
                        a - m1.twice - tk,
                        b + m2.twice - tk,
                        c - b + m1.twice + tk,
                        c - a - m2.twice + tk};
    if (args[1] < 0 || args[2] < 0 || args[3] < 0) break;
    if (args[4] < 0 || args[5] < 0) continue;
    std::int64_t denominator = 1;
    for (int x : args) denominator *= factorial(whole(x));
    sum += parity(k) * Rational(1, denominator);
  }
  return prefactor * Surd(sum);
}

Surd wigner6j(HalfInteger j1, HalfInteger j2, HalfInteger j3, HalfInteger j4, HalfInteger j5,
              HalfInteger j6) {
  if (!triangle(j1, j2, j3) || !triangle(j1, j5, j6) || !triangle(j4, j2, j6) || !triangle(j4, j5, j3))
    return Surd{};
  const int a1 = j1.twice + j2.twice + j3.twice;
  const int a2 = j1.twice + j5.twice + j6.twice;
  const int a3 = j4.twice + j2.twice + j6.twice;
  const int a4 = j4.twice + j5.twice + j3.twice;
  const int b1 = j1.twice + j2.twice + j4.twice + j5.twice;
  const int b2 = j2.twice + j3.twice + j5.twice + j6.twice;
  const int b3 = j3.twice + j1.twice + j6.twice + j4.twice;
  const int t_min = std::max({a1, a2, a3, a4});
  const int t_max = std::min({b1, b2, b3});
  Rational sum;
  for (int t = t_min; t <= t_max; t += 2) {
    std::int64_t denominator = 1;
    for (int x : {t - a1, t - a2, t - a3, t - a4, b1 - t, b2 - t, b3 - t}) denominator *= factorial(whole(x));
    sum += parity(t / 2) * Rational(factorial(t / 2 + 1), denominator);
  }
  return triangle_coefficient(j1, j2, j3) * triangle_coefficient(j1, j5, j6) * triangle_coefficient(j4, j2, j6) *
         triangle_coefficient(j4, j5, j3) * Surd(sum);
}

Surd wigner9j(const std::array<HalfInteger, 9>& j) {
  const auto& [j1, j2, j3, j4, j5, j6, j7, j8, j9] = j;
  if (!triangle(j1, j2, j3) || !triangle(j4, j5, j6) || !triangle(j7, j8, j9) || !triangle(j1, j4, j7) ||
      !triangle(j2, j5, j8) || !triangle(j3, j6, j9))
    return Surd{};
  const int x_min = std::max({std::abs(j1.twice - j9.twice), std::abs(j4.twice - j8.twice),
                              std::abs(j2.twice - j6.twice)});
  const int x_max = std::min({j1.twice + j9.twice, j4.twice + j8.twice, j2.twice + j6.twice});
  Surd sum;
  for (int tx = x_min; tx <= x_max; tx += 2) {
    const HalfInteger x = half(tx);
    const Surd term = wigner6j(j1, j4, j7, j8, j9, x) * wigner6j(j2, j5, j8, j4, x, j6) *
                      wigner6j(j3, j6, j9, x, j1, j2);
    sum += Surd(parity(tx) * Rational(tx + 1)) * term;
  }
  return sum;
}

SpinState::SpinState(int particle_count) : particles_(particle_count) {
  if (particle_count < 1 || particle_count > 4) throw std::invalid_argument("spin particle count out of range");
  coefficients_.assign(std::size_t{1} << particle_count, Surd{});
}

SpinState SpinState::basis(const std::vector<int>& twice_projections) {
  SpinState s(static_cast<int>(twice_projections.size()));
  std::size_t index = 0;
  for (int m : twice_projections) {
    if (m != 1 && m != -1) throw std::invalid_argument("spin-½ projection must be ±½");
    index = (index << 1) | (m == -1 ? 1u : 0u);
  }
  s.coefficients_[index] = Surd(1);
  return s;
}

int SpinState::twice_projection(int particle_count, std::size_t index, int particle) {
  return (index >> (particle_count - 1 - particle)) & 1u ? -1 : 1;
}

bool SpinState::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](const Surd& c) { return c.is_zero(); });
}

SpinState SpinState::permuted(const Permutation& p) const {
  if (p.size() != particles_) throw std::invalid_argument("permutation size mismatch");
  SpinState out(particles_);
  for (std::size_t index = 0; index < coefficients_.size(); ++index) {
    std::size_t target = 0;
    for (int q = 0; q < particles_; ++q)
      if ((index >> (particles_ - 1 - q)) & 1u) target |= std::size_t{1} << (particles_ - 1 - p(q));
    out.coefficients_[target] = coefficients_[index];
  }
  return out;
}

std::string SpinState::str() const {
  std::string out;
  for (std::size_t index = 0; index < coefficients_.size(); ++index) {
    if (coefficients_[index].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "[" + coefficients_[index].str() + "]|";
    for (int q = 0; q < particles_; ++q) out += twice_projection(particles_, index, q) > 0 ? "u" : "d";
    out += ">";
  }
  return out.empty() ? "0" : out;
}

void SpinState::require_same_size(const SpinState& o) const {
  if (o.particles_ != particles_) throw std::invalid_argument("spin particle-count mismatch");
}

SpinState& SpinState::operator+=(const SpinState& o) {
  require_same_size(o);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += o.coefficients_[i];
  return *this;
}

SpinState& SpinState::operator-=(const SpinState& o) {
  require_same_size(o);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] -= o.coefficients_[i];
  return *this;
}

SpinState& SpinState::operator*=(const Surd& f) {
  for (auto& c : coefficients_) c *= f;
  return *this;
}

Surd spin_overlap(const SpinState& a, const SpinState& b) {
  if (a.particle_count() != b.particle_count()) throw std::invalid_argument("spin particle-count mismatch");
  Surd sum;
  for (std::size_t i = 0; i < a.dimension(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) sum += conj(a[i]) * b[i];
  return sum;
}

std::array<int, 2> cyclic_pair(int lone_particle) {
  switch (lone_particle) {
    case 1: return {2, 3};
    case 2: return {3, 1};
    case 3: return {1, 2};
    default: throw std::invalid_argument("lone particle index must be 1, 2 or 3");
  }
}

SpinState coupled_state_3(int lone_particle, HalfInteger s_pair, HalfInteger M) {
  const auto [first, second] = cyclic_pair(lone_particle);
  if (s_pair != half(0) && s_pair != half(2)) throw std::invalid_argument("pair spin must be 0 or 1");
  if (M != kHalf && M != -kHalf) throw std::invalid_argument("three-particle projection must be ±½");
  SpinState out(3);
  for (std::size_t index = 0; index < out.dimension(); ++index) {
    const HalfInteger m_lone = half(SpinState::twice_projection(3, index, lone_particle - 1));
    const HalfInteger m_a = half(SpinState::twice_projection(3, index, first - 1));
    const HalfInteger m_b = half(SpinState::twice_projection(3, index, second - 1));
    const HalfInteger mu = m_a + m_b;
    out[index] =
        clebsch_gordan(kHalf, m_lone, s_pair, mu, kHalf, M) * clebsch_gordan(kHalf, m_a, kHalf, m_b, s_pair, mu);
  }
  return out;
}

std::array<std::array<int, 2>, 2> pairing_members(Pairing pairing) {
  switch (pairing) {
    case Pairing::p12_34: return {{{1, 2}, {3, 4}}};
    case Pairing::p23_14: return {{{2, 3}, {1, 4}}};
    case Pairing::p31_24: return {{{3, 1}, {2, 4}}};
  }
  throw std::invalid_argument("invalid pairing");
}

std::string to_string(Pairing pairing) {
  switch (pairing) {
    case Pairing::p12_34: return "(12)(34)";
    case Pairing::p23_14: return "(23)(14)";
    case Pairing::p31_24: return "(31)(24)";
  }
  throw std::invalid_argument("invalid pairing");
}

Pairing parse_pairing(const std::string& text) {
  for (Pairing p : kPairings)
    if (to_string(p) == text) return p;
  throw std::invalid_argument("invalid pairing label: " + text);
}

SpinState coupled_state_4(Pairing pairing, HalfInteger s_pair) {
  if (s_pair != half(0) && s_pair != half(2)) throw std::invalid_argument("pair spin must be 0 or 1");
  const auto members = pairing_members(pairing);
  SpinState out(4);
  for (std::size_t index = 0; index < out.dimension(); ++index) {
    auto m = [&](int particle) { return half(SpinState::twice_projection(4, index, particle - 1)); };
    const HalfInteger mu1 = m(members[0][0]) + m(members[0][1]);
    const HalfInteger mu2 = m(members[1][0]) + m(members[1][1]);
    out[index] = clebsch_gordan(s_pair, mu1, s_pair, mu2, half(0), half(0)) *
                 clebsch_gordan(kHalf, m(members[0][0]), kHalf, m(members[0][1]), s_pair, mu1) *
                 clebsch_gordan(kHalf, m(members[1][0]), kHalf, m(members[1][1]), s_pair, mu2);
  }
  return out;
}

}  // namespace fewbody
