#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "fewbody/fock.hpp"

using namespace fewbody;

namespace {

std::vector<Occupation> two_particle_occupations(Statistics s) {
  std::vector<Occupation> out;
  for (int i = 0; i < kModeCount; ++i)
    for (int j = i; j < kModeCount; ++j) {
      if (i == j && s == Statistics::fermion) continue;
      Occupation o{};
      ++o[i];
      ++o[j];
      out.push_back(o);
    }
  return out;
}

std::vector<Occupation> all_occupations(Statistics s, int max_particles) {
  std::vector<Occupation> out;
  const int cap = s == Statistics::fermion ? 1 : max_particles;
  for (int a = 0; a <= cap; ++a)
    for (int b = 0; b <= cap; ++b)
      for (int c = 0; c <= cap; ++c)
        for (int d = 0; d <= cap; ++d)
          if (a + b + c + d <= max_particles) out.push_back({a, b, c, d});
  return out;
}

StateVector random_state(Statistics s, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  StateVector out(s);
  for (const auto& o : two_particle_occupations(s)) out.add(o, {g(rng), g(rng)});
  out *= 1.0 / out.norm();
  return out;
}

StateVector vac(Statistics s) { return StateVector::vacuum(s); }

}  // namespace

TEST_CASE("mode ordering is site-major, spin-minor") {
  CHECK(mode_index({1, 0}) == 0);
  CHECK(mode_index({1, 1}) == 1);
  CHECK(mode_index({2, 0}) == 2);
  CHECK(mode_index({2, 1}) == 3);
  for (int k = 0; k < kModeCount; ++k) CHECK(mode_index(mode_at(k)) == k);
  CHECK(mode_name({2, 1}) == "2V");
  CHECK_THROWS(mode_index({3, 0}));
}

TEST_CASE("fermionic creation order fixes the sign") {
  const auto F = Statistics::fermion;
  for (int i = 0; i < kModeCount; ++i)
    for (int k = i + 1; k < kModeCount; ++k) {
      Occupation target{};
      target[i] = target[k] = 1;
      const StateVector ik = create(create(vac(F), mode_at(k)), mode_at(i));
      const StateVector ki = create(create(vac(F), mode_at(i)), mode_at(k));
      CHECK(ik.amplitude(target) == complex(1.0));
      CHECK(ki.amplitude(target) == complex(-1.0));

      Occupation lone{};
      lone[i] = 1;
      const StateVector removed = annihilate(StateVector::basis(F, target), mode_at(k));
      CHECK(removed.amplitude(lone) == complex(-1.0));
    }
}

TEST_CASE("Pauli exclusion and bosonic occupation factors") {
  const StateVector once = create(vac(Statistics::fermion), mode_at(2));
  CHECK(create(once, mode_at(2)).empty());
  const StateVector two = create(create(vac(Statistics::boson), mode_at(0)), mode_at(0));
  CHECK(std::abs(two.amplitude({2, 0, 0, 0}) - std::sqrt(2.0)) < 1e-15);
  const StateVector back = annihilate(two, mode_at(0));
  CHECK(std::abs(back.amplitude({1, 0, 0, 0}) - 2.0) < 1e-15);
  CHECK(annihilate(vac(Statistics::boson), mode_at(1)).empty());
}

TEST_CASE("canonical (anti)commutation relations on every basis state") {
  for (Statistics s : {Statistics::fermion, Statistics::boson}) {
    const double sign = s == Statistics::fermion ? 1.0 : -1.0;
    for (const auto& o : all_occupations(s, 2)) {
      const StateVector psi = StateVector::basis(s, o);
      for (int i = 0; i < kModeCount; ++i)
        for (int j = 0; j < kModeCount; ++j) {
          const Mode mi = mode_at(i), mj = mode_at(j);
          // a_i a†_j ± a†_j a_i = δ_ij
          StateVector mixed = annihilate(create(psi, mj), mi);
          StateVector other = create(annihilate(psi, mi), mj);
          other *= sign;
          mixed += other;
          StateVector expected(s);
          if (i == j) expected = psi;
          CHECK(max_abs_difference(mixed, expected) < 1e-14);

          StateVector cc = create(create(psi, mj), mi);
          StateVector cc2 = create(create(psi, mi), mj);
          cc2 *= sign;
          cc += cc2;
          StateVector aa = annihilate(annihilate(psi, mj), mi);
          StateVector aa2 = annihilate(annihilate(psi, mi), mj);
          aa2 *= sign;
          aa += aa2;
          if (s == Statistics::fermion || i != j) {
            CHECK(cc.empty());
            CHECK(aa.empty());
          }
        }
    }
  }
}

TEST_CASE("beamsplitters are unitary and preserve norm") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (Convention c : {Convention::optical, Convention::atomic}) {
    for (int k = 0; k < 500; ++k) {
      const Statistics s = k % 2 ? Statistics::boson : Statistics::fermion;
      const ModeTransform t = beamsplitter(angle(rng), c);
      REQUIRE(t.is_unitary());
      const StateVector in = random_state(s, rng);
      const StateVector out = apply_mode_transform(in, t);
      CHECK(std::abs(out.norm() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("mode transforms compose as matrices") {
  std::mt19937_64 rng(11);
  const ModeTransform t1 = beamsplitter(0.3, Convention::atomic);
  const ModeTransform t2 = beamsplitter(1.1, Convention::optical);
  for (Statistics s : {Statistics::fermion, Statistics::boson}) {
    const StateVector in = random_state(s, rng);
    const StateVector sequential = apply_mode_transform(apply_mode_transform(in, t1), t2);
    const StateVector combined = apply_mode_transform(in, t2 * t1);
    CHECK(max_abs_difference(sequential, combined) < 1e-12);
  }
}

TEST_CASE("vacuum is invariant and non-unitary maps are rejected") {
  const StateVector out = apply_mode_transform(vac(Statistics::boson), beamsplitter(0.4, Convention::optical));
  CHECK(out.amplitude({0, 0, 0, 0}) == complex(1.0));
  ModeTransform bad;
  bad.matrix(0, 0) = 2.0;
  CHECK_THROWS_AS(apply_mode_transform(vac(Statistics::boson), bad), std::invalid_argument);
}

TEST_CASE("optical beamsplitter at pi/4 is an involution") {
  const ModeTransform t = beamsplitter(std::numbers::pi / 4, Convention::optical);
  CHECK((t.matrix * t.matrix - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("accumulated phase integrates the detuning") {
  std::vector<PhaseSample> samples;
  for (int k = 0; k <= 1000; ++k) {
    const double t = std::numbers::pi * k / 1000.0;
    samples.push_back({t, std::sin(t)});
  }
  CHECK(accumulated_phase(samples) == doctest::Approx(-2.0).epsilon(1e-5));
  const std::vector<PhaseSample> constant{{0.0, 0.5}, {4.0, 0.5}};
  CHECK(accumulated_phase(constant) == doctest::Approx(-2.0));
  CHECK_THROWS(accumulated_phase(std::vector<PhaseSample>{{0.0, 1.0}}));
  CHECK_THROWS(accumulated_phase(std::vector<PhaseSample>{{1.0, 1.0}, {0.5, 1.0}}));
}

TEST_CASE("mixing statistics is rejected") {
  CHECK_THROWS(StateVector(Statistics::boson) + StateVector(Statistics::fermion));
}
