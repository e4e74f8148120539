#pragma once

// Flat key=value experiment configuration with command-line overrides.

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fewbody/density_maps.hpp"
#include "fewbody/fock.hpp"
#include "fewbody/wavefunction.hpp"

namespace fewbody::cli {

struct ConditioningPoint {
  // Site name (A, B, ...) or empty for an explicit position.
  std::string site;
  Eigen::Vector2d position = Eigen::Vector2d::Zero();

  friend bool operator==(const ConditioningPoint& a, const ConditioningPoint& b) {
    return a.site == b.site && a.position == b.position;
  }
};

struct ExperimentConfig {
  std::string experiment = "density";

  // hom
  std::string input = "all";
  Convention convention = Convention::optical;
  double theta = 0.78539816339744830962;

  // density
  std::string geometry = "triangle";  // triangle, rectangle, square
  double a = 2.0;
  double h = 2.5;
  double b = 2.5;
  Coupling coupling = Coupling::low;
  Statistics statistics = Statistics::boson;
  double c1_magnitude = 1.0;
  double c1_phase = 0.0;
  double c2_magnitude = 0.0;
  double c2_phase = 0.0;
  GridSpec grid{};
  std::vector<ConditioningPoint> conditioning;  // empty: every site centre
  std::uint64_t seed = 20240601;
  std::string output_dir = "output";

  int particle_count() const { return geometry == "triangle" ? 3 : 4; }
  std::complex<double> c1() const { return std::polar(c1_magnitude, c1_phase); }
  std::complex<double> c2() const { return std::polar(c2_magnitude, c2_phase); }

  void validate() const;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

// Applies one key=value assignment; unknown keys and malformed values throw.
void apply_setting(ExperimentConfig& config, const std::string& key, const std::string& value);

ExperimentConfig parse_config(const std::string& text, ExperimentConfig base = {});
ExperimentConfig load_config(const std::string& path, ExperimentConfig base = {});
std::string serialize(const ExperimentConfig& config);

// Shortest round-tripping decimal form, independent of locale.
std::string format_double(double v);
double parse_double(const std::string& text);

}  // namespace fewbody::cli
