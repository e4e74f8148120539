#pragma once

#include <string>
#include <vector>

#include "config.hpp"
#include "fewbody/fock.hpp"

namespace fewbody::cli {

struct Assertion {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct RunReport {
  std::string experiment;
  std::string input_echo;
  std::vector<Assertion> assertions;
  std::vector<std::pair<std::string, std::string>> summaries;
  std::vector<std::string> outputs;

  void check(std::string name, bool passed, std::string detail = {});
  void note(std::string key, std::string value);
  bool all_passed() const;
  std::string str() const;
};

// Named two-particle inputs: HH, VV, triplet (symmetric in spin), singlet.
StateVector hom_input(Statistics statistics, const std::string& name);

struct HomOutcome {
  std::string title;
  Statistics statistics;
  std::string input;
  Convention convention;
  double theta;
  StateVector expected;
};

// The catalogued two-particle beamsplitter outcomes.
std::vector<HomOutcome> hom_outcomes();

// Probability that both particles leave through the same site.
double bunching_probability(const StateVector& state);

RunReport run_hom(const ExperimentConfig& config);
RunReport run_density(const ExperimentConfig& config);
RunReport run_verify();

}  // namespace fewbody::cli
