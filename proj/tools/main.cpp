#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "config.hpp"
#include "experiments.hpp"

namespace {

struct Overrides {
  std::string config_path;
  std::vector<std::string> settings;
  std::vector<std::pair<std::string, std::string>> flags;
};

// Registers --name as an override of configuration key `key`.
void add_setting_flag(CLI::App* app, Overrides& o, const std::string& name, const std::string& key,
                      const std::string& help) {
  app->add_option_function<std::string>(
      "--" + name, [&o, key](const std::string& v) { o.flags.emplace_back(key, v); }, help);
}

fewbody::cli::ExperimentConfig build_config(const std::string& experiment, const Overrides& o) {
  fewbody::cli::ExperimentConfig config;
  if (!o.config_path.empty()) config = fewbody::cli::load_config(o.config_path, config);
  config.experiment = experiment;
  if (const char* dir = std::getenv("FEWBODY_OUTPUT_DIR"); dir && *dir) config.output_dir = dir;
  for (const auto& [key, value] : o.flags) fewbody::cli::apply_setting(config, key, value);
  for (const auto& s : o.settings) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--set expects key=value, got " + s);
    fewbody::cli::apply_setting(config, s.substr(0, eq), s.substr(eq + 1));
  }
  config.validate();
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Few-body matter-wave interference: beamsplitter outcomes, symmetrized states, density maps"};
  app.require_subcommand(1);

  Overrides overrides;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", overrides.config_path, "key = value configuration file")->check(CLI::ExistingFile);
    sub->add_option("--set", overrides.settings, "configuration override key=value (repeatable)");
  };

  CLI::App* hom = app.add_subcommand("hom", "two-particle beamsplitter outcomes");
  common(hom);
  add_setting_flag(hom, overrides, "statistics", "statistics", "boson or fermion");
  add_setting_flag(hom, overrides, "input", "input", "HH, VV, triplet, singlet or all");
  add_setting_flag(hom, overrides, "convention", "convention", "optical or atomic");
  add_setting_flag(hom, overrides, "theta", "theta", "mixing angle in radians");

  CLI::App* density = app.add_subcommand("density", "spin-traced density, conditional and flux maps");
  common(density);
  add_setting_flag(density, overrides, "geometry", "geometry", "triangle, rectangle or square");
  add_setting_flag(density, overrides, "side-a", "a", "site spacing a");
  add_setting_flag(density, overrides, "height", "h", "triangle height h");
  add_setting_flag(density, overrides, "side-b", "b", "rectangle side b");
  add_setting_flag(density, overrides, "statistics", "statistics", "boson or fermion");
  add_setting_flag(density, overrides, "coupling", "coupling", "low or high");
  add_setting_flag(density, overrides, "conditioning", "conditioning", "sites or points, e.g. A;B or 0.5:1.0");
  add_setting_flag(density, overrides, "output-dir", "output_dir", "directory for CSV and heatmap files");
  add_setting_flag(density, overrides, "seed", "seed", "seed for randomized cross-checks");

  CLI::App* verify = app.add_subcommand("verify", "exact identity suite");

  CLI11_PARSE(app, argc, argv);

  try {
    fewbody::cli::RunReport report;
    if (hom->parsed()) {
      report = fewbody::cli::run_hom(build_config("hom", overrides));
    } else if (density->parsed()) {
      report = fewbody::cli::run_density(build_config("density", overrides));
    } else if (verify->parsed()) {
      report = fewbody::cli::run_verify();
    }
    std::cout << report.str();
    return report.all_passed() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
