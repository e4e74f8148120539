#include "config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fewbody::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(const std::string& text) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) throw std::invalid_argument("not an integer: " + text);
  return v;
}

std::uint64_t parse_uint(const std::string& text) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) throw std::invalid_argument("not an unsigned integer: " + text);
  return v;
}

std::vector<std::string> split(const std::string& text, char separator) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, separator))
    if (!trim(item).empty()) out.push_back(trim(item));
  return out;
}

std::vector<ConditioningPoint> parse_conditioning(const std::string& text) {
  std::vector<ConditioningPoint> out;
  for (const auto& token : split(text, ';')) {
    const auto colon = token.find(':');
    if (colon == std::string::npos) {
      out.push_back({token, Eigen::Vector2d::Zero()});
    } else {
      out.push_back({"", {parse_double(token.substr(0, colon)), parse_double(token.substr(colon + 1))}});
    }
  }
  return out;
}

std::string serialize_conditioning(const std::vector<ConditioningPoint>& points) {
  std::string out;
  for (const auto& p : points) {
    if (!out.empty()) out += ";";
    out += p.site.empty() ? format_double(p.position.x()) + ":" + format_double(p.position.y()) : p.site;
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, v);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buffer, ptr);
}

double parse_double(const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size()) throw std::invalid_argument("not a number: " + text);
  return v;
}

void ExperimentConfig::validate() const {
  if (experiment != "hom" && experiment != "density" && experiment != "verify")
    throw std::invalid_argument("unknown experiment: " + experiment);
  if (geometry != "triangle" && geometry != "rectangle" && geometry != "square")
    throw std::invalid_argument("unknown geometry: " + geometry);
  for (double v : {a, h, b})
    if (!(v > 0.0)) throw std::invalid_argument("lengths must be positive");
  if (c1_magnitude < 0.0 || c2_magnitude < 0.0) throw std::invalid_argument("coefficient magnitudes must be non-negative");
  if (c1_magnitude == 0.0 && c2_magnitude == 0.0) throw std::invalid_argument("C1 and C2 cannot both vanish");
  grid.validate();
  if (output_dir.empty()) throw std::invalid_argument("output directory must be set");
}

void apply_setting(ExperimentConfig& c, const std::string& raw_key, const std::string& raw_value) {
  const std::string key = trim(raw_key);
  const std::string value = trim(raw_value);
  if (key == "experiment") c.experiment = value;
  else if (key == "input") c.input = value;
  else if (key == "convention") c.convention = parse_convention(value);
  else if (key == "theta") c.theta = parse_double(value);
  else if (key == "geometry") c.geometry = value;
  else if (key == "a") c.a = parse_double(value);
  else if (key == "h") c.h = parse_double(value);
  else if (key == "b") c.b = parse_double(value);
  else if (key == "coupling") c.coupling = parse_coupling(value);
  else if (key == "statistics") c.statistics = parse_statistics(value);
  else if (key == "c1_magnitude") c.c1_magnitude = parse_double(value);
  else if (key == "c1_phase") c.c1_phase = parse_double(value);
  else if (key == "c2_magnitude") c.c2_magnitude = parse_double(value);
  else if (key == "c2_phase") c.c2_phase = parse_double(value);
  else if (key == "grid_x_min") c.grid.x_min = parse_double(value);
  else if (key == "grid_x_max") c.grid.x_max = parse_double(value);
  else if (key == "grid_y_min") c.grid.y_min = parse_double(value);
  else if (key == "grid_y_max") c.grid.y_max = parse_double(value);
  else if (key == "grid_nx") c.grid.nx = parse_int(value);
  else if (key == "grid_ny") c.grid.ny = parse_int(value);
  else if (key == "conditioning") c.conditioning = parse_conditioning(value);
  else if (key == "seed") c.seed = parse_uint(value);
  else if (key == "output_dir") c.output_dir = value;
  else throw std::invalid_argument("unknown configuration key: " + key);
}

ExperimentConfig parse_config(const std::string& text, ExperimentConfig base) {
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string content = trim(line.substr(0, line.find('#')));
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(number) + ": expected key = value");
    apply_setting(base, content.substr(0, eq), content.substr(eq + 1));
  }
  return base;
}

ExperimentConfig load_config(const std::string& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read configuration file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), std::move(base));
}

std::string serialize(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "experiment = " << c.experiment << "\n"
      << "input = " << c.input << "\n"
      << "convention = " << to_string(c.convention) << "\n"
      << "theta = " << format_double(c.theta) << "\n"
      << "geometry = " << c.geometry << "\n"
      << "a = " << format_double(c.a) << "\n"
      << "h = " << format_double(c.h) << "\n"
      << "b = " << format_double(c.b) << "\n"
      << "coupling = " << to_string(c.coupling) << "\n"
      << "statistics = " << to_string(c.statistics) << "\n"
      << "c1_magnitude = " << format_double(c.c1_magnitude) << "\n"
      << "c1_phase = " << format_double(c.c1_phase) << "\n"
      << "c2_magnitude = " << format_double(c.c2_magnitude) << "\n"
      << "c2_phase = " << format_double(c.c2_phase) << "\n"
      << "grid_x_min = " << format_double(c.grid.x_min) << "\n"
      << "grid_x_max = " << format_double(c.grid.x_max) << "\n"
      << "grid_y_min = " << format_double(c.grid.y_min) << "\n"
      << "grid_y_max = " << format_double(c.grid.y_max) << "\n"
      << "grid_nx = " << c.grid.nx << "\n"
      << "grid_ny = " << c.grid.ny << "\n"
      << "conditioning = " << serialize_conditioning(c.conditioning) << "\n"
      << "seed = " << c.seed << "\n"
      << "output_dir = " << c.output_dir << "\n";
  return out.str();
}

}  // namespace fewbody::cli
