#include "writers.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "config.hpp"

namespace fewbody::cli {

namespace {

std::string header(const GridSpec& s) {
  return "# " + format_double(s.x_min) + " " + format_double(s.x_max) + " " + format_double(s.y_min) + " " +
         format_double(s.y_max) + " " + std::to_string(s.nx) + " " + std::to_string(s.ny) + "\n";
}

unsigned char to_byte(double fraction) {
  return static_cast<unsigned char>(std::lround(std::clamp(fraction, 0.0, 1.0) * 255.0));
}

}  // namespace

std::string grid_csv(const DensityGrid& grid) {
  std::string out = header(grid.spec);
  for (int iy = 0; iy < grid.spec.ny; ++iy)
    for (int ix = 0; ix < grid.spec.nx; ++ix) out += format_double(grid.values(iy, ix)) + "\n";
  return out;
}

std::string flux_csv(const FluxGrid& flux) {
  std::string out = header(flux.spec);
  for (int iy = 0; iy < flux.spec.ny; ++iy)
    for (int ix = 0; ix < flux.spec.nx; ++ix)
      out += format_double(flux.jx(iy, ix)) + "," + format_double(flux.jy(iy, ix)) + "\n";
  return out;
}

std::string grid_pgm(const DensityGrid& grid) {
  const double peak = grid.values.maxCoeff();
  std::string out = "P5\n" + std::to_string(grid.spec.nx) + " " + std::to_string(grid.spec.ny) + "\n255\n";
  for (int iy = grid.spec.ny - 1; iy >= 0; --iy)
    for (int ix = 0; ix < grid.spec.nx; ++ix)
      out.push_back(static_cast<char>(to_byte(peak > 0.0 ? grid.values(iy, ix) / peak : 0.0)));
  return out;
}

std::string flux_ppm(const FluxGrid& flux) {
  const Eigen::ArrayXXd magnitude = (flux.jx.square() + flux.jy.square()).sqrt();
  const double peak = magnitude.maxCoeff();
  std::string out = "P6\n" + std::to_string(flux.spec.nx) + " " + std::to_string(flux.spec.ny) + "\n255\n";
  for (int iy = flux.spec.ny - 1; iy >= 0; --iy)
    for (int ix = 0; ix < flux.spec.nx; ++ix) {
      const double value = peak > 0.0 ? magnitude(iy, ix) / peak : 0.0;
      const double hue = (std::atan2(flux.jy(iy, ix), flux.jx(iy, ix)) + std::numbers::pi) / (2.0 * std::numbers::pi);
      // HSV with full saturation.
      const double h6 = hue * 6.0;
      const int sector = static_cast<int>(h6) % 6;
      const double f = h6 - std::floor(h6);
      const double rgb[6][3] = {{1, f, 0}, {1 - f, 1, 0}, {0, 1, f}, {0, 1 - f, 1}, {f, 0, 1}, {1, 0, 1 - f}};
      for (int c = 0; c < 3; ++c) out.push_back(static_cast<char>(to_byte(value * rgb[sector][c])));
    }
  return out;
}

void write_file(const std::string& path, const std::string& contents) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

}  // namespace fewbody::cli
