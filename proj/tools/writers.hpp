#pragma once

#include <string>

#include "fewbody/density_maps.hpp"

namespace fewbody::cli {

// Header `# x_min x_max y_min y_max nx ny`, then one value per line, row-major with y outermost.
std::string grid_csv(const DensityGrid& grid);
// As above with two columns jx,jy per line.
std::string flux_csv(const FluxGrid& flux);

// 8-bit greyscale, linear in value from 0 to the grid maximum; top image row is y_max.
std::string grid_pgm(const DensityGrid& grid);
// Hue encodes the flux direction, brightness its magnitude.
std::string flux_ppm(const FluxGrid& flux);

void write_file(const std::string& path, const std::string& contents);

}  // namespace fewbody::cli
