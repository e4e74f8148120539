#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fewbody {

enum class Statistics { boson, fermion };

inline std::string to_string(Statistics s) { return s == Statistics::boson ? "boson" : "fermion"; }

inline Statistics parse_statistics(std::string_view text) {
  if (text == "boson" || text == "bosons") return Statistics::boson;
  if (text == "fermion" || text == "fermions") return Statistics::fermion;
  throw std::invalid_argument("unknown statistics: " + std::string(text));
}

}  // namespace fewbody
