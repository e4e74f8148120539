#pragma once

#include <string>
#include <vector>

#include "fewbody/permutation.hpp"
#include "fewbody/position_wavefunction.hpp"

namespace fewbody {

class YoungDiagram {
 public:
  explicit YoungDiagram(std::vector<int> partition);

  const std::vector<int>& rows() const { return rows_; }
  std::vector<int> column_lengths() const;
  int size() const;
  YoungDiagram transpose() const;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  std::vector<int> rows_;
};

// Rows of one-based particle indices.
using YoungTableau = std::vector<std::vector<int>>;

bool is_standard(const YoungDiagram& diagram, const YoungTableau& tableau);
YoungTableau transpose(const YoungTableau& tableau);

enum class SymmetrizerOrder { rows_then_columns, columns_then_rows };

struct WeightedPermutation {
  Permutation permutation;
  int weight;
};

// Formal sum Σ weight · permutation in the group algebra, acting on functions
// through permute_arguments.
struct Symmetrizer {
  int particle_count = 0;
  std::vector<WeightedPermutation> terms;
};

// rows_then_columns: symmetrize rows, then antisymmetrize columns.
Symmetrizer build_symmetrizer(const YoungDiagram& diagram, const YoungTableau& tableau, SymmetrizerOrder order);

Symmetrizer operator*(const Symmetrizer& a, const Symmetrizer& b);

template <typename Scalar>
PositionWavefunction<Scalar> apply_symmetrizer(const Symmetrizer& sym, const PositionWavefunction<Scalar>& wf) {
  if (sym.particle_count != wf.particle_count()) throw std::invalid_argument("symmetrizer size mismatch");
  PositionWavefunction<Scalar> out(wf.particle_count());
  for (const auto& [p, weight] : sym.terms) {
    PositionWavefunction<Scalar> moved = permute_arguments(wf, p);
    moved *= Scalar(weight);
    out += moved;
  }
  return out;
}

}  // namespace fewbody
