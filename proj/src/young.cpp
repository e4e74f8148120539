#include "fewbody/young.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace fewbody {

namespace {

// All permutations of {0..n-1} that move only the listed (zero-based) positions.
std::vector<Permutation> subgroup_on(int n, const std::vector<int>& positions) {
  std::vector<int> order = positions;
  std::sort(order.begin(), order.end());
  std::vector<int> arrangement = order;
  std::vector<Permutation> out;
  do {
    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 0);
    for (std::size_t k = 0; k < order.size(); ++k) image[order[k]] = arrangement[k];
    out.emplace_back(std::move(image));
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return out;
}

// Product of subgroup sums, one factor per row (or column).
Symmetrizer line_operator(int n, const std::vector<std::vector<int>>& lines, bool antisymmetric) {
  Symmetrizer out{n, {{Permutation::identity(n), 1}}};
  for (const auto& line : lines) {
    std::vector<int> zero_based;
    for (int v : line) zero_based.push_back(v - 1);
    Symmetrizer factor{n, {}};
    for (auto& p : subgroup_on(n, zero_based)) {
      const int weight = antisymmetric ? p.sign() : 1;
      factor.terms.push_back({std::move(p), weight});
    }
    out = out * factor;
  }
  return out;
}

}  // namespace

YoungDiagram::YoungDiagram(std::vector<int> partition) : rows_(std::move(partition)) {
  if (rows_.empty()) throw std::invalid_argument("empty partition");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1]) throw std::invalid_argument("partition must be non-increasing");
  }
}

std::vector<int> YoungDiagram::column_lengths() const {
  std::vector<int> cols(rows_.front(), 0);
  for (int r : rows_)
    for (int c = 0; c < r; ++c) ++cols[c];
  return cols;
}

int YoungDiagram::size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

YoungDiagram YoungDiagram::transpose() const { return YoungDiagram(column_lengths()); }

bool is_standard(const YoungDiagram& diagram, const YoungTableau& tableau) {
  if (tableau.size() != diagram.rows().size()) return false;
  std::vector<int> seen;
  for (std::size_t r = 0; r < tableau.size(); ++r) {
    if (static_cast<int>(tableau[r].size()) != diagram.rows()[r]) return false;
    for (std::size_t c = 0; c < tableau[r].size(); ++c) {
      if (c > 0 && tableau[r][c] <= tableau[r][c - 1]) return false;
      if (r > 0 && tableau[r][c] <= tableau[r - 1][c]) return false;
      seen.push_back(tableau[r][c]);
    }
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t k = 0; k < seen.size(); ++k)
    if (seen[k] != static_cast<int>(k) + 1) return false;
  return true;
}

YoungTableau transpose(const YoungTableau& tableau) {
  YoungTableau out;
  for (std::size_t r = 0; r < tableau.size(); ++r)
    for (std::size_t c = 0; c < tableau[r].size(); ++c) {
      if (out.size() <= c) out.emplace_back();
      out[c].push_back(tableau[r][c]);
    }
  return out;
}

Symmetrizer operator*(const Symmetrizer& a, const Symmetrizer& b) {
  if (a.particle_count != b.particle_count) throw std::invalid_argument("symmetrizer size mismatch");
  std::map<Permutation, int> collected;
  for (const auto& x : a.terms)
    for (const auto& y : b.terms) collected[x.permutation * y.permutation] += x.weight * y.weight;
  Symmetrizer out{a.particle_count, {}};
  for (const auto& [p, w] : collected)
    if (w != 0) out.terms.push_back({p, w});
  return out;
}

Symmetrizer build_symmetrizer(const YoungDiagram& diagram, const YoungTableau& tableau, SymmetrizerOrder order) {
  if (!is_standard(diagram, tableau)) throw std::invalid_argument("tableau is not standard for the diagram");
  const int n = diagram.size();
  const Symmetrizer rows = line_operator(n, tableau, false);
  const Symmetrizer columns = line_operator(n, transpose(tableau), true);
  // The right factor acts first.
  return order == SymmetrizerOrder::rows_then_columns ? columns * rows : rows * columns;
}

}  // namespace fewbody
