#include "fewbody/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fewbody {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || v >= size() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::transposition(int n, int i, int j) {
  Permutation p = identity(n);
  if (i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("transposition index out of range");
  std::swap(p.image_[i], p.image_[j]);
  return p;
}

Permutation Permutation::from_one_based(const std::vector<int>& image) {
  std::vector<int> zero(image.size());
  std::transform(image.begin(), image.end(), zero.begin(), [](int v) { return v - 1; });
  return Permutation(std::move(zero));
}

int Permutation::sign() const {
  std::vector<bool> visited(image_.size(), false);
  int transpositions = 0;
  for (int start = 0; start < size(); ++start) {
    if (visited[start]) continue;
    int length = 0;
    for (int q = start; !visited[q]; q = image_[q]) {
      visited[q] = true;
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int q = 0; q < size(); ++q) inv[image_[q]] = q;
  return Permutation(std::move(inv));
}

std::string Permutation::str() const {
  std::string out = "[";
  for (int q = 0; q < size(); ++q) out += (q ? " " : "") + std::to_string(image_[q] + 1);
  return out + "]";
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> image(p.image_.size());
  for (int i = 0; i < p.size(); ++i) image[i] = p(q(i));
  return Permutation(std::move(image));
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 2 || n > 4) throw std::invalid_argument("permutation group size must be 2, 3 or 4");
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

}  // namespace fewbody
