#pragma once

#include <string>
#include <vector>

namespace fewbody {

// Zero-based image: position q is sent to image()[q].
class Permutation {
 public:
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  // Swaps zero-based positions i and j.
  static Permutation transposition(int n, int i, int j);
  // One-based image notation, e.g. {2, 3, 1}.
  static Permutation from_one_based(const std::vector<int>& image);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int q) const { return image_[q]; }
  const std::vector<int>& image() const { return image_; }

  int sign() const;
  Permutation inverse() const;
  std::string str() const;

  // (p * q)(i) = p(q(i)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

std::vector<Permutation> all_permutations(int n);

}  // namespace fewbody
