#pragma once

#include <cstddef>
#include <vector>

#include "maxplus/matrix.hpp"

namespace maxplus {

/// Bijection on {0..n-1}; image()[i] = sigma(i).
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidInput unless `image` is a bijection.
  explicit Permutation(std::vector<std::size_t> image);
  static Permutation identity(std::size_t n);
  /// Builds from disjoint cycles; unlisted points are fixed.
  static Permutation from_cycles(std::size_t n,
                                 const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_[i]; }
  const std::vector<std::size_t>& image() const { return image_; }

  Permutation inverse() const;
  bool is_identity() const;

  /// Disjoint cycles including fixed points, each starting at its smallest
  /// element, ordered by that element.
  std::vector<std::vector<std::size_t>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.image_ <=> b.image_;
  }

 private:
  std::vector<std::size_t> image_;
};

/// (x)_i A(i, sigma(i)).
Scalar permutation_weight(const Matrix& a, const Permutation& sigma);

struct PermanentResult {
  Scalar value;
  /// All permutations of weight `value`, ascending by image. Empty when the
  /// permanent is bottom.
  std::vector<Permutation> maximal_permutations;
  bool strong = false;
};

inline constexpr std::size_t kDefaultPermutationCap = 10000;

/// Tropical permanent with the full set of maximal permutations.
/// Throws EnumerationOverflow when more than `cap` maximal permutations exist.
PermanentResult permanent(const Matrix& a, std::size_t cap = kDefaultPermutationCap);

/// Permanent value only (O(n^3)).
Scalar permanent_value(const Matrix& a);

/// Heaviest permutation with the smallest image; ZeroPermanent if none
/// has finite weight.
Permutation first_maximal_permutation(const Matrix& a);

/// Exactly one maximal permutation. Throws ZeroPermanent.
bool has_strong_permanent(const Matrix& a);

}  // namespace maxplus
