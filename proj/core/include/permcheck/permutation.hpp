#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace permcheck {

// A bijection on {0..degree-1}, stored as the image list: images()[i] is
// where point i goes. Points are 0-based internally; all external text
// (cycle strings, group files) uses 1-based points.
class Permutation {
 public:
  // Validates that `images` is a bijection; throws std::invalid_argument.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}

  std::vector<int> images_;
};

// result(i) = a(b(i)); b acts first. Throws std::invalid_argument on
// degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

// "(1 2)(3 4)" with 1-based points, "()" for the identity.
std::string cycle_string(const Permutation& p);

// Parses disjoint-cycle notation with 1-based points, e.g. "(1 2)(3 4)" or
// the comma form "(1,2)(3,4)". "()" is the identity. A point repeated
// anywhere (the cycles would not be disjoint, so the result would not be a
// bijection) is a ParseError, as is any point outside 1..degree.
Permutation parse_cycles(std::string_view text, int degree);

}  // namespace permcheck
