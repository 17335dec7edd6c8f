#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gpack {

using Point = std::uint16_t;

/// Bijection of {0, ..., degree-1} stored as its image array.
///
/// Composition follows function notation: (p * q)(i) = p(q(i)), so q acts first.
class Permutation {
public:
  Permutation() = default;
  /// Throws InvalidArgument if `images` is not a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  /// Cycles use 0-based points; points not listed are fixed.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles);
  /// Parses disjoint-cycle notation with 1-based points, e.g. "(1 2 3)(4 5)" or "(1,2)".
  static Permutation parse_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const noexcept;
  std::size_t order() const;
  std::size_t fixed_points() const noexcept;
  int sign() const;

  /// 1-based disjoint cycle notation; "()" for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<Point> images_;
};

std::size_t hash_images(std::span<const Point> images) noexcept;

}  // namespace gpack

template <>
struct std::hash<gpack::Permutation> {
  std::size_t operator()(const gpack::Permutation& p) const noexcept {
    return gpack::hash_images(p.images());
  }
};
