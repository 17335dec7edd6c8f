#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gpack {

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<std::size_t> parts;

  Partition() = default;
  explicit Partition(std::vector<std::size_t> p);
  static Partition parse(std::string_view text);   ///< "[6,4,2]", "6,4,2" or "6 4 2"

  std::size_t size() const noexcept;                 ///< N = sum of parts
  std::size_t rows() const noexcept { return parts.size(); }
  Partition conjugate() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// N! divided by the product of hook lengths; exact for N <= 20.
std::uint64_t hook_dimension(const Partition& lambda);

/// Partitions obtained by deleting one corner box, in order of the row the box is removed from
/// (bottom row last).
std::vector<Partition> branching(const Partition& lambda);

/// All partitions of n in reverse lexicographic order ([n] first).
std::vector<Partition> partitions_of(std::size_t n);

/// Standard Young tableau stored row by row; entry values are 1..N.
using Tableau = std::vector<std::vector<std::size_t>>;
std::vector<Tableau> standard_tableaux(const Partition& lambda);

}  // namespace gpack
