#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gpack/permutation.hpp"

namespace gpack {

/// Default limit on the number of stored elements (covers Sp6(2) at 1451520).
inline constexpr std::size_t kDefaultEnumerationCap = 2'000'000;

namespace detail {
class ElementStore;
}

/// Finite permutation group given by generators, optionally with every element stored.
///
/// Enumerated groups keep a breadth-first spanning tree of the Cayley graph:
/// element(i) == generator(generator_of(i)) * element(parent(i)) for every i > 0,
/// and element(0) is the identity. Objects are immutable and cheap to copy.
class PermGroup {
public:
  PermGroup() = default;
  /// Generators only; no enumeration is performed.
  PermGroup(std::size_t degree, std::vector<Permutation> generators, std::string name = {});

  /// Builds the group and enumerates it. Throws CapExceeded when the order exceeds `cap`.
  static PermGroup generated(std::size_t degree, std::vector<Permutation> generators,
                             std::string name = {}, std::size_t cap = kDefaultEnumerationCap);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::string& name() const noexcept { return name_; }
  /// Identifier shared by copies of the same group; used to reject mixed-group class functions.
  std::uint64_t id() const noexcept { return id_; }

  bool is_enumerated() const noexcept { return store_ != nullptr; }
  /// Throws InvalidArgument when the group has not been enumerated.
  std::size_t order() const;

  Permutation element(std::size_t index) const;
  std::span<const Point> element_images(std::size_t index) const;
  std::optional<std::size_t> index_of(std::span<const Point> images) const;
  std::optional<std::size_t> index_of(const Permutation& p) const { return index_of(p.images()); }
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

  /// Index of element(a) * element(b).
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse_index(std::size_t a) const;

  std::size_t parent(std::size_t index) const;
  std::size_t generator_of(std::size_t index) const;
  /// Children of `index` in the spanning tree.
  std::span<const std::uint32_t> children(std::size_t index) const;

  /// Copy with a different display name (same identity).
  PermGroup renamed(std::string name) const;

private:
  void require_enumerated() const;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::string name_;
  std::uint64_t id_ = 0;
  std::shared_ptr<const detail::ElementStore> store_;
};

/// Partition of an enumerated group into conjugacy classes. Class 0 is the identity.
struct ConjugacyClassPartition {
  std::uint64_t group_id = 0;
  std::size_t group_order = 0;
  std::vector<std::size_t> reps;            ///< element index of each class representative
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> element_orders;
  std::vector<std::size_t> inverse_class;   ///< class containing the inverses
  std::vector<std::uint32_t> class_of;      ///< class index of every element

  std::size_t size() const noexcept { return reps.size(); }
};

/// One representative per left coset gH, plus the coset of every element of G.
struct CosetTransversal {
  std::vector<std::size_t> reps;          ///< element indices into G
  std::vector<std::uint32_t> index_of;    ///< coset index of every element of G
  std::size_t size() const noexcept { return reps.size(); }
};

/// Orbits of H on G/H by left multiplication, i.e. the double cosets HgH.
struct DoubleCosetPartition {
  std::vector<std::uint32_t> orbit_of_coset;   ///< double coset index of each left coset
  std::vector<std::size_t> reps;               ///< element index of a representative
  std::vector<std::size_t> sizes;              ///< |HgH|
  std::size_t size() const noexcept { return reps.size(); }
};

PermGroup make_symmetric(std::size_t n, std::size_t cap = kDefaultEnumerationCap);
PermGroup make_alternating(std::size_t n, std::size_t cap = kDefaultEnumerationCap);
PermGroup make_cyclic(std::size_t n);
/// PGL2(F_q) acting on the q+1 points of the projective line; point q is infinity.
PermGroup make_pgl2(std::size_t q, std::size_t cap = kDefaultEnumerationCap);
PermGroup make_psl2(std::size_t q, std::size_t cap = kDefaultEnumerationCap);

/// Reads the generator file format; enumerates when the order is at most `cap`.
PermGroup load_group(const std::filesystem::path& path, std::size_t cap = kDefaultEnumerationCap);
PermGroup parse_group(std::string_view text, std::string name = {},
                      std::size_t cap = kDefaultEnumerationCap);
std::string format_group(const PermGroup& g);

/// Enumerated copy of `g`. Throws CapExceeded.
PermGroup enumerate_elements(const PermGroup& g, std::size_t cap);

ConjugacyClassPartition conjugacy_classes(const PermGroup& g);

/// Subgroup of an enumerated group generated by the given elements.
PermGroup subgroup(const PermGroup& g, std::vector<Permutation> generators, std::string name = {});
/// Subgroup formed by the listed element indices (must be closed); generators are chosen by
/// seeded random search.
PermGroup subgroup_from_elements(const PermGroup& g, const std::vector<std::size_t>& indices,
                                 std::string name = {});
PermGroup stabilizer(const PermGroup& g, std::size_t point);
PermGroup derived_subgroup(const PermGroup& g);
std::vector<std::size_t> orbit(const PermGroup& g, std::size_t point);

/// Throws InvalidArgument unless H is an enumerated subgroup of the enumerated group G.
void require_subgroup(const PermGroup& g, const PermGroup& h);

CosetTransversal coset_transversal(const PermGroup& g, const PermGroup& h);
DoubleCosetPartition double_cosets(const PermGroup& g, const PermGroup& h,
                                   const CosetTransversal& cosets);
std::size_t double_coset_count(const PermGroup& g, const PermGroup& h);
bool is_two_transitive(const PermGroup& g, const PermGroup& h);

}  // namespace gpack
