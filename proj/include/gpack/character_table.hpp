#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gpack/perm_group.hpp"

namespace gpack {

using cplx = std::complex<double>;

/// One complex value per conjugacy class of the owning group.
struct ClassFunction {
  std::uint64_t group_id = 0;
  std::vector<cplx> values;

  std::size_t size() const noexcept { return values.size(); }
  cplx operator[](std::size_t c) const { return values[c]; }
  /// Value at the identity class, rounded when it is a character degree.
  double degree() const { return values.at(0).real(); }
};

/// Structure constants a_ijk: the number of (x, y) in Cl_i x Cl_j with xy = z for a fixed z in Cl_k.
class ClassMultiplicationTable {
public:
  ClassMultiplicationTable() = default;
  explicit ClassMultiplicationTable(std::size_t classes) : n_(classes), a_(classes * classes * classes, 0) {}

  std::size_t classes() const noexcept { return n_; }
  std::uint64_t operator()(std::size_t i, std::size_t j, std::size_t k) const { return a_[(i * n_ + j) * n_ + k]; }
  std::uint64_t& at(std::size_t i, std::size_t j, std::size_t k) { return a_[(i * n_ + j) * n_ + k]; }

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> a_;
};

ClassMultiplicationTable class_multiplication(const PermGroup& g, const ConjugacyClassPartition& classes);

enum class TableSource { computed, loaded };

class CharacterTable {
public:
  std::string group_name;
  std::uint64_t group_id = 0;
  std::size_t group_order = 0;
  std::vector<std::size_t> class_sizes;
  std::vector<std::size_t> class_orders;
  /// Present when the owning group was enumerated.
  std::optional<ConjugacyClassPartition> classes;
  std::vector<ClassFunction> irreducibles;
  TableSource source = TableSource::computed;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;

  std::size_t size() const noexcept { return irreducibles.size(); }
  const ClassFunction& operator[](std::size_t i) const { return irreducibles.at(i); }
  std::size_t degree(std::size_t i) const;
  /// First index whose degree equals d, or nullopt.
  std::optional<std::size_t> find_degree(std::size_t d) const;

  /// Largest deviation from the row and column orthogonality relations.
  double orthogonality_residual() const;
};

inline constexpr std::size_t kMaxTableClasses = 60;

/// Irreducible characters as common eigenvectors of the class-sum matrices.
CharacterTable compute_table(const PermGroup& g, std::uint64_t seed = 1);

/// Reads the JSON table format. When `g` is enumerated, class sizes and element orders are
/// matched positionally against conjugacy_classes(g).
CharacterTable load_table(const std::filesystem::path& file, const PermGroup* g = nullptr, double tol = 1e-9);
CharacterTable parse_table(const std::string& json_text, const PermGroup* g = nullptr, double tol = 1e-9);
std::string table_to_json(const CharacterTable& table);

/// (1/|G|) sum_g phi(g) conj(psi(g)).
cplx inner_product(const CharacterTable& table, const ClassFunction& phi, const ClassFunction& psi);

/// Permutation character of g acting on its points.
ClassFunction permutation_character(const PermGroup& g, const ConjugacyClassPartition& classes);
/// Pointwise power chi^k (character of the k-th tensor power).
ClassFunction power(const ClassFunction& chi, unsigned k);
ClassFunction conjugate(const ClassFunction& chi);
ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);

struct RestrictionDecomposition {
  std::vector<std::size_t> multiplicities;   ///< one per irreducible of the subgroup table
  double max_rounding_residual = 0.0;
  ClassFunction parent_character;
  ClassFunction restricted;
};

/// G-class of each H-class representative.
std::vector<std::size_t> class_fusion(const PermGroup& g, const ConjugacyClassPartition& g_classes,
                                      const PermGroup& h, const ConjugacyClassPartition& h_classes);

/// Multiplicities of each H-irreducible in chi restricted to H. Throws NumericalError when a
/// multiplicity is not within 1e-6 of a non-negative integer.
RestrictionDecomposition restrict_and_decompose(const ClassFunction& chi, const CharacterTable& h_table,
                                                const std::vector<std::size_t>& fusion);
RestrictionDecomposition restrict_and_decompose(const ClassFunction& chi, const PermGroup& g,
                                                const CharacterTable& g_table, const PermGroup& h,
                                                const CharacterTable& h_table);

/// Decomposition of a class function into the irreducibles of `table`.
std::vector<std::size_t> decompose(const CharacterTable& table, const ClassFunction& chi, double* residual = nullptr);

struct IdentityReport {
  double max_class_product_residual = 0.0;   ///< chi(Cl_i^ Cl_j^) = |Cl_i||Cl_j| chi_i chi_j / chi(1)
  double max_twisted_sum_residual = 0.0;     ///< sum_g chi(h1 g h2 g^-1) = |G| chi(h1) chi(h2) / chi(1)
  std::size_t pairs_checked = 0;
  bool passed(double tol = 1e-6) const {
    return max_class_product_residual <= tol && max_twisted_sum_residual <= tol;
  }
};

/// Checks both class-sum identities for every irreducible. All class pairs are used when
/// affordable, otherwise a seeded sample of `max_pairs`.
IdentityReport verify_character_identities(const CharacterTable& table, const PermGroup& g,
                                           std::size_t max_pairs = 400, std::uint64_t seed = 7);

}  // namespace gpack
