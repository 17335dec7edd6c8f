#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gpack/character_table.hpp"
#include "gpack/code.hpp"
#include "gpack/rational.hpp"

namespace gpack {

enum class CellStatus { verified, predicted, failed };
std::string to_string(CellStatus s);

/// One (group, irreducible, character subset) cell of a parameter table.
struct CatalogEntry {
  std::string family;   ///< symmetric | alternating | pgl2 | psl2 | loaded
  std::string group, subgroup, rep;
  long long N = 0, n = 0, m = 0;
  std::size_t g_char = 0;
  std::vector<std::size_t> chars;
  Rational predicted;
  std::optional<Rational> measured;
  double dc2_min = 0, dc2_max = 0, relative_gap = 0, dtilde = 0;
  std::size_t angle_sets = 0;
  std::vector<double> angles;   ///< sin^2 of the first angle set, descending
  bool equidistant = false;
  CellStatus status = CellStatus::predicted;
  std::string note;

  long long m_key() const { return std::min(m, n - m); }
};

struct CatalogOptions {
  std::uint64_t seed = 1;
  double tol = 1e-8;
  bool build = true;
  /// "auto-min", "auto-all" or a comma separated list of H-character indices.
  std::string chars = "auto-all";
  /// Only irreducibles of these degrees (all when empty).
  std::vector<std::size_t> degrees;
};

/// A 2-transitive action G on G/H together with a way to realize irreducibles of G.
struct CatalogSource {
  std::string family;
  PermGroup g, h;
  CharacterTable g_table, h_table;
  /// Returns nullptr when the irreducible is not obtainable; sets the label otherwise.
  std::function<RepPtr(std::size_t index, std::string& label)> rep_for;
};

/// S_N on N points with H generated by the first N-2 adjacent transpositions; Young reps.
CatalogSource symmetric_source(std::size_t N, std::uint64_t seed = 1);
/// A_N generated by consecutive 3-cycles, H = A_{N-1}; Young reps restricted, split ones extracted.
CatalogSource alternating_source(std::size_t N, std::uint64_t seed = 1);
/// PGL_2(q) or PSL_2(q) on the projective line, H the Borel subgroup fixing infinity.
CatalogSource projective_source(std::size_t q, bool special, std::uint64_t seed = 1);
/// Group read from a generator file (optionally its derived subgroup), H the stabilizer of point 0.
CatalogSource loaded_source(const std::filesystem::path& file, bool derived = false, std::uint64_t seed = 1,
                            std::size_t cap = kDefaultEnumerationCap);
/// find_irrep, then monomial carriers Ind_H^G(lambda) for linear lambda inside the restriction.
RepPtr realize_irrep(const PermGroup& g, const CharacterTable& g_table, const PermGroup& h,
                     const CharacterTable& h_table, std::size_t index, std::uint64_t seed = 1);
/// Directory holding generator and character files: $GPACK_DATA_DIR, else the build-time default.
std::filesystem::path data_dir();

/// Character subsets selected by the grammar in CatalogOptions::chars for the H-constituents
/// with the given multiplicities and degrees. Subsets are deduplicated by m up to complementation.
std::vector<std::vector<std::size_t>> select_subsets(const std::vector<std::size_t>& multiplicities,
                                                     const std::vector<std::size_t>& degrees, const std::string& spec);

/// Every cell of the source: for each irreducible of degree > 1 and each selected subset.
std::vector<CatalogEntry> sweep(const CatalogSource& source, const CatalogOptions& options = {});

/// S_N cells from the hook length formula and the branching rule alone (no group is built).
std::vector<CatalogEntry> predict_symmetric(std::size_t N, const std::string& chars = "auto-all");

/// Deterministic report order: (N, n, m), then family and group.
void sort_entries(std::vector<CatalogEntry>& entries);
/// Marks entries whose (N, n, m up to complement, dc2) also occurs in another family.
std::vector<std::size_t> coincidences(const std::vector<CatalogEntry>& entries);

struct ExpectedCell {
  long long N = 0, n = 0, m = 0;
  Rational dc2;
};

/// Rows of the S_N/A_N table, 4 <= N <= 8.
std::vector<ExpectedCell> expected_symmetric(std::size_t N);
/// Sp4(2) blocks for its actions on 6 and 10 points.
std::vector<ExpectedCell> expected_sp4(std::size_t N);
/// Printed rows for groups that are too large to build here (Sp6(2), Sp8(2), Sp10(2), sporadic).
struct ExpectedBlock {
  std::string group;
  long long N = 0;
  std::vector<ExpectedCell> cells;
};
std::vector<ExpectedBlock> expected_large();

struct CellComparison {
  ExpectedCell expected;
  Rational formula;                 ///< simplex value for (n, m, N)
  std::optional<CatalogEntry> match;
  bool realized = false;            ///< some entry has the same (n, m up to complement)
  bool agrees = false;              ///< a verified entry reproduces the expected fraction
};
std::vector<CellComparison> compare_cells(const std::vector<ExpectedCell>& expected,
                                          const std::vector<CatalogEntry>& entries);

/// The eight closed-form columns for N = q + 1.
struct ProjectiveColumn {
  int column = 0;
  long long n = 0, m = 0;
  Rational dc2;
  std::optional<Rational> dtilde;   ///< tabulated as the product of sin^2, i.e. dtilde squared
};
std::vector<ProjectiveColumn> projective_columns(long long q);
/// Printed sin^2 set for the n = q - 1 column (q in {5, 7, 9, 11}), descending.
std::optional<std::vector<double>> expected_angles(long long q);

struct ColumnResult {
  ProjectiveColumn column;
  std::vector<CatalogEntry> entries;   ///< all realizations, both groups
  bool realized = false;
  bool dc2_ok = false;
  bool dtilde_ok = true;
};
struct ProjectiveReport {
  long long q = 0;
  std::vector<CatalogEntry> entries;
  std::vector<ColumnResult> columns;
  std::optional<std::vector<double>> expected_angles;
  std::vector<std::vector<double>> column8_angles;   ///< distinct sets over realizations
  bool angles_ok = false;
};
ProjectiveReport projective_report(long long q, const CatalogOptions& options = {});

/// A union of orbits of equal-dimension isotypic subspaces found by sweeping S_N restrictions.
struct UnionCandidate {
  std::string group, rep;
  std::vector<std::vector<std::size_t>> subsets;
  long long n = 0, m = 0, N = 0;
  Rational formula;         ///< union formula with N = t|G/H|
  Rational per_orbit;       ///< the same expression with N = |G/H|
  std::optional<Rational> measured_min;
  std::vector<double> distances;
  bool formula_ok = false;
  bool per_orbit_ok = false;
  bool two_distances = false;
};
std::vector<UnionCandidate> union_sweep(std::size_t N_min, std::size_t N_max, std::uint64_t seed = 1);

std::string entries_to_json(const std::vector<CatalogEntry>& entries, const CatalogOptions& options);
std::string entries_to_csv(const std::vector<CatalogEntry>& entries);
std::string entries_to_text(const std::vector<CatalogEntry>& entries);

}  // namespace gpack
