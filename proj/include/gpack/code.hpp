#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpack/character_table.hpp"
#include "gpack/error.hpp"
#include "gpack/grassmann.hpp"
#include "gpack/representation.hpp"

namespace gpack {

struct CodeParams {
  long long n = 0, m = 0, N = 0;
  double dc2_min = 0.0;
  double dc2_max = 0.0;
  double dtilde_min = 0.0;
  std::vector<PrincipalAngleSet> spa_sets;   ///< distinct angle sets over unordered pairs
  std::vector<std::size_t> spa_counts;       ///< pairs realizing each set
  std::vector<double> distances;             ///< distinct nonzero d_c^2 values, ascending
  bool meets_simplex = false;
  bool meets_orthoplex = false;
  bool orthoplex_applicable = false;
};

struct Provenance {
  std::string group, subgroup, rep;
  std::vector<std::size_t> chars;
  std::uint64_t seed = 0;
  std::string note;
};

struct GrassmannCode {
  std::vector<SubspaceProjector> elements;
  CodeParams params;
  Provenance provenance;
};

/// Raised when the orbit of W is smaller than |G/H|.
class OrbitCollapse : public Error {
public:
  OrbitCollapse(std::size_t distinct, std::size_t stabilizer_order)
      : Error("orbit has only " + std::to_string(distinct) + " distinct subspaces; stabilizer of W has order " +
              std::to_string(stabilizer_order)),
        distinct_(distinct),
        stabilizer_(stabilizer_order) {}
  std::size_t distinct() const noexcept { return distinct_; }
  std::size_t stabilizer_order() const noexcept { return stabilizer_; }

private:
  std::size_t distinct_, stabilizer_;
};

/// Pairwise census: minimum distances, distinct angle sets (1e-6 per entry) and bound attainment.
CodeParams compute_params(const std::vector<SubspaceProjector>& elements);

struct IsotypicSpec {
  const PermGroup* g = nullptr;
  const PermGroup* h = nullptr;
  RepPtr rep;
  const CharacterTable* h_table = nullptr;
  std::vector<std::size_t> chars;
  /// Optional: when present, irreducibility of rep over G is checked against this character.
  const CharacterTable* g_table = nullptr;
  std::optional<std::size_t> g_char;
};

/// Orbit of the H-isotypic subspace W under coset representatives of G/H.
GrassmannCode build_isotypic_code(const IsotypicSpec& spec);
/// Orbit of an explicit H-invariant subspace.
GrassmannCode orbit_code(const PermGroup& g, const PermGroup& h, const Representation& rep,
                         const SubspaceProjector& w);

struct SimplexReport {
  double dc2_min = 0, dc2_max = 0, bound = 0, relative_gap = 0;
  bool equidistant = false;
  bool attained = false;
  bool equality_possible = false;
};
SimplexReport verify_simplex(const GrassmannCode& code);

std::vector<std::pair<PrincipalAngleSet, std::size_t>> spa_census(const GrassmannCode& code);

struct Prediction {
  long long n = 0, m = 0, N = 0;
  Rational dc2;
  bool equality_possible = false;
};

/// Parameters from characters alone: m is the sum of multiplicity times degree over `chars`.
Prediction predict_params(const ClassFunction& chi_g, const CharacterTable& h_table,
                          const std::vector<std::size_t>& fusion, const std::vector<std::size_t>& chars,
                          long long index);
Prediction predict_params(long long n, long long m, long long N);

/// Union of the orbits of W_1..W_t; each W_i an H-isotypic subspace for a disjoint character subset.
GrassmannCode build_union_code(const PermGroup& g, const PermGroup& h, RepPtr rep, const CharacterTable& h_table,
                               const std::vector<std::vector<std::size_t>>& subsets);
/// The union distance formula N/(N-1) * m(n - m - n/N)/n with N = t|G/H|.
Rational union_formula(long long n, long long m, long long N);

GrassmannCode kron_extend(const GrassmannCode& code, long long k);
GrassmannCode kron_product(const GrassmannCode& a, const GrassmannCode& b);

/// Both sides of the double-sum distance identity for the pair (W, gW).
struct FondaCheck {
  double direct = 0.0;     ///< chordal_sq_trace(W, gW)
  double double_sum = 0.0; ///< m - (1/|H|^2) sum_{h,h'} E(h)E(h') chi_rho(h g h' g^-1)
  double relative_residual = 0.0;
};
FondaCheck verify_fonda2(const PermGroup& g, const PermGroup& h, const Representation& rep,
                         const CharacterTable& g_table, const ClassFunction& chi_rho,
                         const CharacterTable& h_table, const std::vector<std::size_t>& chars, std::size_t element);

std::string code_to_json(const GrassmannCode& code, bool with_matrices = false);
std::string code_csv_row(const GrassmannCode& code);
std::string code_csv_header();

}  // namespace gpack
