#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "gpack/character_table.hpp"
#include "gpack/partition.hpp"
#include "gpack/perm_group.hpp"

namespace gpack {

using MatC = Eigen::MatrixXcd;
using VecC = Eigen::VectorXcd;
using SparseC = Eigen::SparseMatrix<cplx>;

/// Image of one group element, kept sparse when that is cheaper to apply.
struct LinearOp {
  bool is_sparse = false;
  SparseC sparse;
  MatC dense;

  static LinearOp from_dense(MatC m);
  static LinearOp from_sparse(SparseC m);

  Eigen::Index size() const noexcept { return is_sparse ? sparse.rows() : dense.rows(); }
  MatC apply(const MatC& x) const { return is_sparse ? MatC(sparse * x) : MatC(dense * x); }
  MatC to_dense() const { return is_sparse ? MatC(sparse) : dense; }
};

/// Unitary matrix representation of the permutations of a fixed degree that lie in its domain.
class Representation {
public:
  virtual ~Representation() = default;
  virtual std::size_t dimension() const = 0;
  /// Degree of the permutations accepted by op().
  virtual std::size_t point_degree() const = 0;
  virtual LinearOp op(const Permutation& g) const = 0;
  MatC image(const Permutation& g) const { return op(g).to_dense(); }

  std::string provenance;
  std::uint64_t seed = 0;
};

using RepPtr = std::shared_ptr<const Representation>;

/// k-th tensor power of the permutation representation on `degree` points.
class PermutationPowerRep : public Representation {
public:
  PermutationPowerRep(std::size_t degree, unsigned k);
  std::size_t dimension() const override { return dim_; }
  std::size_t point_degree() const override { return degree_; }
  unsigned power() const noexcept { return k_; }
  LinearOp op(const Permutation& g) const override;

private:
  std::size_t degree_;
  unsigned k_;
  std::size_t dim_;
};

inline constexpr std::size_t kTensorBudget = 4096;

/// Young's orthogonal form of S_N on standard tableaux of shape lambda; point i is entry i+1.
class YoungRep : public Representation {
public:
  explicit YoungRep(const Partition& lambda, std::size_t max_dimension = 4096);
  std::size_t dimension() const override { return tableaux_.size(); }
  std::size_t point_degree() const override { return n_; }
  LinearOp op(const Permutation& g) const override;
  const Partition& shape() const noexcept { return lambda_; }
  const std::vector<Tableau>& tableaux() const noexcept { return tableaux_; }
  /// Image of the adjacent transposition swapping points i and i+1.
  const SparseC& adjacent(std::size_t i) const { return adjacent_.at(i); }

private:
  Partition lambda_;
  std::size_t n_;
  std::vector<Tableau> tableaux_;
  std::vector<SparseC> adjacent_;
};

/// Restriction of a carrier to the invariant subspace spanned by the orthonormal columns of q.
class SubRepresentation : public Representation {
public:
  SubRepresentation(RepPtr carrier, MatC q);
  std::size_t dimension() const override { return static_cast<std::size_t>(q_.cols()); }
  std::size_t point_degree() const override { return carrier_->point_degree(); }
  LinearOp op(const Permutation& g) const override;
  const MatC& basis() const noexcept { return q_; }
  const RepPtr& carrier() const noexcept { return carrier_; }

private:
  RepPtr carrier_;
  MatC q_;
};

/// Ind_H^G of a linear character of H, as monomial matrices on the left cosets of H.
class InducedLinearRep : public Representation {
public:
  InducedLinearRep(const PermGroup& g, const PermGroup& h, const CharacterTable& h_table, std::size_t lambda);
  std::size_t dimension() const override { return cosets_.size(); }
  std::size_t point_degree() const override { return g_.degree(); }
  LinearOp op(const Permutation& x) const override;

private:
  PermGroup g_, h_;
  CosetTransversal cosets_;
  std::vector<std::size_t> inverse_reps_;
  std::vector<std::uint32_t> h_class_of_;
  std::vector<cplx> values_;
};

RepPtr perm_rep(const PermGroup& g);
RepPtr tensor_power(const PermGroup& g, unsigned k);
RepPtr young_orthogonal_rep(const Partition& lambda);

/// Sum over h in each class C of ρ(h) x, one matrix per class of `classes`.
std::vector<MatC> class_sums_apply(const Representation& rep, const PermGroup& h,
                                   const ConjugacyClassPartition& classes, const MatC& x);
/// (1/|G|) sum_g coeff(class(g)) ρ(g) x, walking the spanning tree once.
MatC weighted_sum_apply(const Representation& rep, const PermGroup& g, const ConjugacyClassPartition& classes,
                        const std::vector<cplx>& class_coeff, const MatC& x);

/// Trace of ρ at each class representative.
ClassFunction character_of(const Representation& rep, const PermGroup& g, const ConjugacyClassPartition& classes);

struct IsotypicProjector {
  MatC matrix;
  std::vector<std::size_t> chars;
  std::size_t rank = 0;
};

/// Projector onto the sum of the isotypic components of the listed irreducibles of `h_table`.
IsotypicProjector isotypic_projector(const Representation& rep, const PermGroup& h, const CharacterTable& h_table,
                                     const std::vector<std::size_t>& chars);
/// Same, reusing precomputed class sums of ρ over h (from class_sums_apply with x = I).
IsotypicProjector isotypic_projector(const std::vector<MatC>& class_sums, const CharacterTable& h_table,
                                     const std::vector<std::size_t>& chars);

/// Orthonormal basis of the smallest subspace containing the columns of `start` that is invariant
/// under the generators of g. Singular values below 1e-8 sigma_max count as zero.
MatC invariant_span(const Representation& rep, const PermGroup& g, const MatC& start);

/// Irreducible constituent with character table[index], cut out of `carrier`.
RepPtr extract_irrep(RepPtr carrier, const PermGroup& g, const CharacterTable& table, std::size_t index,
                     std::uint64_t seed = 1);

/// Tries the permutation representation of g, then its tensor square and cube, and extracts the
/// first occurrence of table[index]. Returns nullptr when no carrier within budget contains it.
RepPtr find_irrep(const PermGroup& g, const CharacterTable& table, std::size_t index, std::uint64_t seed = 1);

struct RepCheck {
  double unitarity = 0.0;
  double homomorphism = 0.0;
  double character = 0.0;
};

/// Unitarity and homomorphism defects on random element pairs, and the trace defect against chi.
RepCheck check_representation(const Representation& rep, const PermGroup& g, const ClassFunction* chi = nullptr,
                              const ConjugacyClassPartition* classes = nullptr, std::size_t pairs = 100,
                              std::uint64_t seed = 3);

std::string rep_to_json(const Representation& rep, const PermGroup& g, const ClassFunction& chi);

}  // namespace gpack
