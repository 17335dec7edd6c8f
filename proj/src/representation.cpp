#include "gpack/representation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "gpack/error.hpp"
#include "json.hpp"

namespace gpack {

LinearOp LinearOp::from_dense(MatC m) {
  LinearOp op;
  op.dense = std::move(m);
  return op;
}

LinearOp LinearOp::from_sparse(SparseC m) {
  LinearOp op;
  op.is_sparse = true;
  op.sparse = std::move(m);
  return op;
}

namespace {

void require_degree(const Representation& rep, const Permutation& g) {
  if (g.degree() != rep.point_degree())
    throw InvalidArgument("permutation of degree " + std::to_string(g.degree()) + " given to a representation on " +
                          std::to_string(rep.point_degree()) + " points");
}

void require_classes(const PermGroup& g, const ConjugacyClassPartition& classes) {
  if (!g.is_enumerated()) throw InvalidArgument("group '" + g.name() + "' is not enumerated");
  if (classes.group_id != g.id()) throw InvalidArgument("class partition belongs to another group");
}

VecC gaussian_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  VecC v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = cplx(normal(rng), normal(rng));
  return v;
}

// Depth-first walk of the spanning tree carrying rho(element) * x.
template <class Visit>
void walk_images(const Representation& rep, const PermGroup& g, const MatC& x, Visit&& visit) {
  std::vector<LinearOp> gens;
  for (const auto& p : g.generators()) {
    require_degree(rep, p);
    gens.push_back(rep.op(p));
  }
  std::vector<std::pair<std::uint32_t, MatC>> stack;
  stack.emplace_back(0, x);
  while (!stack.empty()) {
    auto [node, m] = std::move(stack.back());
    stack.pop_back();
    visit(node, m);
    for (auto c : g.children(node)) stack.emplace_back(c, gens[g.generator_of(c)].apply(m));
  }
}

}  // namespace

// ---------------------------------------------------------------- concrete representations

PermutationPowerRep::PermutationPowerRep(std::size_t degree, unsigned k) : degree_(degree), k_(k), dim_(1) {
  if (k < 1) throw InvalidArgument("tensor power must be at least 1");
  for (unsigned i = 0; i < k; ++i) {
    dim_ *= degree;
    if (dim_ > kTensorBudget)
      throw InvalidArgument("tensor power dimension exceeds budget " + std::to_string(kTensorBudget));
  }
  provenance = k == 1 ? "perm" : "perm^" + std::to_string(k);
}

LinearOp PermutationPowerRep::op(const Permutation& g) const {
  require_degree(*this, g);
  std::vector<Eigen::Triplet<cplx>> trip;
  trip.reserve(dim_);
  for (std::size_t idx = 0; idx < dim_; ++idx) {
    std::size_t rest = idx, image = 0, scale = 1;
    for (unsigned t = 0; t < k_; ++t) {
      image += g(rest % degree_) * scale;
      rest /= degree_;
      scale *= degree_;
    }
    trip.emplace_back(static_cast<int>(image), static_cast<int>(idx), 1.0);
  }
  SparseC m(static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
  m.setFromTriplets(trip.begin(), trip.end());
  return LinearOp::from_sparse(std::move(m));
}

InducedLinearRep::InducedLinearRep(const PermGroup& g, const PermGroup& h, const CharacterTable& h_table,
                                   std::size_t lambda)
    : g_(g), h_(h), cosets_(coset_transversal(g, h)) {
  if (!h_table.classes || h_table.group_id != h.id()) throw InvalidArgument("table does not belong to the subgroup");
  if (h_table.degree(lambda) != 1) throw InvalidArgument("induction needs a linear character");
  for (auto r : cosets_.reps) inverse_reps_.push_back(g.inverse_index(r));
  h_class_of_ = h_table.classes->class_of;
  values_ = h_table[lambda].values;
  provenance = "ind:" + std::to_string(lambda);
}

LinearOp InducedLinearRep::op(const Permutation& x) const {
  require_degree(*this, x);
  auto xi = g_.index_of(x);
  if (!xi) throw InvalidArgument("element is not in the inducing group");
  const std::size_t n = cosets_.size();
  std::vector<Eigen::Triplet<cplx>> trip;
  trip.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t y = g_.multiply(*xi, cosets_.reps[i]);
    std::size_t j = cosets_.index_of[y];
    auto hi = h_.index_of(g_.element_images(g_.multiply(inverse_reps_[j], y)));
    if (!hi) throw NumericalError("coset bookkeeping failed");
    trip.emplace_back(static_cast<int>(j), static_cast<int>(i), values_[h_class_of_[*hi]]);
  }
  SparseC m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  m.setFromTriplets(trip.begin(), trip.end());
  return LinearOp::from_sparse(std::move(m));
}

YoungRep::YoungRep(const Partition& lambda, std::size_t max_dimension) : lambda_(lambda), n_(lambda.size()) {
  if (n_ < 1) throw InvalidArgument("empty partition");
  if (hook_dimension(lambda) > max_dimension) throw InvalidArgument("Young representation exceeds dimension budget");
  tableaux_ = standard_tableaux(lambda);
  const auto f = static_cast<Eigen::Index>(tableaux_.size());
  for (std::size_t i = 0; i + 1 < n_; ++i) {
    std::vector<Eigen::Triplet<cplx>> trip;
    for (Eigen::Index a = 0; a < f; ++a) {
      const auto& t = tableaux_[static_cast<std::size_t>(a)];
      long r1 = 0, c1 = 0, r2 = 0, c2 = 0;
      for (std::size_t r = 0; r < t.size(); ++r)
        for (std::size_t c = 0; c < t[r].size(); ++c) {
          if (t[r][c] == i + 1) r1 = static_cast<long>(r), c1 = static_cast<long>(c);
          if (t[r][c] == i + 2) r2 = static_cast<long>(r), c2 = static_cast<long>(c);
        }
      // axial distance from entry i+1 to entry i+2
      double d = static_cast<double>((c2 - r2) - (c1 - r1));
      trip.emplace_back(static_cast<int>(a), static_cast<int>(a), 1.0 / d);
      if (std::abs(d) > 1.5) {
        Tableau s = t;
        s[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c1)] = i + 2;
        s[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c2)] = i + 1;
        auto it = std::lower_bound(tableaux_.begin(), tableaux_.end(), s);
        auto b = static_cast<int>(it - tableaux_.begin());
        trip.emplace_back(b, static_cast<int>(a), std::sqrt(1.0 - 1.0 / (d * d)));
      }
    }
    SparseC m(f, f);
    m.setFromTriplets(trip.begin(), trip.end());
    adjacent_.push_back(std::move(m));
  }
  provenance = "young" + lambda.to_string();
}

LinearOp YoungRep::op(const Permutation& g) const {
  require_degree(*this, g);
  const auto f = static_cast<Eigen::Index>(tableaux_.size());
  // bubble sort the image array: g s_{j1} ... s_{jL} = 1, so g = s_{jL} ... s_{j1}
  std::vector<Point> a(g.images().begin(), g.images().end());
  SparseC acc(f, f);
  acc.setIdentity();
  MatC dense;
  bool is_dense = false;
  for (std::size_t pass = 0; pass < n_; ++pass) {
    bool swapped = false;
    for (std::size_t j = 0; j + 1 < n_; ++j) {
      if (a[j] > a[j + 1]) {
        std::swap(a[j], a[j + 1]);
        swapped = true;
        if (is_dense) {
          dense = adjacent_[j] * dense;
        } else {
          acc = (adjacent_[j] * acc).pruned();
          if (acc.nonZeros() * 4 > f * f) {
            dense = MatC(acc);
            is_dense = true;
          }
        }
      }
    }
    if (!swapped) break;
  }
  return is_dense ? LinearOp::from_dense(std::move(dense)) : LinearOp::from_sparse(std::move(acc));
}

SubRepresentation::SubRepresentation(RepPtr carrier, MatC q) : carrier_(std::move(carrier)), q_(std::move(q)) {
  if (!carrier_ || q_.rows() != static_cast<Eigen::Index>(carrier_->dimension()))
    throw InvalidArgument("subspace basis does not match the carrier dimension");
  provenance = carrier_->provenance;
  seed = carrier_->seed;
}

LinearOp SubRepresentation::op(const Permutation& g) const {
  return LinearOp::from_dense(q_.adjoint() * carrier_->op(g).apply(q_));
}

RepPtr perm_rep(const PermGroup& g) { return std::make_shared<PermutationPowerRep>(g.degree(), 1); }

RepPtr tensor_power(const PermGroup& g, unsigned k) { return std::make_shared<PermutationPowerRep>(g.degree(), k); }

RepPtr young_orthogonal_rep(const Partition& lambda) { return std::make_shared<YoungRep>(lambda); }

// ---------------------------------------------------------------- sums over a group

std::vector<MatC> class_sums_apply(const Representation& rep, const PermGroup& h,
                                   const ConjugacyClassPartition& classes, const MatC& x) {
  require_classes(h, classes);
  std::vector<MatC> sums(classes.size(), MatC::Zero(x.rows(), x.cols()));
  walk_images(rep, h, x, [&](std::uint32_t node, const MatC& m) { sums[classes.class_of[node]] += m; });
  return sums;
}

MatC weighted_sum_apply(const Representation& rep, const PermGroup& g, const ConjugacyClassPartition& classes,
                        const std::vector<cplx>& class_coeff, const MatC& x) {
  require_classes(g, classes);
  if (class_coeff.size() != classes.size()) throw InvalidArgument("one coefficient per class is required");
  MatC acc = MatC::Zero(x.rows(), x.cols());
  walk_images(rep, g, x, [&](std::uint32_t node, const MatC& m) { acc += class_coeff[classes.class_of[node]] * m; });
  return acc / static_cast<double>(g.order());
}

ClassFunction character_of(const Representation& rep, const PermGroup& g, const ConjugacyClassPartition& classes) {
  require_classes(g, classes);
  ClassFunction chi{g.id(), {}};
  for (auto r : classes.reps) {
    auto op = rep.op(g.element(r));
    cplx tr = 0.0;
    if (op.is_sparse) {
      for (int k = 0; k < op.sparse.outerSize(); ++k)
        for (SparseC::InnerIterator it(op.sparse, k); it; ++it)
          if (it.row() == it.col()) tr += it.value();
    } else {
      tr = op.dense.trace();
    }
    chi.values.push_back(tr);
  }
  return chi;
}

IsotypicProjector isotypic_projector(const std::vector<MatC>& class_sums, const CharacterTable& h_table,
                                     const std::vector<std::size_t>& chars) {
  if (class_sums.size() != h_table.class_sizes.size()) throw InvalidArgument("class sums do not match the table");
  IsotypicProjector out;
  out.chars = chars;
  std::sort(out.chars.begin(), out.chars.end());
  out.chars.erase(std::unique(out.chars.begin(), out.chars.end()), out.chars.end());
  out.matrix = MatC::Zero(class_sums[0].rows(), class_sums[0].cols());
  for (auto i : out.chars) {
    const auto& chi = h_table[i];
    double scale = chi.degree() / static_cast<double>(h_table.group_order);
    for (std::size_t c = 0; c < class_sums.size(); ++c) out.matrix += (scale * std::conj(chi[c])) * class_sums[c];
  }
  const MatC& p = out.matrix;
  double herm = (p - p.adjoint()).cwiseAbs().maxCoeff();
  double idem = (p * p - p).cwiseAbs().maxCoeff();
  if (herm > 1e-9 || idem > 1e-9)
    throw NumericalError("isotypic projector is not a Hermitian idempotent (character/representation mismatch)");
  double tr = p.trace().real();
  if (std::abs(tr - std::round(tr)) > 1e-6) throw NumericalError("isotypic projector has non-integer trace");
  out.rank = static_cast<std::size_t>(std::llround(tr));
  return out;
}

IsotypicProjector isotypic_projector(const Representation& rep, const PermGroup& h, const CharacterTable& h_table,
                                     const std::vector<std::size_t>& chars) {
  if (!h_table.classes || h_table.group_id != h.id()) throw InvalidArgument("table does not belong to the subgroup");
  auto n = static_cast<Eigen::Index>(rep.dimension());
  return isotypic_projector(class_sums_apply(rep, h, *h_table.classes, MatC::Identity(n, n)), h_table, chars);
}

// ---------------------------------------------------------------- extraction

MatC invariant_span(const Representation& rep, const PermGroup& g, const MatC& start) {
  std::vector<LinearOp> gens;
  for (const auto& p : g.generators()) gens.push_back(rep.op(p));
  auto orth = [](const MatC& m) -> MatC {
    if (m.cols() == 0) return m;
    Eigen::BDCSVD<MatC> svd(m, Eigen::ComputeThinU);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s[0] == 0.0) return MatC(m.rows(), 0);
    Eigen::Index r = 0;
    while (r < s.size() && s[r] > 1e-8 * s[0]) ++r;
    return svd.matrixU().leftCols(r);
  };
  MatC q = orth(start);
  for (;;) {
    MatC m(q.rows(), q.cols() * static_cast<Eigen::Index>(gens.size() + 1));
    m.leftCols(q.cols()) = q;
    for (std::size_t k = 0; k < gens.size(); ++k)
      m.middleCols(q.cols() * static_cast<Eigen::Index>(k + 1), q.cols()) = gens[k].apply(q);
    MatC next = orth(m);
    if (next.cols() == q.cols()) return q;
    q = std::move(next);
  }
}

RepPtr extract_irrep(RepPtr carrier, const PermGroup& g, const CharacterTable& table, std::size_t index,
                     std::uint64_t seed) {
  if (!table.classes || table.group_id != g.id()) throw InvalidArgument("table does not belong to the group");
  const auto& classes = *table.classes;
  const auto& chi = table[index];
  const std::size_t d = table.degree(index);
  auto carrier_chi = character_of(*carrier, g, classes);
  double mult = inner_product(table, carrier_chi, chi).real();
  if (mult < 0.5) throw InvalidArgument("target character does not occur in the carrier");

  std::vector<cplx> coeff(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) coeff[c] = static_cast<double>(d) * std::conj(chi[c]);

  for (std::uint64_t attempt = 0; attempt < 5; ++attempt) {
    std::uint64_t s = seed + 0x2545f4914f6cdd1dull * attempt;
    std::mt19937_64 rng(s);
    VecC v = gaussian_vector(carrier->dimension(), rng);
    MatC w = weighted_sum_apply(*carrier, g, classes, coeff, v);
    if (w.norm() < 1e-8 * v.norm()) continue;
    MatC q = invariant_span(*carrier, g, w);
    if (q.cols() > static_cast<Eigen::Index>(d) && q.cols() % static_cast<Eigen::Index>(d) == 0) {
      // q spans V (x) C^j; a generic Hermitian element of the group algebra acts as A (x) I_j,
      // so any of its eigenvectors is a pure tensor and generates a single copy of V.
      std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
      std::normal_distribution<double> normal;
      MatC a = MatC::Zero(q.cols(), q.cols());
      for (int t = 0; t < 8; ++t) {
        MatC rq = carrier->op(g.element(pick(rng))).apply(q);
        MatC block = q.adjoint() * rq;
        a += normal(rng) * (block + block.adjoint());
      }
      Eigen::SelfAdjointEigenSolver<MatC> es(a);
      MatC y = q * es.eigenvectors().col(0);
      q = invariant_span(*carrier, g, y);
    }
    if (q.cols() != static_cast<Eigen::Index>(d)) continue;
    if (q.cols() == q.rows()) return carrier;
    auto sub = std::make_shared<SubRepresentation>(carrier, std::move(q));
    sub->seed = s;
    auto got = character_of(*sub, g, classes);
    double err = 0.0;
    for (std::size_t c = 0; c < classes.size(); ++c) err = std::max(err, std::abs(got[c] - chi[c]));
    if (err > 1e-6) continue;
    return sub;
  }
  throw NumericalError("could not isolate an irreducible of degree " + std::to_string(d) + " after 5 attempts");
}

RepPtr find_irrep(const PermGroup& g, const CharacterTable& table, std::size_t index, std::uint64_t seed) {
  if (!table.classes || table.group_id != g.id()) throw InvalidArgument("table does not belong to the group");
  auto pi = permutation_character(g, *table.classes);
  std::size_t dim = 1;
  for (unsigned k = 1; k <= 3; ++k) {
    dim *= g.degree();
    if (dim > kTensorBudget) break;
    double mult = inner_product(table, power(pi, k), table[index]).real();
    if (mult > 0.5) return extract_irrep(tensor_power(g, k), g, table, index, seed);
  }
  return nullptr;
}

// ---------------------------------------------------------------- checks and export

RepCheck check_representation(const Representation& rep, const PermGroup& g, const ClassFunction* chi,
                              const ConjugacyClassPartition* classes, std::size_t pairs, std::uint64_t seed) {
  RepCheck out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  for (std::size_t t = 0; t < pairs; ++t) {
    std::size_t a = pick(rng), b = pick(rng);
    MatC ra = rep.image(g.element(a));
    MatC rb = rep.image(g.element(b));
    MatC rab = rep.image(g.element(g.multiply(a, b)));
    out.homomorphism = std::max(out.homomorphism, (ra * rb - rab).cwiseAbs().maxCoeff());
    MatC id = MatC::Identity(ra.rows(), ra.cols());
    out.unitarity = std::max(out.unitarity, (ra * ra.adjoint() - id).cwiseAbs().maxCoeff());
  }
  if (chi && classes) {
    auto got = character_of(rep, g, *classes);
    for (std::size_t c = 0; c < got.size(); ++c) out.character = std::max(out.character, std::abs(got[c] - (*chi)[c]));
  }
  return out;
}

std::string rep_to_json(const Representation& rep, const PermGroup& g, const ClassFunction& chi) {
  nlohmann::json j;
  j["group"] = g.name();
  j["dimension"] = rep.dimension();
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& p : g.generators()) {
    MatC m = rep.image(p);
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
      rows.push_back(std::move(row));
    }
    gens.push_back({{"generator", p.to_cycle_string()}, {"image", std::move(rows)}});
  }
  j["generators"] = std::move(gens);
  nlohmann::json vals = nlohmann::json::array();
  for (auto v : chi.values) vals.push_back({v.real(), v.imag()});
  j["character"] = std::move(vals);
  j["provenance"] = {{"carrier", rep.provenance}, {"seed", rep.seed}};
  return j.dump(1);
}

}  // namespace gpack
