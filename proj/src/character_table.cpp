#include "gpack/character_table.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "gpack/error.hpp"
#include "json.hpp"

namespace gpack {

namespace {

using MatC = Eigen::MatrixXcd;

std::uint64_t detached_table_id() {
  static std::atomic<std::uint64_t> counter{std::uint64_t{1} << 62};
  return counter.fetch_add(1);
}

void require_same_group(const ClassFunction& a, const ClassFunction& b) {
  if (a.group_id != b.group_id || a.size() != b.size())
    throw InvalidArgument("class functions belong to different groups");
}

// U_ik = chi_i(k) sqrt(|C_k|/|G|) is unitary exactly when both orthogonality relations hold.
MatC normalized_table(const CharacterTable& t) {
  const std::size_t n = t.class_sizes.size();
  MatC u(t.irreducibles.size(), n);
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i)
    for (std::size_t k = 0; k < n; ++k)
      u(i, k) = t.irreducibles[i].values[k] *
                std::sqrt(static_cast<double>(t.class_sizes[k]) / static_cast<double>(t.group_order));
  return u;
}

bool nearly(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a) + std::abs(b)); }

// degree ascending, then values descending class by class
bool character_before(const ClassFunction& a, const ClassFunction& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    double ar = a.values[k].real(), br = b.values[k].real();
    if (k == 0) {
      if (!nearly(ar, br)) return ar < br;
      continue;
    }
    if (!nearly(ar, br)) return ar > br;
    double ai = a.values[k].imag(), bi = b.values[k].imag();
    if (!nearly(ai, bi)) return ai > bi;
  }
  return false;
}

void validate(const CharacterTable& t) {
  const std::size_t n = t.class_sizes.size();
  if (t.irreducibles.size() != n)
    throw NumericalError("table has " + std::to_string(t.irreducibles.size()) + " irreducibles for " +
                         std::to_string(n) + " classes");
  double r = t.orthogonality_residual();
  if (!(r <= t.tolerance))
    throw NumericalError("orthogonality residual " + std::to_string(r) + " exceeds tolerance");
}

}  // namespace

// ---------------------------------------------------------------- class functions

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a, b);
  ClassFunction out{a.group_id, a.values};
  for (std::size_t k = 0; k < a.size(); ++k) out.values[k] *= b.values[k];
  return out;
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a, b);
  ClassFunction out{a.group_id, a.values};
  for (std::size_t k = 0; k < a.size(); ++k) out.values[k] += b.values[k];
  return out;
}

ClassFunction power(const ClassFunction& chi, unsigned k) {
  ClassFunction out{chi.group_id, std::vector<cplx>(chi.size(), 1.0)};
  for (unsigned e = 0; e < k; ++e)
    for (std::size_t c = 0; c < chi.size(); ++c) out.values[c] *= chi.values[c];
  return out;
}

ClassFunction conjugate(const ClassFunction& chi) {
  ClassFunction out = chi;
  for (auto& v : out.values) v = std::conj(v);
  return out;
}

ClassFunction permutation_character(const PermGroup& g, const ConjugacyClassPartition& classes) {
  if (classes.group_id != g.id()) throw InvalidArgument("class partition belongs to another group");
  ClassFunction out{g.id(), {}};
  for (auto r : classes.reps) out.values.emplace_back(static_cast<double>(g.element(r).fixed_points()), 0.0);
  return out;
}

cplx inner_product(const CharacterTable& table, const ClassFunction& phi, const ClassFunction& psi) {
  require_same_group(phi, psi);
  if (phi.group_id != table.group_id) throw InvalidArgument("class function does not belong to the table's group");
  cplx s = 0.0;
  for (std::size_t k = 0; k < phi.size(); ++k)
    s += static_cast<double>(table.class_sizes[k]) * phi.values[k] * std::conj(psi.values[k]);
  return s / static_cast<double>(table.group_order);
}

std::vector<std::size_t> decompose(const CharacterTable& table, const ClassFunction& chi, double* residual) {
  std::vector<std::size_t> m;
  double worst = 0.0;
  for (const auto& irr : table.irreducibles) {
    cplx v = inner_product(table, chi, irr);
    double r = std::round(v.real());
    worst = std::max({worst, std::abs(v.real() - r), std::abs(v.imag())});
    if (worst > 1e-6 || r < 0) throw NumericalError("class function is not a character of this table");
    m.push_back(static_cast<std::size_t>(r));
  }
  if (residual) *residual = worst;
  return m;
}

// ---------------------------------------------------------------- table object

std::size_t CharacterTable::degree(std::size_t i) const {
  return static_cast<std::size_t>(std::llround(irreducibles.at(i).degree()));
}

std::optional<std::size_t> CharacterTable::find_degree(std::size_t d) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (degree(i) == d) return i;
  return std::nullopt;
}

double CharacterTable::orthogonality_residual() const {
  MatC u = normalized_table(*this);
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  MatC id = MatC::Identity(u.rows(), u.cols());
  double rows = (u * u.adjoint() - id).cwiseAbs().maxCoeff();
  double cols = (u.adjoint() * u - id).cwiseAbs().maxCoeff();
  return std::max(rows, cols);
}

// ---------------------------------------------------------------- computation

ClassMultiplicationTable class_multiplication(const PermGroup& g, const ConjugacyClassPartition& classes) {
  if (!g.is_enumerated()) throw InvalidArgument("class multiplication needs an enumerated group");
  if (classes.group_id != g.id()) throw InvalidArgument("class partition belongs to another group");
  const std::size_t n = classes.size();
  const std::size_t deg = g.degree();
  ClassMultiplicationTable a(n);
  std::vector<Point> inv(deg), y(deg);
  for (std::size_t k = 0; k < n; ++k) {
    auto z = g.element_images(classes.reps[k]);
    for (std::size_t x = 0; x < g.order(); ++x) {
      auto xi = g.element_images(x);
      for (std::size_t t = 0; t < deg; ++t) inv[xi[t]] = static_cast<Point>(t);
      for (std::size_t t = 0; t < deg; ++t) y[t] = inv[z[t]];
      std::size_t j = classes.class_of[*g.index_of(y)];
      ++a.at(classes.class_of[x], j, k);
    }
  }
  return a;
}

CharacterTable compute_table(const PermGroup& g, std::uint64_t seed) {
  auto classes = conjugacy_classes(g);
  const std::size_t n = classes.size();
  if (n > kMaxTableClasses)
    throw InvalidArgument("group has " + std::to_string(n) + " classes; limit is " + std::to_string(kMaxTableClasses));
  auto a = class_multiplication(g, classes);
  const double order = static_cast<double>(g.order());

  // B_i = D^-1 M_i D / |C_i| with (M_i)_jk = a_ijk and D = diag(sqrt|C_k|); the B_i are normal,
  // commute, and share the eigenvectors u_k = chi(C_k) sqrt|C_k| with eigenvalues chi(C_i)/chi(1).
  std::vector<MatC> b(n, MatC::Zero(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (auto v = a(i, j, k))
          b[i](j, k) = static_cast<double>(v) *
                       std::sqrt(static_cast<double>(classes.sizes[k]) / static_cast<double>(classes.sizes[j])) /
                       static_cast<double>(classes.sizes[i]);

  const cplx I(0.0, 1.0);
  for (std::uint64_t attempt = 0; attempt < 8; ++attempt) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * attempt);
    std::normal_distribution<double> normal;
    MatC h = MatC::Zero(n, n);
    for (std::size_t i = 1; i < n; ++i) {
      MatC bh = b[i].adjoint();
      h += normal(rng) * (b[i] + bh) + normal(rng) * (I * (b[i] - bh));
    }
    Eigen::SelfAdjointEigenSolver<MatC> es(h);
    if (es.info() != Eigen::Success) continue;
    const auto& ev = es.eigenvalues();
    double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
    bool separated = true;
    for (Eigen::Index i = 1; i < ev.size(); ++i)
      if (ev[i] - ev[i - 1] < 1e-6 * scale) separated = false;
    if (!separated && n > 1) continue;

    CharacterTable t;
    t.group_name = g.name();
    t.group_id = g.id();
    t.group_order = g.order();
    t.class_sizes = classes.sizes;
    t.class_orders = classes.element_orders;
    t.source = TableSource::computed;
    t.seed = seed + 0x9e3779b97f4a7c15ull * attempt;
    bool ok = true;
    for (std::size_t e = 0; e < n && ok; ++e) {
      Eigen::VectorXcd v = es.eigenvectors().col(static_cast<Eigen::Index>(e));
      if (std::abs(v[0]) < 1e-8) {
        ok = false;
        break;
      }
      v *= std::conj(v[0]) / std::abs(v[0]);
      v *= std::sqrt(order) / v.norm();
      // every class matrix must have v as an eigenvector, eigenvalue chi_i / chi(1)
      for (std::size_t i = 0; i < n && ok; ++i) {
        cplx lambda = v[static_cast<Eigen::Index>(i)] /
                      std::sqrt(static_cast<double>(classes.sizes[i])) / v[0].real();
        if ((b[i] * v - lambda * v).norm() > 1e-8 * std::sqrt(order)) ok = false;
      }
      double deg = v[0].real();
      if (std::abs(deg - std::round(deg)) > 1e-6) ok = false;
      ClassFunction chi{g.id(), std::vector<cplx>(n)};
      for (std::size_t k = 0; k < n; ++k)
        chi.values[k] = v[static_cast<Eigen::Index>(k)] / std::sqrt(static_cast<double>(classes.sizes[k]));
      chi.values[0] = std::round(deg);
      t.irreducibles.push_back(std::move(chi));
    }
    if (!ok) continue;
    std::sort(t.irreducibles.begin(), t.irreducibles.end(), character_before);
    t.classes = std::move(classes);
    validate(t);
    return t;
  }
  throw NumericalError("eigenvector separation failed for group '" + g.name() + "'");
}

// ---------------------------------------------------------------- file format

CharacterTable parse_table(const std::string& json_text, const PermGroup* g, double tol) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("character table: ") + e.what());
  }
  CharacterTable t;
  t.source = TableSource::loaded;
  t.tolerance = tol;
  try {
    t.group_name = j.value("group", std::string{});
    t.class_sizes = j.at("class_sizes").get<std::vector<std::size_t>>();
    t.class_orders = j.at("class_orders").get<std::vector<std::size_t>>();
    for (const auto& row : j.at("irreducibles")) {
      ClassFunction chi;
      for (const auto& v : row) chi.values.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
      t.irreducibles.push_back(std::move(chi));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("character table: ") + e.what());
  }
  const std::size_t n = t.class_sizes.size();
  if (n == 0 || t.class_orders.size() != n) throw ParseError("character table: class data shape mismatch");
  for (const auto& chi : t.irreducibles)
    if (chi.size() != n) throw ParseError("character table: row length differs from class count");
  if (t.irreducibles.size() != n) throw ParseError("character table: row count differs from class count");
  for (auto s : t.class_sizes) t.group_order += s;

  if (g && g->is_enumerated()) {
    auto classes = conjugacy_classes(*g);
    if (classes.size() != n || classes.group_order != t.group_order)
      throw ParseError("character table: class count or group order differs from the group");
    for (std::size_t k = 0; k < n; ++k)
      if (classes.sizes[k] != t.class_sizes[k] || classes.element_orders[k] != t.class_orders[k])
        throw ParseError("character table: class " + std::to_string(k) + " does not match the group");
    t.group_id = g->id();
    t.classes = std::move(classes);
  } else {
    t.group_id = detached_table_id();
  }
  for (auto& chi : t.irreducibles) chi.group_id = t.group_id;
  validate(t);
  return t;
}

CharacterTable load_table(const std::filesystem::path& file, const PermGroup* g, double tol) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open character table " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_table(ss.str(), g, tol);
}

std::string table_to_json(const CharacterTable& table) {
  nlohmann::json j;
  j["group"] = table.group_name;
  j["class_sizes"] = table.class_sizes;
  j["class_orders"] = table.class_orders;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& chi : table.irreducibles) {
    nlohmann::json row = nlohmann::json::array();
    for (auto v : chi.values) row.push_back({v.real(), v.imag()});
    rows.push_back(std::move(row));
  }
  j["irreducibles"] = std::move(rows);
  return j.dump(1);
}

// ---------------------------------------------------------------- restriction

std::vector<std::size_t> class_fusion(const PermGroup& g, const ConjugacyClassPartition& g_classes,
                                      const PermGroup& h, const ConjugacyClassPartition& h_classes) {
  if (g_classes.group_id != g.id() || h_classes.group_id != h.id())
    throw InvalidArgument("class partitions do not belong to the given groups");
  std::vector<std::size_t> fusion;
  for (std::size_t c = 0; c < h_classes.size(); ++c) {
    auto idx = g.index_of(h.element_images(h_classes.reps[c]));
    if (!idx) throw InvalidArgument("'" + h.name() + "' is not contained in '" + g.name() + "'");
    std::size_t gc = g_classes.class_of[*idx];
    if (g_classes.element_orders[gc] != h_classes.element_orders[c]) throw NumericalError("class fusion order mismatch");
    fusion.push_back(gc);
  }
  return fusion;
}

RestrictionDecomposition restrict_and_decompose(const ClassFunction& chi, const CharacterTable& h_table,
                                                const std::vector<std::size_t>& fusion) {
  if (fusion.size() != h_table.class_sizes.size()) throw InvalidArgument("fusion map length differs from H classes");
  RestrictionDecomposition out;
  out.parent_character = chi;
  out.restricted.group_id = h_table.group_id;
  for (auto gc : fusion) {
    if (gc >= chi.size()) throw InvalidArgument("fusion map points outside the G classes");
    out.restricted.values.push_back(chi.values[gc]);
  }
  double total = 0.0;
  for (std::size_t i = 0; i < h_table.size(); ++i) {
    cplx v = inner_product(h_table, out.restricted, h_table[i]);
    double r = std::round(v.real());
    double res = std::max(std::abs(v.real() - r), std::abs(v.imag()));
    out.max_rounding_residual = std::max(out.max_rounding_residual, res);
    if (res > 1e-6 || r < 0)
      throw NumericalError("non-integer restriction multiplicity " + std::to_string(v.real()) +
                           " (wrong table or fusion)");
    out.multiplicities.push_back(static_cast<std::size_t>(r));
    total += r * static_cast<double>(h_table.degree(i));
  }
  if (std::abs(total - chi.degree()) > 1e-6) throw NumericalError("restriction multiplicities do not sum to the degree");
  return out;
}

RestrictionDecomposition restrict_and_decompose(const ClassFunction& chi, const PermGroup& g,
                                                const CharacterTable& g_table, const PermGroup& h,
                                                const CharacterTable& h_table) {
  if (!g_table.classes || !h_table.classes) throw InvalidArgument("restriction needs tables of enumerated groups");
  if (chi.group_id != g_table.group_id) throw InvalidArgument("character does not belong to G");
  return restrict_and_decompose(chi, h_table, class_fusion(g, *g_table.classes, h, *h_table.classes));
}

// ---------------------------------------------------------------- identities

IdentityReport verify_character_identities(const CharacterTable& table, const PermGroup& g, std::size_t max_pairs,
                                           std::uint64_t seed) {
  if (!table.classes || table.group_id != g.id()) throw InvalidArgument("table does not belong to an enumerated group");
  const auto& cls = *table.classes;
  const std::size_t n = cls.size();
  const std::size_t deg = g.degree();
  auto a = class_multiplication(g, cls);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pairs.emplace_back(i, j);
  if (pairs.size() > max_pairs) {
    std::mt19937_64 rng(seed);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(max_pairs);
    pairs.emplace_back(0, 0);
  }

  IdentityReport rep;
  std::vector<Point> inv(deg), w(deg);
  std::vector<std::size_t> hist(n);
  const double order = static_cast<double>(g.order());
  for (auto [i, j] : pairs) {
    auto h1 = g.element_images(cls.reps[i]);
    auto h2 = g.element_images(cls.reps[j]);
    std::fill(hist.begin(), hist.end(), 0);
    for (std::size_t x = 0; x < g.order(); ++x) {
      auto gx = g.element_images(x);
      for (std::size_t t = 0; t < deg; ++t) inv[gx[t]] = static_cast<Point>(t);
      for (std::size_t t = 0; t < deg; ++t) w[t] = h1[gx[h2[inv[t]]]];
      ++hist[cls.class_of[*g.index_of(w)]];
    }
    const double ci = static_cast<double>(cls.sizes[i]), cj = static_cast<double>(cls.sizes[j]);
    for (const auto& chi : table.irreducibles) {
      const double d = chi.degree();
      cplx lhs8 = 0.0, lhs9 = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        lhs8 += static_cast<double>(a(i, j, k)) * static_cast<double>(cls.sizes[k]) * chi.values[k];
        lhs9 += static_cast<double>(hist[k]) * chi.values[k];
      }
      cplx rhs8 = ci * cj * chi.values[i] * chi.values[j] / d;
      cplx rhs9 = order * chi.values[i] * chi.values[j] / d;
      rep.max_class_product_residual = std::max(rep.max_class_product_residual, std::abs(lhs8 - rhs8) / (ci * cj * d));
      rep.max_twisted_sum_residual = std::max(rep.max_twisted_sum_residual, std::abs(lhs9 - rhs9) / (order * d));
    }
    ++rep.pairs_checked;
  }
  return rep;
}

}  // namespace gpack
