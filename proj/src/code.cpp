#include "gpack/code.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "gpack/error.hpp"
#include "json.hpp"

namespace gpack {

namespace {

constexpr double kSameSubspace = 1e-6;

MatC kron(const MatC& a, const MatC& b) {
  MatC out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

void add_distance(std::vector<double>& ds, double d) {
  for (double x : ds)
    if (std::abs(x - d) <= 1e-6 * std::max(1.0, std::abs(d))) return;
  ds.push_back(d);
}

}  // namespace

CodeParams compute_params(const std::vector<SubspaceProjector>& elements) {
  CodeParams p;
  p.N = static_cast<long long>(elements.size());
  if (elements.empty()) return p;
  p.n = elements[0].ambient();
  p.m = elements[0].dim();
  for (const auto& e : elements)
    if (e.ambient() != p.n || e.dim() != p.m) throw InvalidArgument("code elements differ in ambient or dimension");
  p.dc2_min = std::numeric_limits<double>::infinity();
  p.dtilde_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      auto s = principal_angles(elements[i], elements[j]);
      double d = s.chordal_sq();
      p.dc2_min = std::min(p.dc2_min, d);
      p.dc2_max = std::max(p.dc2_max, d);
      p.dtilde_min = std::min(p.dtilde_min, s.product());
      add_distance(p.distances, d);
      bool found = false;
      for (std::size_t k = 0; k < p.spa_sets.size(); ++k)
        if (p.spa_sets[k].matches(s)) {
          ++p.spa_counts[k];
          found = true;
          break;
        }
      if (!found) {
        p.spa_sets.push_back(std::move(s));
        p.spa_counts.push_back(1);
      }
    }
  std::sort(p.distances.begin(), p.distances.end());
  if (p.N < 2) {
    p.dc2_min = p.dtilde_min = 0.0;
    return p;
  }
  if (p.m >= 1 && p.m < p.n) {
    auto sb = simplex_bound(p.n, p.m, p.N);
    p.meets_simplex = std::abs(p.dc2_min - sb.to_double()) <= 1e-8 * sb.to_double();
    auto ob = orthoplex_bound(p.n, p.m, p.N);
    p.orthoplex_applicable = ob.flag;
    p.meets_orthoplex = ob.flag && std::abs(p.dc2_min - ob.to_double()) <= 1e-8 * ob.to_double();
  }
  return p;
}

GrassmannCode orbit_code(const PermGroup& g, const PermGroup& h, const Representation& rep,
                         const SubspaceProjector& w) {
  auto cosets = coset_transversal(g, h);
  GrassmannCode code;
  for (auto r : cosets.reps) {
    auto gw = SubspaceProjector::from_basis(rep.op(g.element(r)).apply(w.basis()));
    bool dup = false;
    for (const auto& e : code.elements)
      if (chordal_sq_trace(e, gw) < kSameSubspace) {
        dup = true;
        break;
      }
    if (!dup) code.elements.push_back(std::move(gw));
  }
  if (code.elements.size() != cosets.size())
    throw OrbitCollapse(code.elements.size(), g.order() / code.elements.size());
  code.params = compute_params(code.elements);
  code.provenance.group = g.name();
  code.provenance.subgroup = h.name();
  code.provenance.rep = rep.provenance;
  code.provenance.seed = rep.seed;
  return code;
}

GrassmannCode build_isotypic_code(const IsotypicSpec& spec) {
  if (!spec.g || !spec.h || !spec.rep || !spec.h_table) throw InvalidArgument("incomplete code specification");
  const auto& g = *spec.g;
  const auto& h = *spec.h;
  require_subgroup(g, h);
  if (spec.chars.empty()) throw InvalidArgument("empty character subset");
  if (spec.g_table && spec.g_char) {
    auto chi = character_of(*spec.rep, g, *spec.g_table->classes);
    double self = inner_product(*spec.g_table, chi, chi).real();
    double hit = std::abs(inner_product(*spec.g_table, chi, (*spec.g_table)[*spec.g_char]));
    if (std::abs(self - 1.0) > 1e-6 || std::abs(hit - 1.0) > 1e-6)
      throw InvalidArgument("representation is not the requested irreducible of G");
  }
  auto proj = isotypic_projector(*spec.rep, h, *spec.h_table, spec.chars);
  auto n = static_cast<std::size_t>(spec.rep->dimension());
  if (proj.rank == 0 || proj.rank == n) throw InvalidArgument("isotypic subspace is trivial or the whole space");
  auto w = SubspaceProjector::from_projector(proj.matrix);
  auto code = orbit_code(g, h, *spec.rep, w);
  code.provenance.chars = proj.chars;
  return code;
}

SimplexReport verify_simplex(const GrassmannCode& code) {
  SimplexReport r;
  const auto& p = code.params;
  r.dc2_min = p.dc2_min;
  r.dc2_max = p.dc2_max;
  if (p.N < 2 || p.m < 1 || p.m >= p.n) return r;
  auto b = simplex_bound(p.n, p.m, p.N);
  r.bound = b.to_double();
  r.equality_possible = b.flag;
  r.relative_gap = (r.bound - r.dc2_min) / r.bound;
  r.equidistant = (r.dc2_max - r.dc2_min) <= 1e-8 * r.bound;
  r.attained = std::abs(r.relative_gap) <= 1e-8;
  return r;
}

std::vector<std::pair<PrincipalAngleSet, std::size_t>> spa_census(const GrassmannCode& code) {
  std::vector<std::pair<PrincipalAngleSet, std::size_t>> out;
  for (std::size_t k = 0; k < code.params.spa_sets.size(); ++k)
    out.emplace_back(code.params.spa_sets[k], code.params.spa_counts[k]);
  return out;
}

Prediction predict_params(long long n, long long m, long long N) {
  if (m <= 0 || m >= n) throw InvalidArgument("predicted subspace is trivial or the whole space");
  auto b = simplex_bound(n, m, N);
  return {n, m, N, b.value, b.flag};
}

Prediction predict_params(const ClassFunction& chi_g, const CharacterTable& h_table,
                          const std::vector<std::size_t>& fusion, const std::vector<std::size_t>& chars,
                          long long index) {
  auto dec = restrict_and_decompose(chi_g, h_table, fusion);
  long long m = 0;
  for (auto i : chars) m += static_cast<long long>(dec.multiplicities.at(i) * h_table.degree(i));
  return predict_params(std::llround(chi_g.degree()), m, index);
}

Rational union_formula(long long n, long long m, long long N) {
  // N/(N-1) * m (n - m - n/N) / n
  return Rational(N, N - 1) * Rational(m) * (Rational(n - m) - Rational(n, N)) / Rational(n);
}

GrassmannCode build_union_code(const PermGroup& g, const PermGroup& h, RepPtr rep, const CharacterTable& h_table,
                               const std::vector<std::vector<std::size_t>>& subsets) {
  if (subsets.empty()) throw InvalidArgument("no character subsets");
  std::set<std::size_t> seen;
  for (const auto& s : subsets)
    for (auto i : s)
      if (!seen.insert(i).second) throw InvalidArgument("character subsets overlap");
  GrassmannCode out;
  long long m = -1;
  for (const auto& s : subsets) {
    IsotypicSpec spec;
    spec.g = &g;
    spec.h = &h;
    spec.rep = rep;
    spec.h_table = &h_table;
    spec.chars = s;
    auto c = build_isotypic_code(spec);
    if (m >= 0 && c.params.m != m) throw InvalidArgument("character subsets give different dimensions");
    m = c.params.m;
    for (auto& e : c.elements) out.elements.push_back(std::move(e));
    out.provenance = c.provenance;
  }
  out.provenance.chars.clear();
  for (const auto& s : subsets) out.provenance.chars.insert(out.provenance.chars.end(), s.begin(), s.end());
  out.provenance.note = "union of " + std::to_string(subsets.size()) + " orbits";
  out.params = compute_params(out.elements);
  return out;
}

GrassmannCode kron_extend(const GrassmannCode& code, long long k) {
  if (k < 1) throw InvalidArgument("extension factor must be positive");
  GrassmannCode out;
  MatC id = MatC::Identity(k, k);
  for (const auto& e : code.elements) out.elements.push_back(SubspaceProjector::from_basis(kron(id, e.basis())));
  out.params = compute_params(out.elements);
  out.provenance = code.provenance;
  out.provenance.note = "I_" + std::to_string(k) + " (x) code";
  return out;
}

GrassmannCode kron_product(const GrassmannCode& a, const GrassmannCode& b) {
  if (a.elements.empty() || b.elements.empty()) throw InvalidArgument("Kronecker product of an empty code");
  GrassmannCode out;
  for (const auto& x : a.elements)
    for (const auto& y : b.elements) out.elements.push_back(SubspaceProjector::from_basis(kron(x.basis(), y.basis())));
  out.params = compute_params(out.elements);
  out.provenance.group = a.provenance.group + " x " + b.provenance.group;
  out.provenance.note = "Kronecker product";
  return out;
}

FondaCheck verify_fonda2(const PermGroup& g, const PermGroup& h, const Representation& rep,
                         const CharacterTable& g_table, const ClassFunction& chi_rho,
                         const CharacterTable& h_table, const std::vector<std::size_t>& chars, std::size_t element) {
  if (!g_table.classes || !h_table.classes) throw InvalidArgument("tables of enumerated groups are required");
  require_subgroup(g, h);
  const auto& hc = *h_table.classes;
  std::vector<cplx> e(h.order(), 0.0);
  for (std::size_t x = 0; x < h.order(); ++x)
    for (auto i : chars) e[x] += h_table[i].degree() * std::conj(h_table[i][hc.class_of[x]]);
  auto proj = isotypic_projector(rep, h, h_table, chars);
  auto w = SubspaceProjector::from_projector(proj.matrix);
  Permutation gp = g.element(element), gi = gp.inverse();
  auto gw = SubspaceProjector::from_basis(rep.op(gp).apply(w.basis()));

  std::vector<Permutation> hs;
  for (std::size_t x = 0; x < h.order(); ++x) hs.push_back(h.element(x));
  cplx acc = 0.0;
  for (std::size_t x = 0; x < h.order(); ++x) {
    Permutation left = hs[x] * gp;
    for (std::size_t y = 0; y < h.order(); ++y) {
      if (e[x] == 0.0 || e[y] == 0.0) continue;
      auto idx = g.index_of(left * hs[y] * gi);
      acc += e[x] * e[y] * chi_rho[g_table.classes->class_of[*idx]];
    }
  }
  double hh = static_cast<double>(h.order());
  FondaCheck out;
  out.direct = chordal_sq_trace(w, gw);
  out.double_sum = static_cast<double>(proj.rank) - acc.real() / (hh * hh);
  out.relative_residual = std::abs(out.direct - out.double_sum) / std::max(1.0, std::abs(out.direct));
  return out;
}

// ---------------------------------------------------------------- export

std::string code_csv_header() { return "group,H,n,m,N,dc2_num,dc2_den,meets_simplex"; }

std::string code_csv_row(const GrassmannCode& code) {
  const auto& p = code.params;
  auto r = recover_rational(p.dc2_min);
  std::string num = r ? std::to_string(r->num()) : std::to_string(p.dc2_min);
  std::string den = r ? std::to_string(r->den()) : "";
  return code.provenance.group + "," + code.provenance.subgroup + "," + std::to_string(p.n) + "," +
         std::to_string(p.m) + "," + std::to_string(p.N) + "," + num + "," + den + "," +
         (p.meets_simplex ? "true" : "false");
}

std::string code_to_json(const GrassmannCode& code, bool with_matrices) {
  const auto& p = code.params;
  nlohmann::json j;
  auto frac = [](double x) -> nlohmann::json {
    auto r = recover_rational(x);
    return r ? nlohmann::json(r->to_string()) : nlohmann::json(nullptr);
  };
  nlohmann::json params{{"n", p.n},           {"m", p.m},
                        {"N", p.N},           {"dc2", p.dc2_min},
                        {"dc2_fraction", frac(p.dc2_min)},
                        {"dtilde", p.dtilde_min}, {"meets_simplex", p.meets_simplex},
                        {"meets_orthoplex", p.meets_orthoplex}, {"orthoplex_applicable", p.orthoplex_applicable}};
  if (p.N >= 2 && p.m >= 1 && p.m < p.n) {
    auto sb = simplex_bound(p.n, p.m, p.N);
    params["simplex_bound"] = sb.value.to_string();
    params["simplex_equality_possible"] = sb.flag;
    params["orthoplex_bound"] = orthoplex_bound(p.n, p.m, p.N).value.to_string();
  }
  nlohmann::json sets = nlohmann::json::array();
  for (std::size_t k = 0; k < p.spa_sets.size(); ++k)
    sets.push_back({{"sin2", p.spa_sets[k].sin2}, {"pairs", p.spa_counts[k]}});
  params["spa_sets"] = std::move(sets);
  params["distances"] = p.distances;
  j["params"] = std::move(params);
  j["provenance"] = {{"group", code.provenance.group}, {"subgroup", code.provenance.subgroup},
                     {"rep", code.provenance.rep},     {"chars", code.provenance.chars},
                     {"seed", code.provenance.seed},   {"note", code.provenance.note}};
  if (with_matrices) {
    nlohmann::json mats = nlohmann::json::array();
    for (const auto& e : code.elements) {
      MatC pm = e.projector();
      nlohmann::json rows = nlohmann::json::array();
      for (Eigen::Index r = 0; r < pm.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < pm.cols(); ++c) row.push_back({pm(r, c).real(), pm(r, c).imag()});
        rows.push_back(std::move(row));
      }
      mats.push_back(std::move(rows));
    }
    j["projectors"] = std::move(mats);
  }
  return j.dump(1);
}

}  // namespace gpack
