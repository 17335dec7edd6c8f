#include "gpack/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "gpack/error.hpp"
#include "gpack/partition.hpp"
#include "gpack/perm_group.hpp"
#include "json.hpp"

#ifndef GPACK_DEFAULT_DATA_DIR
#define GPACK_DEFAULT_DATA_DIR "data"
#endif

namespace gpack {

std::string to_string(CellStatus s) {
  switch (s) {
    case CellStatus::verified: return "verified";
    case CellStatus::predicted: return "predicted";
    case CellStatus::failed: return "failed";
  }
  return "?";
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("GPACK_DATA_DIR"); env && *env) return env;
  return GPACK_DEFAULT_DATA_DIR;
}

namespace {

PermGroup adjacent_subgroup(const PermGroup& g, std::size_t len, std::size_t count, std::string name) {
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<std::size_t> cyc;
    for (std::size_t j = 0; j < len; ++j) cyc.push_back(i + j);
    gens.push_back(Permutation::from_cycles(g.degree(), {cyc}));
  }
  return subgroup(g, gens, std::move(name));
}

// Indices of the irreducible constituents of rep restricted to g, repeated by multiplicity.
std::vector<std::size_t> constituents(const Representation& rep, const PermGroup& g, const CharacterTable& t) {
  auto chi = character_of(rep, g, *t.classes);
  auto mult = decompose(t, chi);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mult.size(); ++i)
    for (std::size_t k = 0; k < mult[i]; ++k) out.push_back(i);
  return out;
}

}  // namespace

CatalogSource symmetric_source(std::size_t N, std::uint64_t seed) {
  CatalogSource s;
  s.family = "symmetric";
  s.g = make_symmetric(N);
  s.h = adjacent_subgroup(s.g, 2, N - 2, "S" + std::to_string(N - 1));
  s.g_table = compute_table(s.g, seed);
  s.h_table = compute_table(s.h, seed);
  auto lookup = std::make_shared<std::map<std::size_t, Partition>>();
  for (const auto& lambda : partitions_of(N)) {
    auto rep = young_orthogonal_rep(lambda);
    auto c = constituents(*rep, s.g, s.g_table);
    if (c.size() != 1) throw NumericalError("Young representation " + lambda.to_string() + " is reducible");
    (*lookup)[c[0]] = lambda;
  }
  s.rep_for = [lookup](std::size_t index, std::string& label) -> RepPtr {
    auto it = lookup->find(index);
    if (it == lookup->end()) return nullptr;
    label = "young:" + it->second.to_string();
    return young_orthogonal_rep(it->second);
  };
  return s;
}

CatalogSource alternating_source(std::size_t N, std::uint64_t seed) {
  if (N < 4) throw InvalidArgument("alternating catalog needs N >= 4");
  CatalogSource s;
  s.family = "alternating";
  auto sn = make_symmetric(N);
  s.g = adjacent_subgroup(sn, 3, N - 2, "A" + std::to_string(N));
  s.h = adjacent_subgroup(s.g, 3, N - 3, "A" + std::to_string(N - 1));
  s.g_table = compute_table(s.g, seed);
  s.h_table = compute_table(s.h, seed);
  struct Origin {
    Partition lambda;
    bool split;
  };
  auto lookup = std::make_shared<std::map<std::size_t, Origin>>();
  for (const auto& lambda : partitions_of(N)) {
    auto rep = young_orthogonal_rep(lambda);
    auto c = constituents(*rep, s.g, s.g_table);
    for (auto i : c)
      if (!lookup->count(i)) (*lookup)[i] = Origin{lambda, c.size() > 1};
  }
  auto g = s.g;
  auto table = s.g_table;
  s.rep_for = [lookup, g, table, seed](std::size_t index, std::string& label) -> RepPtr {
    auto it = lookup->find(index);
    if (it == lookup->end()) return nullptr;
    RepPtr young = young_orthogonal_rep(it->second.lambda);
    if (!it->second.split) {
      label = "young:" + it->second.lambda.to_string();
      return young;
    }
    label = "split:" + it->second.lambda.to_string() + "#" + std::to_string(index);
    return extract_irrep(young, g, table, index, seed);
  };
  return s;
}

CatalogSource projective_source(std::size_t q, bool special, std::uint64_t seed) {
  CatalogSource s;
  s.family = special ? "psl2" : "pgl2";
  s.g = special ? make_psl2(q) : make_pgl2(q);
  s.h = stabilizer(s.g, q).renamed("B");
  s.g_table = compute_table(s.g, seed);
  s.h_table = compute_table(s.h, seed);
  auto g = s.g;
  auto table = s.g_table;
  s.rep_for = [g, table, seed](std::size_t index, std::string& label) -> RepPtr {
    auto rep = find_irrep(g, table, index, seed);
    if (rep) label = rep->provenance;
    return rep;
  };
  return s;
}

CatalogSource loaded_source(const std::filesystem::path& file, bool derived, std::uint64_t seed, std::size_t cap) {
  CatalogSource s;
  s.family = "loaded";
  s.g = load_group(file, cap);
  if (derived) s.g = derived_subgroup(s.g).renamed(s.g.name() + "'");
  s.h = stabilizer(s.g, 0).renamed("Stab(1)");
  s.g_table = compute_table(s.g, seed);
  s.h_table = compute_table(s.h, seed);
  auto g = s.g;
  auto h = s.h;
  auto table = s.g_table;
  auto h_table = s.h_table;
  s.rep_for = [g, h, table, h_table, seed](std::size_t index, std::string& label) -> RepPtr {
    auto rep = realize_irrep(g, table, h, h_table, index, seed);
    if (rep) label = rep->provenance;
    return rep;
  };
  return s;
}

RepPtr realize_irrep(const PermGroup& g, const CharacterTable& g_table, const PermGroup& h,
                     const CharacterTable& h_table, std::size_t index, std::uint64_t seed) {
  auto rep = find_irrep(g, g_table, index, seed);
  if (rep) return rep;
  auto dec = restrict_and_decompose(g_table[index], g, g_table, h, h_table);
  for (std::size_t j = 0; j < h_table.size(); ++j)
    if (h_table.degree(j) == 1 && dec.multiplicities[j] > 0)
      return extract_irrep(std::make_shared<InducedLinearRep>(g, h, h_table, j), g, g_table, index, seed);
  return nullptr;
}

std::vector<std::vector<std::size_t>> select_subsets(const std::vector<std::size_t>& multiplicities,
                                                     const std::vector<std::size_t>& degrees, const std::string& spec) {
  std::vector<std::size_t> present;
  long long n = 0;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    n += static_cast<long long>(multiplicities[i] * degrees[i]);
    if (multiplicities[i]) present.push_back(i);
  }
  auto dim_of = [&](const std::vector<std::size_t>& s) {
    long long m = 0;
    for (auto i : s) m += static_cast<long long>(multiplicities[i] * degrees[i]);
    return m;
  };
  if (spec != "auto-min" && spec != "auto-all") {
    std::vector<std::size_t> s;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::size_t pos = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(tok, &pos);
      } catch (const std::exception&) {
        throw ParseError("bad character index '" + tok + "'");
      }
      if (pos != tok.size()) throw ParseError("bad character index '" + tok + "'");
      if (v >= multiplicities.size()) throw InvalidArgument("character index " + tok + " out of range");
      s.push_back(v);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    long long m = dim_of(s);
    if (m == 0 || m == n) throw InvalidArgument("character subset gives a trivial or full subspace");
    return {s};
  }
  if (present.size() < 2) return {};
  if (present.size() > 20) throw InvalidArgument("too many constituents to sweep");
  std::map<long long, std::vector<std::size_t>> by_m;
  for (std::uint32_t mask = 1; mask + 1 < (1u << present.size()); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t b = 0; b < present.size(); ++b)
      if (mask >> b & 1u) s.push_back(present[b]);
    long long m = dim_of(s);
    if (2 * m > n) continue;
    by_m.try_emplace(m, std::move(s));
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto& [m, s] : by_m) {
    out.push_back(s);
    if (spec == "auto-min") break;
  }
  return out;
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

void fill_from_code(CatalogEntry& e, const GrassmannCode& code, double tol) {
  const auto& p = code.params;
  e.dc2_min = p.dc2_min;
  e.dc2_max = p.dc2_max;
  e.dtilde = p.dtilde_min;
  e.angle_sets = p.spa_sets.size();
  if (!p.spa_sets.empty()) {
    e.angles = p.spa_sets.front().sin2;
    std::sort(e.angles.begin(), e.angles.end(), std::greater<>());
  }
  auto report = verify_simplex(code);
  e.equidistant = report.equidistant;
  e.relative_gap = report.relative_gap;
  e.measured = recover_rational(p.dc2_min, 10000, tol);
  std::vector<std::string> why;
  if (!report.attained) why.push_back("simplex bound not attained");
  if (!report.equidistant) why.push_back("not equidistant");
  if (e.angle_sets != 1) why.push_back(std::to_string(e.angle_sets) + " angle sets");
  if (!e.measured) why.push_back("no rational within tolerance");
  else if (!(*e.measured == e.predicted)) why.push_back("measured " + e.measured->to_string());
  e.status = why.empty() ? CellStatus::verified : CellStatus::failed;
  for (std::size_t i = 0; i < why.size(); ++i) e.note += (i ? "; " : "") + why[i];
}

}  // namespace

std::vector<CatalogEntry> sweep(const CatalogSource& source, const CatalogOptions& options) {
  std::vector<CatalogEntry> out;
  const auto& gt = source.g_table;
  const auto& ht = source.h_table;
  auto fusion = class_fusion(source.g, *gt.classes, source.h, *ht.classes);
  long long index = static_cast<long long>(source.g.order() / source.h.order());
  std::vector<std::size_t> h_degrees;
  for (std::size_t j = 0; j < ht.size(); ++j) h_degrees.push_back(ht.degree(j));

  for (std::size_t i = 0; i < gt.size(); ++i) {
    std::size_t n = gt.degree(i);
    if (n < 2) continue;
    if (!options.degrees.empty() && std::find(options.degrees.begin(), options.degrees.end(), n) == options.degrees.end())
      continue;
    auto dec = restrict_and_decompose(gt[i], ht, fusion);
    auto subsets = select_subsets(dec.multiplicities, h_degrees, options.chars);
    if (subsets.empty()) continue;

    RepPtr rep;
    std::string label;
    std::vector<MatC> sums;
    std::string build_error;
    if (options.build) {
      try {
        rep = source.rep_for(i, label);
        if (rep) sums = class_sums_apply(*rep, source.h, *ht.classes, MatC::Identity(n, n));
      } catch (const Error& err) {
        build_error = err.what();
        rep = nullptr;
      }
    }
    for (const auto& s : subsets) {
      CatalogEntry e;
      e.family = source.family;
      e.group = source.g.name();
      e.subgroup = source.h.name();
      e.rep = rep ? label : "chi" + std::to_string(i);
      e.g_char = i;
      e.chars = s;
      auto pred = predict_params(gt[i], ht, fusion, s, index);
      e.N = pred.N;
      e.n = pred.n;
      e.m = pred.m;
      e.predicted = pred.dc2;
      if (!rep) {
        e.status = build_error.empty() ? CellStatus::predicted : CellStatus::failed;
        if (options.build) e.note = build_error.empty() ? "no carrier within tensor cube" : build_error;
        out.push_back(std::move(e));
        continue;
      }
      try {
        auto proj = isotypic_projector(sums, ht, s);
        if (static_cast<long long>(proj.rank) != e.m) throw NumericalError("projector rank differs from m");
        auto w = SubspaceProjector::from_projector(proj.matrix);
        auto code = orbit_code(source.g, source.h, *rep, w);
        fill_from_code(e, code, options.tol);
      } catch (const OrbitCollapse& err) {
        e.status = CellStatus::failed;
        e.note = err.what();
      } catch (const Error& err) {
        e.status = CellStatus::failed;
        e.note = err.what();
      }
      out.push_back(std::move(e));
    }
  }
  sort_entries(out);
  return out;
}

std::vector<CatalogEntry> predict_symmetric(std::size_t N, const std::string& chars) {
  std::vector<CatalogEntry> out;
  for (const auto& lambda : partitions_of(N)) {
    auto n = static_cast<long long>(hook_dimension(lambda));
    if (n < 2) continue;
    auto parts = branching(lambda);
    std::vector<std::size_t> mult(parts.size(), 1), deg;
    for (const auto& mu : parts) deg.push_back(hook_dimension(mu));
    for (const auto& s : select_subsets(mult, deg, chars)) {
      CatalogEntry e;
      e.family = "symmetric";
      e.group = "S" + std::to_string(N);
      e.subgroup = "S" + std::to_string(N - 1);
      e.rep = "young:" + lambda.to_string();
      e.chars = s;
      e.N = static_cast<long long>(N);
      e.n = n;
      for (auto i : s) e.m += static_cast<long long>(deg[i]);
      e.predicted = predict_params(e.n, e.m, e.N).dc2;
      e.note = "branching:";
      for (auto i : s) e.note += " " + parts[i].to_string();
      out.push_back(std::move(e));
    }
  }
  sort_entries(out);
  return out;
}

void sort_entries(std::vector<CatalogEntry>& entries) {
  std::stable_sort(entries.begin(), entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return std::tie(a.N, a.n, a.m, a.family, a.group, a.g_char, a.chars) <
           std::tie(b.N, b.n, b.m, b.family, b.group, b.g_char, b.chars);
  });
}

std::vector<std::size_t> coincidences(const std::vector<CatalogEntry>& entries) {
  std::map<std::tuple<long long, long long, long long, std::int64_t, std::int64_t>, std::set<std::string>> seen;
  auto key = [](const CatalogEntry& e) {
    return std::make_tuple(e.N, e.n, e.m_key(), e.predicted.num(), e.predicted.den());
  };
  for (const auto& e : entries) seen[key(e)].insert(e.family);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (seen[key(entries[i])].size() > 1) out.push_back(i);
  return out;
}


namespace {

struct Row {
  long long n, m;
  std::int64_t p, q;
};

std::vector<ExpectedCell> cells(long long N, std::initializer_list<Row> rows) {
  std::vector<ExpectedCell> out;
  for (const auto& r : rows) out.push_back({N, r.n, r.m, Rational(r.p, r.q)});
  return out;
}

}  // namespace

std::vector<ExpectedCell> expected_symmetric(std::size_t N) {
  switch (N) {
    case 4: return cells(4, {{3, 1, 8, 9}});
    case 5: return cells(5, {{4, 1, 15, 16}, {5, 1, 1, 1}, {5, 2, 3, 2}, {6, 3, 15, 8}});
    case 6:
      return cells(6, {{5, 1, 24, 25}, {8, 3, 9, 4}, {9, 4, 8, 3}, {10, 4, 72, 25}, {16, 5, 33, 8}, {16, 6, 27, 4}});
    case 7:
      return cells(7, {{6, 1, 35, 36},
                       {14, 5, 15, 4},
                       {15, 5, 35, 9},
                       {20, 10, 35, 6},
                       {21, 5, 40, 9},
                       {21, 8, 52, 9},
                       {35, 8, 35, 6},
                       {35, 9, 39, 5},
                       {35, 10, 25, 3},
                       {35, 16, 152, 15},
                       {35, 17, 51, 5}});
    case 8:
      return cells(8, {{7, 1, 45, 49},
                       {20, 6, 24, 5},
                       {21, 6, 240, 49},
                       {28, 14, 8, 1},
                       {35, 10, 400, 49},
                       {35, 15, 480, 49},
                       {42, 21, 12, 1},
                       {45, 10, 80, 9},
                       {56, 21, 15, 1},
                       {64, 14, 25, 2},
                       {64, 15, 105, 8},
                       {64, 35, 145, 8},
                       {70, 14, 64, 5},
                       {70, 21, 84, 5},
                       {70, 35, 20, 1},
                       {90, 20, 160, 9},
                       {90, 35, 220, 9}});
    default: throw InvalidArgument("symmetric table rows exist for 4 <= N <= 8");
  }
}

std::vector<ExpectedCell> expected_sp4(std::size_t N) {
  if (N == 10)
    return cells(10, {{5, 1, 8, 9},
                      {8, 4, 20, 9},
                      {9, 1, 80, 81},
                      {9, 4, 320, 81},
                      {10, 1, 1, 1},
                      {10, 2, 16, 9},
                      {10, 4, 8, 3},
                      {10, 5, 25, 9}});
  if (N == 6) return cells(6, {{5, 1, 24, 25}, {8, 3, 9, 4}, {9, 4, 8, 3}, {10, 3, 63, 25}, {10, 4, 72, 25}});
  throw InvalidArgument("Sp4(2) acts 2-transitively on 6 or 10 points");
}

std::vector<ExpectedBlock> expected_large() {
  return {
      {"Sp6(2)", 36,
       cells(36, {{15, 1, 24, 25},
                  {21, 1, 48, 49},
                  {27, 7, 16, 3},
                  {35, 1, 1224, 1225},
                  {35, 14, 216, 25},
                  {35, 15, 432, 49},
                  {56, 7, 63, 10},
                  {56, 21, 27, 2},
                  {56, 28, 72, 5},
                  {70, 28, 432, 25},
                  {84, 14, 12, 1},
                  {84, 28, 96, 5}})},
      {"Sp6(2)", 28,
       cells(28, {{7, 1, 8, 9},
                  {21, 1, 80, 81},
                  {21, 6, 40, 9},
                  {27, 1, 728, 729},
                  {27, 6, 392, 81},
                  {27, 7, 3920, 729},
                  {35, 15, 80, 9},
                  {56, 6, 50, 9},
                  {56, 20, 40, 9},
                  {56, 26, 130, 9},
                  {70, 10, 8, 9},
                  {84, 24, 160, 9}})},
      {"Sp8(2)", 136,
       cells(136, {{51, 1, 80, 81},
                   {85, 1, 224, 225},
                   {119, 35, 224, 9},
                   {238, 28, 224, 9},
                   {510, 210, 1120, 9},
                   {595, 28, 627, 25},
                   {595, 175, 1120, 9}})},
      {"Sp8(2)", 120,
       cells(120, {{35, 1, 48, 49},
                   {85, 1, 288, 289},
                   {119, 1, 944, 945},
                   {119, 34, 4624, 189},
                   {119, 35, 224, 9},
                   {238, 34, 9248, 315}})},
      {"Sp10(2)", 528, cells(528, {{187, 1, 288, 289}, {341, 1, 960, 961}, {495, 155, 320, 3}, {6138, 868, 2240, 3}})},
      {"Sp10(2)", 496, cells(496, {{155, 1, 224, 225}, {341, 1, 1088, 1089}, {527, 187, 1088, 9}})},
      {"Co3", 276,
       cells(276, {{23, 1, 24, 25}, {253, 1, 3024, 3025}, {253, 22, 504, 25}, {1771, 231, 1008, 5}, {7084, 1540, 6048, 5}})},
      {"HS", 176,
       cells(176, {{22, 1, 24, 25},
                   {77, 21, 384, 25},
                   {154, 1, 1224, 1225},
                   {154, 21, 456, 25},
                   {154, 28, 576, 25},
                   {154, 29, 1160, 49},
                   {154, 49, 168, 5},
                   {231, 21, 96, 5},
                   {231, 84, 1344, 25},
                   {231, 105, 288, 5}})},
      {"M24", 24,
       cells(24, {{23, 1, 528, 529}, {252, 22, 440, 21}, {483, 230, 880, 7}, {1265, 230, 2160, 11}, {2277, 253, 704, 3}})},
  };
}

std::vector<CellComparison> compare_cells(const std::vector<ExpectedCell>& expected,
                                          const std::vector<CatalogEntry>& entries) {
  std::vector<CellComparison> out;
  for (const auto& x : expected) {
    CellComparison c;
    c.expected = x;
    c.formula = predict_params(x.n, x.m, x.N).dc2;
    long long key = std::min(x.m, x.n - x.m);
    for (const auto& e : entries) {
      if (e.N != x.N || e.n != x.n || e.m_key() != key) continue;
      c.realized = true;
      bool good = e.status == CellStatus::verified && e.measured && *e.measured == x.dc2;
      if (good && !c.agrees) {
        c.agrees = true;
        c.match = e;
      }
      if (!c.match) c.match = e;
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ProjectiveColumn> projective_columns(long long q) {
  Rational Q(q);
  Rational one(1);
  std::vector<ProjectiveColumn> c;
  c.push_back({1, q + 1, 1, one, one});
  c.push_back({2, q, 1, one - one / (Q * Q), one - one / (Q * Q)});
  c.push_back({3, q + 1, 2, Rational(2) * (Q - one) / Q, ((Q - one) / Q) * ((Q - one) / Q)});
  c.push_back({4, q, (q - 1) / 2, (Q + one) * (Q + one) * (Q - one) / (Rational(4) * Q * Q), std::nullopt});
  c.push_back({5, q + 1, (q - 1) / 2, (Q - one) * (Q + Rational(3)) / (Rational(4) * Q), std::nullopt});
  c.push_back({6, q + 1, (q + 1) / 2, (Q + one) * (Q + one) / (Rational(4) * Q), std::nullopt});
  c.push_back({7, (q + 1) / 2, 1, (Q - one) / Q, (Q - one) / Q});
  c.push_back({8, q - 1, (q - 1) / 2, (Q * Q - one) / (Rational(4) * Q), std::nullopt});
  return c;
}

std::optional<std::vector<double>> expected_angles(long long q) {
  const double r5 = std::sqrt(5.0);
  switch (q) {
    case 5: return std::vector<double>{1.0, 1.0 / 5};
    case 7: return std::vector<double>{6.0 / 7, 6.0 / 7, 0.0};
    case 9: return std::vector<double>{1.0, 5.0 / 9, 1.0 / 3, 1.0 / 3};
    case 11: {
      double a = (7 + 3 * r5) / 22, b = (7 - 3 * r5) / 22;
      return std::vector<double>{a, a, b, b, 0.0};
    }
    default: return std::nullopt;
  }
}

namespace {

bool is_odd_prime_power(long long q) {
  if (q < 3 || q % 2 == 0) return false;
  long long p = 3;
  while (q % p) p += 2;
  while (q % p == 0) q /= p;
  return q == 1;
}

bool same_angles(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

}  // namespace

ProjectiveReport projective_report(long long q, const CatalogOptions& options) {
  if (!is_odd_prime_power(q)) throw InvalidArgument("q must be an odd prime power");
  ProjectiveReport r;
  r.q = q;
  for (bool special : {false, true}) {
    auto src = projective_source(static_cast<std::size_t>(q), special, options.seed);
    auto e = sweep(src, options);
    r.entries.insert(r.entries.end(), e.begin(), e.end());
  }
  sort_entries(r.entries);
  r.expected_angles = expected_angles(q);
  for (const auto& col : projective_columns(q)) {
    ColumnResult c;
    c.column = col;
    long long key = std::min(col.m, col.n - col.m);
    for (const auto& e : r.entries)
      if (e.n == col.n && e.m_key() == key) c.entries.push_back(e);
    c.realized = !c.entries.empty();
    c.dc2_ok = c.realized;
    for (const auto& e : c.entries) {
      double want = col.dc2.to_double();
      bool ok = e.status == CellStatus::verified && std::abs(e.dc2_min - want) <= options.tol * want &&
                e.measured && *e.measured == col.dc2;
      c.dc2_ok = c.dc2_ok && ok;
      if (col.dtilde) {
        double d = col.dtilde->to_double();
        c.dtilde_ok = c.dtilde_ok && std::abs(e.dtilde * e.dtilde - d) <= 1e-6 * std::max(1.0, d);
      }
    }
    if (col.column == 8)
      for (const auto& e : c.entries) {
        bool seen = false;
        for (const auto& a : r.column8_angles) seen = seen || same_angles(a, e.angles, 1e-6);
        if (!seen) r.column8_angles.push_back(e.angles);
      }
    r.columns.push_back(std::move(c));
  }
  if (r.expected_angles)
    for (const auto& a : r.column8_angles) r.angles_ok = r.angles_ok || same_angles(a, *r.expected_angles, 1e-6);
  return r;
}

std::vector<UnionCandidate> union_sweep(std::size_t N_min, std::size_t N_max, std::uint64_t seed) {
  std::vector<UnionCandidate> out;
  for (std::size_t N = N_min; N <= N_max; ++N) {
    auto src = symmetric_source(N, seed);
    const auto& ht = src.h_table;
    auto fusion = class_fusion(src.g, *src.g_table.classes, src.h, *ht.classes);
    for (std::size_t i = 0; i < src.g_table.size(); ++i) {
      auto dec = restrict_and_decompose(src.g_table[i], ht, fusion);
      std::map<std::size_t, std::vector<std::size_t>> by_dim;
      for (std::size_t j = 0; j < dec.multiplicities.size(); ++j)
        if (dec.multiplicities[j]) by_dim[dec.multiplicities[j] * ht.degree(j)].push_back(j);
      for (const auto& [dim, comps] : by_dim) {
        if (comps.size() < 2) continue;
        std::string label;
        auto rep = src.rep_for(i, label);
        UnionCandidate u;
        u.group = src.g.name();
        u.rep = label;
        for (auto j : comps) u.subsets.push_back({j});
        auto code = build_union_code(src.g, src.h, rep, ht, u.subsets);
        u.n = code.params.n;
        u.m = code.params.m;
        u.N = code.params.N;
        u.formula = union_formula(u.n, u.m, u.N);
        u.measured_min = recover_rational(code.params.dc2_min);
        u.distances = code.params.distances;
        double f = u.formula.to_double();
        u.formula_ok = std::abs(code.params.dc2_min - f) <= 1e-8 * f;
        u.per_orbit = union_formula(u.n, u.m, u.N / static_cast<long long>(u.subsets.size()));
        double p = u.per_orbit.to_double();
        u.per_orbit_ok = std::abs(code.params.dc2_min - p) <= 1e-8 * p;
        u.two_distances = u.distances.size() == 2;
        out.push_back(std::move(u));
      }
    }
  }
  return out;
}

std::string entries_to_csv(const std::vector<CatalogEntry>& entries) {
  std::ostringstream os;
  os << "family,group,subgroup,rep,N,n,m,chars,predicted,measured,dc2_min,relative_gap,angle_sets,status\n";
  os.precision(12);
  for (const auto& e : entries)
    os << e.family << ',' << e.group << ',' << e.subgroup << ',' << e.rep << ',' << e.N << ',' << e.n << ','
       << e.m << ",\"" << join(e.chars) << "\"," << e.predicted << ',' << (e.measured ? e.measured->to_string() : "")
       << ',' << e.dc2_min << ',' << e.relative_gap << ',' << e.angle_sets << ',' << to_string(e.status) << '\n';
  return os.str();
}

std::string entries_to_text(const std::vector<CatalogEntry>& entries) {
  std::ostringstream os;
  auto flagged = coincidences(entries);
  std::set<std::size_t> flag(flagged.begin(), flagged.end());
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-12s %-8s %4s %5s %5s  %-12s %-12s %-10s %s\n", "family", "group", "N", "n", "m",
                "predicted", "measured", "status", "rep");
  os << buf;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    std::snprintf(buf, sizeof buf, "%-12s %-8s %4lld %5lld %5lld  %-12s %-12s %-10s %s%s", e.family.c_str(),
                  e.group.c_str(), e.N, e.n, e.m, e.predicted.to_string().c_str(),
                  e.measured ? e.measured->to_string().c_str() : "-", to_string(e.status).c_str(), e.rep.c_str(),
                  flag.count(i) ? " [both lineages]" : "");
    os << buf;
    if (!e.note.empty()) os << "  (" << e.note << ")";
    os << '\n';
  }
  return os.str();
}

std::string entries_to_json(const std::vector<CatalogEntry>& entries, const CatalogOptions& options) {
  nlohmann::json j;
  j["seed"] = options.seed;
  j["tolerance"] = options.tol;
  j["chars"] = options.chars;
  auto flagged = coincidences(entries);
  std::set<std::size_t> flag(flagged.begin(), flagged.end());
  j["cells"] = nlohmann::json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    nlohmann::json c;
    c["family"] = e.family;
    c["group"] = e.group;
    c["subgroup"] = e.subgroup;
    c["rep"] = e.rep;
    c["g_char"] = e.g_char;
    c["chars"] = e.chars;
    c["N"] = e.N;
    c["n"] = e.n;
    c["m"] = e.m;
    c["predicted"] = e.predicted.to_string();
    c["measured"] = e.measured ? nlohmann::json(e.measured->to_string()) : nlohmann::json(nullptr);
    c["dc2_min"] = e.dc2_min;
    c["dc2_max"] = e.dc2_max;
    c["relative_gap"] = e.relative_gap;
    c["dtilde"] = e.dtilde;
    c["angle_sets"] = e.angle_sets;
    c["angles"] = e.angles;
    c["status"] = to_string(e.status);
    c["both_lineages"] = flag.count(i) > 0;
    if (!e.note.empty()) c["note"] = e.note;
    j["cells"].push_back(std::move(c));
  }
  return j.dump(2);
}

}  // namespace gpack
