#include "doctest.h"

#include <cstdlib>
#include <map>
#include <set>

#include "gpack/catalog.hpp"
#include "gpack/error.hpp"

using namespace gpack;

TEST_CASE("subset grammar") {
  std::vector<std::size_t> mult{1, 0, 1, 2}, deg{1, 1, 3, 2};   // n = 1 + 3 + 4 = 8
  auto all = select_subsets(mult, deg, "auto-all");
  std::set<long long> ms;
  for (const auto& s : all) {
    long long m = 0;
    for (auto i : s) m += static_cast<long long>(mult[i] * deg[i]);
    CHECK(2 * m <= 8);
    CHECK(ms.insert(m).second);
  }
  // subsets of {1, 3, 4}: sums 1, 3, 4, (5, 7 complement to 3, 1)
  CHECK(ms == std::set<long long>{1, 3, 4});
  auto mn = select_subsets(mult, deg, "auto-min");
  REQUIRE(mn.size() == 1);
  CHECK(mn[0] == std::vector<std::size_t>{0});
  CHECK(select_subsets(mult, deg, "3,2") == std::vector<std::vector<std::size_t>>{{2, 3}});
  CHECK_THROWS_AS(select_subsets(mult, deg, "0,2,3"), InvalidArgument);
  CHECK_THROWS_AS(select_subsets(mult, deg, "9"), InvalidArgument);
  CHECK_THROWS_AS(select_subsets(mult, deg, "x"), ParseError);
  CHECK(select_subsets({2}, {3}, "auto-all").empty());
}

TEST_CASE("branching prediction agrees with character prediction") {
  for (std::size_t N : {5, 6, 7}) {
    CatalogOptions o;
    o.build = false;
    auto from_chars = sweep(symmetric_source(N), o);
    auto from_hooks = predict_symmetric(N);
    std::multiset<std::tuple<long long, long long, std::int64_t, std::int64_t>> a, b;
    for (const auto& e : from_chars) a.insert({e.n, e.m, e.predicted.num(), e.predicted.den()});
    for (const auto& e : from_hooks) b.insert({e.n, e.m, e.predicted.num(), e.predicted.den()});
    CHECK(a == b);
    for (const auto& e : from_chars) CHECK(e.status == CellStatus::predicted);
  }
}

TEST_CASE("S5 and A5 cells are built and certified") {
  std::vector<CatalogEntry> all;
  for (auto src : {symmetric_source(5), alternating_source(5)}) {
    auto e = sweep(src);
    all.insert(all.end(), e.begin(), e.end());
  }
  sort_entries(all);
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(std::tie(all[i - 1].N, all[i - 1].n, all[i - 1].m) <=
                                                     std::tie(all[i].N, all[i].n, all[i].m));
  for (const auto& e : all) {
    CHECK(e.status == CellStatus::verified);
    CHECK(e.angle_sets == 1);
    REQUIRE(e.measured);
    CHECK(*e.measured == e.predicted);
  }
  auto cmp = compare_cells(expected_symmetric(5), all);
  for (const auto& c : cmp) CHECK(c.agrees);
  // (5,1) exists only through A5 acting on the restriction of [3,2]
  bool only_alt = false;
  for (const auto& e : all)
    if (e.n == 5 && e.m == 1) only_alt = e.family == "alternating";
  CHECK(only_alt);
  CHECK(!coincidences(all).empty());
}

TEST_CASE("a cell outside the reference rows is reported as differing") {
  std::vector<ExpectedCell> bogus{{5, 6, 3, Rational(2)}};
  auto entries = sweep(symmetric_source(5));
  auto c = compare_cells(bogus, entries);
  REQUIRE(c.size() == 1);
  CHECK(c[0].realized);
  CHECK_FALSE(c[0].agrees);
  CHECK(c[0].formula == Rational(15, 8));
}

TEST_CASE("reference rows agree with the closed form except where noted") {
  // independent recomputation of m(n-m)/n * N/(N-1)
  std::size_t off = 0, total = 0;
  for (std::size_t N = 4; N <= 8; ++N)
    for (const auto& c : expected_symmetric(N)) {
      ++total;
      Rational v = Rational(c.m * (c.n - c.m), c.n) * Rational(c.N, c.N - 1);
      off += !(v == c.dc2);
    }
  CHECK(total == 39);
  CHECK(off == 3);
}

TEST_CASE("projective columns") {
  auto cols = projective_columns(7);
  REQUIRE(cols.size() == 8);
  for (const auto& c : cols) CHECK(c.dc2 == predict_params(c.n, c.m, 8).dc2);
  auto r = projective_report(5);
  for (const auto& e : r.entries) CHECK(e.status == CellStatus::verified);
  CHECK(r.angles_ok);
  CHECK(r.columns[7].realized);
  CHECK_THROWS_AS(projective_report(9 * 2), InvalidArgument);
  CHECK_THROWS_AS(projective_report(15), InvalidArgument);
}

TEST_CASE("induced monomial representation") {
  auto g = make_pgl2(5);
  auto h = stabilizer(g, 5);
  auto gt = compute_table(g);
  auto ht = compute_table(h);
  for (std::size_t j = 0; j < ht.size(); ++j) {
    if (ht.degree(j) != 1) continue;
    InducedLinearRep rep(g, h, ht, j);
    CHECK(rep.dimension() == 6);
    auto chk = check_representation(rep, g, nullptr, nullptr, 50);
    CHECK(chk.unitarity < 1e-12);
    CHECK(chk.homomorphism < 1e-12);
    // Frobenius reciprocity: <Ind lambda, chi> = <lambda, chi|H>
    auto ind = character_of(rep, g, *gt.classes);
    for (std::size_t i = 0; i < gt.size(); ++i) {
      auto dec = restrict_and_decompose(gt[i], g, gt, h, ht);
      CHECK(std::abs(inner_product(gt, ind, gt[i]).real() - static_cast<double>(dec.multiplicities[j])) < 1e-9);
    }
  }
  CHECK_THROWS_AS(InducedLinearRep(g, h, ht, ht.size() - 1), InvalidArgument);
}

TEST_CASE("data directory override") {
  auto def = data_dir();
  setenv("GPACK_DATA_DIR", "/tmp/elsewhere", 1);
  CHECK(data_dir() == std::filesystem::path("/tmp/elsewhere"));
  unsetenv("GPACK_DATA_DIR");
  CHECK(data_dir() == def);
  CHECK(std::filesystem::exists(def / "sp4_2_deg6.gens"));
}

TEST_CASE("catalog output is deterministic") {
  CatalogOptions o;
  auto a = sweep(symmetric_source(6), o);
  auto b = sweep(symmetric_source(6), o);
  CHECK(entries_to_json(a, o) == entries_to_json(b, o));
  CHECK(entries_to_csv(a) == entries_to_csv(b));
  CHECK(entries_to_text(a).find("young:[3,2,1]") != std::string::npos);
}
