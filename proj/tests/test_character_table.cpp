#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "gpack/character_table.hpp"
#include "gpack/error.hpp"
#include "json.hpp"

using namespace gpack;

namespace {

std::filesystem::path data_file(const std::string& name) {
  return std::filesystem::path(GPACK_DEFAULT_DATA_DIR) / name;
}

std::vector<std::size_t> degrees(const CharacterTable& t) {
  std::vector<std::size_t> d;
  for (std::size_t i = 0; i < t.size(); ++i) d.push_back(t.degree(i));
  return d;
}

// n! / prod(hooks) for every partition of n, independently of the library.
std::vector<std::size_t> hook_degrees(std::size_t n) {
  std::vector<std::size_t> out;
  std::vector<std::size_t> parts;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t maxp) {
    if (left == 0) {
      double f = 1;
      for (std::size_t i = 2; i <= n; ++i) f *= static_cast<double>(i);
      for (std::size_t r = 0; r < parts.size(); ++r)
        for (std::size_t c = 0; c < parts[r]; ++c) {
          std::size_t below = 0;
          for (std::size_t r2 = r + 1; r2 < parts.size() && parts[r2] > c; ++r2) ++below;
          f /= static_cast<double>(parts[r] - c + below);
        }
      out.push_back(static_cast<std::size_t>(std::llround(f)));
      return;
    }
    for (std::size_t p = std::min(left, maxp); p >= 1; --p) {
      parts.push_back(p);
      rec(left - p, p);
      parts.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("class multiplication coefficients") {
  auto s3 = make_symmetric(3);
  auto cls = conjugacy_classes(s3);
  auto a = class_multiplication(s3, cls);
  std::size_t t = 0;
  for (std::size_t c = 0; c < cls.size(); ++c)
    if (cls.element_orders[c] == 2) t = c;
  // brute force: products of all pairs of transpositions landing on the identity
  std::size_t hits = 0;
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y)
      if (cls.class_of[x] == t && cls.class_of[y] == t && s3.multiply(x, y) == 0) ++hits;
  CHECK(a(t, t, 0) == hits);
  CHECK(hits == 3);
  for (std::size_t j = 0; j < cls.size(); ++j)
    for (std::size_t k = 0; k < cls.size(); ++k) CHECK(a(0, j, k) == (j == k ? 1u : 0u));
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = 0; j < cls.size(); ++j) {
      std::size_t s = 0;
      for (std::size_t k = 0; k < cls.size(); ++k) s += a(i, j, k) * cls.sizes[k];
      CHECK(s == cls.sizes[i] * cls.sizes[j]);
    }

  auto c2 = make_cyclic(2);
  auto a2 = class_multiplication(c2, conjugacy_classes(c2));
  CHECK(a2(1, 1, 1) == 0);
  CHECK(a2(1, 1, 0) == 1);
}

TEST_CASE("degrees of small groups") {
  // regular representation: multiplicity of each irreducible equals its degree
  auto s3 = make_symmetric(3);
  auto t3 = compute_table(s3);
  CHECK(degrees(t3) == std::vector<std::size_t>{1, 1, 2});
  ClassFunction reg{t3.group_id, std::vector<cplx>(t3.class_sizes.size(), 0.0)};
  reg.values[0] = 6.0;
  auto m = decompose(t3, reg);
  for (std::size_t i = 0; i < t3.size(); ++i) CHECK(m[i] == t3.degree(i));

  for (std::size_t n : {4u, 5u, 6u, 7u}) {
    CAPTURE(n);
    CHECK(degrees(compute_table(make_symmetric(n))) == hook_degrees(n));
  }
}

TEST_CASE("cyclic group characters are roots of unity") {
  auto t = compute_table(make_cyclic(4));
  REQUIRE(t.size() == 4);
  for (const auto& chi : t.irreducibles)
    for (auto v : chi.values) {
      CHECK(std::abs(std::abs(v) - 1.0) < 1e-12);
      CHECK(std::abs(std::pow(v, 4) - 1.0) < 1e-12);
    }
  // trivial first
  for (auto v : t[0].values) CHECK(std::abs(v - 1.0) < 1e-12);
}

TEST_CASE("orthogonality on computed tables") {
  std::vector<PermGroup> groups{make_symmetric(5), make_alternating(5), make_alternating(6), make_pgl2(5),
                                make_psl2(7),      make_pgl2(9),        make_psl2(13),      load_group(data_file("m11_deg11.gens"))};
  for (const auto& g : groups) {
    CAPTURE(g.name());
    auto t = compute_table(g);
    CHECK(t.size() == conjugacy_classes(g).size());
    CHECK(t.orthogonality_residual() < 1e-9);
    std::size_t sum = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      sum += t.degree(i) * t.degree(i);
      CHECK(std::abs(inner_product(t, t[i], t[i]) - 1.0) < 1e-9);
      if (i > 0) CHECK(std::abs(inner_product(t, t[i], t[0])) < 1e-9);
    }
    CHECK(sum == g.order());
  }
}

TEST_CASE("permutation character of S5") {
  auto g = make_symmetric(5);
  auto t = compute_table(g);
  auto pi = permutation_character(g, *t.classes);
  CHECK(std::abs(inner_product(t, pi, t[0]) - 1.0) < 1e-12);
  CHECK(std::abs(inner_product(t, pi, pi) - 2.0) < 1e-12);
}

TEST_CASE("restriction and branching") {
  auto s5 = make_symmetric(5);
  auto t5 = compute_table(s5);
  auto s4 = stabilizer(s5, 4);
  auto t4 = compute_table(s4);
  auto pi = permutation_character(s5, *t5.classes);
  auto m = decompose(t5, pi);
  // the standard character is pi minus trivial
  std::size_t std4 = t5.size();
  for (std::size_t i = 1; i < t5.size(); ++i)
    if (m[i] == 1) std4 = i;
  REQUIRE(std4 < t5.size());
  CHECK(t5.degree(std4) == 4);
  auto r = restrict_and_decompose(t5[std4], s5, t5, s4, t4);
  std::size_t total = 0, parts = 0;
  for (std::size_t i = 0; i < t4.size(); ++i) {
    total += r.multiplicities[i] * t4.degree(i);
    parts += r.multiplicities[i];
  }
  CHECK(total == 4);
  CHECK(parts == 2);
  CHECK(r.multiplicities[0] == 1);
  CHECK(r.max_rounding_residual < 1e-9);

  auto triv = restrict_and_decompose(t5[0], s5, t5, s4, t4);
  CHECK(triv.multiplicities[0] == 1);
  CHECK(std::accumulate(triv.multiplicities.begin(), triv.multiplicities.end(), std::size_t{0}) == 1);

  // H = G gives indicator vectors
  for (std::size_t i = 0; i < t5.size(); ++i) {
    auto self = restrict_and_decompose(t5[i], s5, t5, s5, t5);
    for (std::size_t j = 0; j < t5.size(); ++j) CHECK(self.multiplicities[j] == (i == j ? 1u : 0u));
  }
}

TEST_CASE("table files") {
  auto m11 = load_group(data_file("m11_deg11.gens"));
  auto t = compute_table(m11);
  auto text = table_to_json(t);
  auto back = parse_table(text, &m11);
  CHECK(back.size() == 10);
  CHECK(back.source == TableSource::loaded);
  CHECK(back.orthogonality_residual() < 1e-9);

  auto detached = parse_table(text);
  CHECK(detached.group_order == 7920);
  CHECK(detached.group_id != back.group_id);

  auto j = nlohmann::json::parse(text);
  j["irreducibles"][3][2][0] = j["irreducibles"][3][2][0].get<double>() + 0.25;
  CHECK_THROWS_AS(parse_table(j.dump(), &m11), NumericalError);

  auto short_rows = nlohmann::json::parse(text);
  short_rows["irreducibles"].erase(1);
  CHECK_THROWS_AS(parse_table(short_rows.dump()), ParseError);

  auto s5 = make_symmetric(5);
  CHECK_THROWS_AS(parse_table(text, &s5), ParseError);

  auto trivial = parse_table(R"({"group":"1","class_sizes":[1],"class_orders":[1],"irreducibles":[[[1,0]]]})");
  CHECK(trivial.size() == 1);
  CHECK(trivial.degree(0) == 1);
}

TEST_CASE("class sum identities") {
  for (std::size_t n : {3u, 4u, 5u, 6u}) {
    auto g = make_symmetric(n);
    auto rep = verify_character_identities(compute_table(g), g);
    CAPTURE(n);
    CHECK(rep.max_class_product_residual < 1e-9);
    CHECK(rep.max_twisted_sum_residual < 1e-9);
  }
  auto c2 = make_cyclic(2);
  CHECK(verify_character_identities(compute_table(c2), c2).passed(1e-12));

  // direct summation over pairs of class members for S4
  auto s4 = make_symmetric(4);
  auto t = compute_table(s4);
  const auto& cls = *t.classes;
  double worst = 0.0;
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = 0; j < cls.size(); ++j)
      for (const auto& chi : t.irreducibles) {
        cplx lhs = 0.0;
        for (std::size_t x = 0; x < 24; ++x)
          for (std::size_t y = 0; y < 24; ++y)
            if (cls.class_of[x] == i && cls.class_of[y] == j) lhs += chi[cls.class_of[s4.multiply(x, y)]];
        cplx rhs = static_cast<double>(cls.sizes[i] * cls.sizes[j]) * chi[i] * chi[j] / chi.degree();
        worst = std::max(worst, std::abs(lhs - rhs));
      }
  CHECK(worst < 1e-9);
}
