#include "doctest.h"

#include <cmath>
#include <random>

#include "gpack/error.hpp"
#include "gpack/grassmann.hpp"

using namespace gpack;

namespace {

MatC gaussian(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  MatC m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = {nd(rng), nd(rng)};
  return m;
}

MatC random_unitary(Eigen::Index n, std::mt19937_64& rng) {
  Eigen::HouseholderQR<MatC> qr(gaussian(n, n, rng));
  return qr.householderQ() * MatC::Identity(n, n);
}

// Cosines from the eigenvalues of the m x m matrix A^H P_B A, an independent route.
std::vector<double> sin2_by_eigen(const SubspaceProjector& a, const SubspaceProjector& b) {
  MatC g = a.basis().adjoint() * b.projector() * a.basis();
  Eigen::SelfAdjointEigenSolver<MatC> es(g);
  std::vector<double> out;
  for (Eigen::Index i = es.eigenvalues().size() - 1; i >= 0; --i) out.push_back(1.0 - es.eigenvalues()[i]);
  return out;
}

}  // namespace

TEST_CASE("trivial configurations") {
  MatC e = MatC::Identity(4, 4);
  auto a = SubspaceProjector::from_basis(e.leftCols(2));
  auto b = SubspaceProjector::from_basis(e.rightCols(2));
  auto same = principal_angles(a, a);
  for (double v : same.sin2) CHECK(v == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(same.product() == 0.0);
  auto orth = principal_angles(a, b);
  for (double v : orth.sin2) CHECK(v == doctest::Approx(1.0));
  CHECK(chordal_sq_trace(a, b) == doctest::Approx(2.0));
  CHECK(chordal_sq_trace(a, a) == doctest::Approx(0.0));
  CHECK_THROWS_AS(principal_angles(a, SubspaceProjector::from_basis(e.leftCols(1))), InvalidArgument);
}

TEST_CASE("tetrahedral lines in C^3") {
  // the four lines of the regular simplex: distance 8/9 for every pair
  std::vector<Eigen::Vector3d> v{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      auto a = SubspaceProjector::from_basis(v[i].cast<std::complex<double>>());
      auto b = SubspaceProjector::from_basis(v[j].cast<std::complex<double>>());
      CHECK(chordal_sq_trace(a, b) == doctest::Approx(8.0 / 9.0).epsilon(1e-12));
      CHECK(principal_angles(a, b).chordal_sq() == doctest::Approx(8.0 / 9.0).epsilon(1e-12));
    }
}

TEST_CASE("small angles keep their precision") {
  double t = 1e-9;
  MatC a(2, 1), b(2, 1);
  a << 1.0, 0.0;
  b << std::cos(t), std::sin(t);
  auto s = principal_angles(SubspaceProjector::from_basis(a), SubspaceProjector::from_basis(b));
  CHECK(s.sin2[0] == doctest::Approx(std::sin(t) * std::sin(t)).epsilon(1e-6));
}

TEST_CASE("trace formula and SVD agree on random pairs") {
  std::mt19937_64 rng(2024);
  double worst = 0.0, worst_eig = 0.0, worst_sym = 0.0;
  for (int k = 0; k < 500; ++k) {
    Eigen::Index n = 2 + k % 9;
    Eigen::Index m = 1 + (k / 9) % (n - 1);
    auto a = SubspaceProjector::from_basis(gaussian(n, m, rng));
    auto b = SubspaceProjector::from_basis(gaussian(n, m, rng));
    auto ab = principal_angles(a, b);
    auto ba = principal_angles(b, a);
    worst = std::max(worst, std::abs(ab.chordal_sq() - chordal_sq_trace(a, b)));
    auto ref = sin2_by_eigen(a, b);
    for (std::size_t i = 0; i < ref.size(); ++i) {
      worst_eig = std::max(worst_eig, std::abs(ref[i] - ab.sin2[i]));
      worst_sym = std::max(worst_sym, std::abs(ab.sin2[i] - ba.sin2[i]));
    }
    for (std::size_t i = 1; i < ab.sin2.size(); ++i) REQUIRE(ab.sin2[i - 1] <= ab.sin2[i]);
  }
  CHECK(worst < 1e-8);
  CHECK(worst_eig < 1e-8);
  CHECK(worst_sym < 1e-10);
}

TEST_CASE("principal angles are unitarily invariant") {
  std::mt19937_64 rng(77);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    Eigen::Index n = 3 + k % 6;
    Eigen::Index m = 1 + k % (n - 1);
    MatC a = gaussian(n, m, rng), b = gaussian(n, m, rng), u = random_unitary(n, rng);
    auto before = principal_angles(SubspaceProjector::from_basis(a), SubspaceProjector::from_basis(b));
    auto after = principal_angles(SubspaceProjector::from_basis(u * a), SubspaceProjector::from_basis(u * b));
    for (std::size_t i = 0; i < before.sin2.size(); ++i) worst = std::max(worst, std::abs(before.sin2[i] - after.sin2[i]));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("projector round trip") {
  std::mt19937_64 rng(5);
  auto s = SubspaceProjector::from_basis(gaussian(6, 3, rng));
  auto t = SubspaceProjector::from_projector(s.projector());
  CHECK(t.dim() == 3);
  CHECK((t.projector() - s.projector()).cwiseAbs().maxCoeff() < 1e-9);
  MatC bad = MatC::Identity(3, 3) * 0.5;
  CHECK_THROWS_AS(SubspaceProjector::from_projector(bad), NumericalError);
}

TEST_CASE("bounds") {
  CHECK(simplex_bound(3, 1, 4).value == Rational(8, 9));
  CHECK(simplex_bound(3, 1, 4).flag);
  CHECK(simplex_bound(2673, 990, 12).value == Rational(680));
  CHECK(simplex_bound(5, 2, 1000000).to_double() == doctest::Approx(6.0 / 5.0).epsilon(1e-5));
  CHECK_FALSE(simplex_bound(3, 1, 7).flag);
  CHECK(orthoplex_bound(4, 2, 18).value == Rational(1));
  CHECK(orthoplex_bound(4, 2, 18).flag);
  CHECK_FALSE(orthoplex_bound(4, 2, 10).flag);
  CHECK(orthoplex_bound(8, 4, 1).value == Rational(2));
  CHECK_THROWS_AS(simplex_bound(3, 3, 4), InvalidArgument);
  CHECK_THROWS_AS(simplex_bound(3, 1, 1), InvalidArgument);
}
