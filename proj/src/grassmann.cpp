#include "gpack/grassmann.hpp"

#include <algorithm>
#include <cmath>

#include "gpack/error.hpp"

namespace gpack {

SubspaceProjector SubspaceProjector::from_basis(const MatC& columns) {
  SubspaceProjector s;
  if (columns.cols() == 0) {
    s.basis_ = columns;
    return s;
  }
  Eigen::BDCSVD<MatC> svd(columns, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  Eigen::Index r = 0;
  while (r < sv.size() && sv[r] > 1e-8 * sv[0]) ++r;
  s.basis_ = svd.matrixU().leftCols(r);
  return s;
}

SubspaceProjector SubspaceProjector::from_projector(const MatC& p) {
  if (p.rows() != p.cols()) throw InvalidArgument("projector must be square");
  if ((p - p.adjoint()).cwiseAbs().maxCoeff() > 1e-9 || (p * p - p).cwiseAbs().maxCoeff() > 1e-9)
    throw NumericalError("matrix is not a Hermitian idempotent");
  double tr = p.trace().real();
  auto m = static_cast<Eigen::Index>(std::llround(tr));
  if (std::abs(tr - static_cast<double>(m)) > 1e-6) throw NumericalError("projector trace is not an integer");
  Eigen::SelfAdjointEigenSolver<MatC> es(p);
  SubspaceProjector s;
  // eigenvalues ascending: the last m belong to the range
  s.basis_ = es.eigenvectors().rightCols(m);
  return s;
}

double PrincipalAngleSet::chordal_sq() const {
  double s = 0.0;
  for (double v : sin2) s += v;
  return s;
}

double PrincipalAngleSet::product() const { return product_distance(*this); }

bool PrincipalAngleSet::matches(const PrincipalAngleSet& o, double tol) const {
  if (sin2.size() != o.sin2.size()) return false;
  for (std::size_t i = 0; i < sin2.size(); ++i)
    if (std::abs(sin2[i] - o.sin2[i]) > tol) return false;
  return true;
}

PrincipalAngleSet principal_angles(const SubspaceProjector& a, const SubspaceProjector& b) {
  if (a.ambient() != b.ambient() || a.dim() != b.dim())
    throw InvalidArgument("principal angles need subspaces of equal ambient and dimension");
  const Eigen::Index m = a.dim();
  PrincipalAngleSet out;
  if (m == 0) return out;
  MatC cross = a.basis().adjoint() * b.basis();
  Eigen::JacobiSVD<MatC> cs(cross);
  // cosines descending <-> angles ascending; small angles come from the sines instead
  MatC resid = b.basis() - a.basis() * cross;
  Eigen::JacobiSVD<MatC> ss(resid);
  Eigen::VectorXd sines = ss.singularValues().reverse();
  out.sin2.resize(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) {
    double c = std::min(1.0, cs.singularValues()[i]);
    double s2 = c * c > 0.5 ? sines[i] * sines[i] : 1.0 - c * c;
    out.sin2[static_cast<std::size_t>(i)] = std::clamp(s2, 0.0, 1.0);
  }
  std::sort(out.sin2.begin(), out.sin2.end());
  return out;
}

double chordal_sq_trace(const SubspaceProjector& a, const SubspaceProjector& b) {
  if (a.ambient() != b.ambient()) throw InvalidArgument("subspaces live in different ambient spaces");
  // trace(P_A P_B) = ||A^H B||_F^2
  return static_cast<double>(a.dim()) - (a.basis().adjoint() * b.basis()).squaredNorm();
}

double product_distance(const PrincipalAngleSet& angles) {
  double p = 1.0;
  for (double v : angles.sin2) {
    if (v < 1e-10) return 0.0;
    p *= std::sqrt(v);
  }
  return p;
}

Bound simplex_bound(long long n, long long m, long long N) {
  if (m < 1 || m >= n || N < 2) throw InvalidArgument("simplex bound needs 1 <= m < n and N >= 2");
  return {Rational(m * (n - m) * N, n * (N - 1)), 2 * N <= n * (n + 1)};
}

Bound orthoplex_bound(long long n, long long m, long long N) {
  if (m < 1 || m >= n) throw InvalidArgument("orthoplex bound needs 1 <= m < n");
  return {Rational(m * (n - m), n), 2 * N > n * (n + 1)};
}

}  // namespace gpack
