#pragma once

#include <vector>

#include <Eigen/Dense>

#include "gpack/rational.hpp"

namespace gpack {

using MatC = Eigen::MatrixXcd;

/// Orthogonal projector onto an m-dimensional subspace of C^n, with an orthonormal basis.
class SubspaceProjector {
public:
  SubspaceProjector() = default;
  /// Columns need not be orthonormal; they are orthonormalized (rank-revealing, 1e-8 sigma_max).
  static SubspaceProjector from_basis(const MatC& columns);
  /// Checks Hermitian idempotence to 1e-9 and integral trace to 1e-6.
  static SubspaceProjector from_projector(const MatC& p);

  Eigen::Index ambient() const noexcept { return basis_.rows(); }
  Eigen::Index dim() const noexcept { return basis_.cols(); }
  const MatC& basis() const noexcept { return basis_; }
  MatC projector() const { return basis_ * basis_.adjoint(); }

private:
  MatC basis_;
};

/// sin^2 of the principal angles, ascending.
struct PrincipalAngleSet {
  std::vector<double> sin2;
  double chordal_sq() const;
  /// Product of sines; exactly zero when some sin^2 is below 1e-10.
  double product() const;
  bool matches(const PrincipalAngleSet& o, double tol = 1e-6) const;
};

PrincipalAngleSet principal_angles(const SubspaceProjector& a, const SubspaceProjector& b);
/// trace(P_A) - trace(P_A P_B).
double chordal_sq_trace(const SubspaceProjector& a, const SubspaceProjector& b);
double product_distance(const PrincipalAngleSet& angles);

struct Bound {
  Rational value;
  /// Simplex: equality is possible (N <= C(n+1,2)). Orthoplex: the bound applies (N > n(n+1)/2).
  bool flag = false;
  double to_double() const { return value.to_double(); }
};

Bound simplex_bound(long long n, long long m, long long N);
Bound orthoplex_bound(long long n, long long m, long long N);

}  // namespace gpack
