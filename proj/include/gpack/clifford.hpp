#pragma once

#include <cstdint>
#include <vector>

#include "gpack/code.hpp"

namespace gpack {

/// Element +X(a)Y(b) of the extraspecial group on C^(2^i); a and b are bit masks.
struct PauliLabel {
  std::uint32_t a = 0, b = 0;
};

/// Real signed permutation matrix of X(a)Y(b): e_u -> (-1)^(b.u) e_(u+a).
MatC pauli_matrix(unsigned i, PauliLabel p);

/// Abelian subgroups <-I, g_1, ..., g_r> with every g of order 2, listed by generating labels.
std::vector<std::vector<PauliLabel>> clifford_subgroups(unsigned i, unsigned r);

/// Isotypic subspaces of every subgroup from clifford_subgroups for each character with chi(-I) = -1.
GrassmannCode build_clifford_orthoplex(unsigned i, unsigned r = 1);

}  // namespace gpack
