#include "gpack/clifford.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

#include "gpack/error.hpp"

namespace gpack {

namespace {

// Vectors of F_2^(2i) packed as a | b << i.
bool singular(unsigned i, std::uint32_t v) {
  std::uint32_t mask = (1u << i) - 1;
  return std::popcount((v & mask) & (v >> i)) % 2 == 0;
}

bool orthogonal(unsigned i, std::uint32_t v, std::uint32_t w) {
  std::uint32_t mask = (1u << i) - 1;
  return std::popcount(((v & mask) & (w >> i)) ^ ((w & mask) & (v >> i))) % 2 == 0;
}

PauliLabel unpack(unsigned i, std::uint32_t v) { return {v & ((1u << i) - 1), v >> i}; }

}  // namespace

MatC pauli_matrix(unsigned i, PauliLabel p) {
  const std::uint32_t n = 1u << i;
  MatC m = MatC::Zero(n, n);
  for (std::uint32_t u = 0; u < n; ++u) m(u ^ p.a, u) = (std::popcount(p.b & u) % 2 == 0) ? 1.0 : -1.0;
  return m;
}

std::vector<std::vector<PauliLabel>> clifford_subgroups(unsigned i, unsigned r) {
  if (i < 1 || i > 5) throw InvalidArgument("Clifford construction supports 1 <= i <= 5");
  if (r < 1 || r > i) throw InvalidArgument("subgroup rank must lie in 1..i");
  const std::uint32_t total = 1u << (2 * i);
  std::vector<std::uint32_t> sing;
  for (std::uint32_t v = 1; v < total; ++v)
    if (singular(i, v)) sing.push_back(v);

  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::vector<PauliLabel>> out;
  std::vector<std::uint32_t> basis;
  std::vector<std::uint32_t> span{0};
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (basis.size() == r) {
      std::vector<std::uint32_t> key(span.begin() + 1, span.end());
      std::sort(key.begin(), key.end());
      if (seen.insert(key).second) {
        std::vector<PauliLabel> gens;
        for (auto v : basis) gens.push_back(unpack(i, v));
        out.push_back(std::move(gens));
      }
      return;
    }
    for (std::size_t k = from; k < sing.size(); ++k) {
      std::uint32_t v = sing[k];
      if (std::find(span.begin(), span.end(), v) != span.end()) continue;
      bool ok = true;
      for (auto w : basis) ok = ok && orthogonal(i, v, w);
      if (!ok) continue;
      basis.push_back(v);
      std::size_t old = span.size();
      for (std::size_t t = 0; t < old; ++t) span.push_back(span[t] ^ v);
      rec(k + 1);
      span.resize(old);
      basis.pop_back();
    }
  };
  rec(0);
  return out;
}

GrassmannCode build_clifford_orthoplex(unsigned i, unsigned r) {
  auto groups = clifford_subgroups(i, r);
  const Eigen::Index n = Eigen::Index{1} << i;
  GrassmannCode code;
  for (const auto& gens : groups) {
    std::vector<MatC> mats;
    for (auto g : gens) mats.push_back(pauli_matrix(i, g));
    for (std::uint32_t signs = 0; signs < (1u << r); ++signs) {
      MatC p = MatC::Identity(n, n);
      for (unsigned j = 0; j < r; ++j) {
        double eps = (signs >> j) & 1u ? -1.0 : 1.0;
        p = p * (MatC::Identity(n, n) + eps * mats[j]) * 0.5;
      }
      code.elements.push_back(SubspaceProjector::from_projector(p));
    }
  }
  code.params = compute_params(code.elements);
  code.provenance.group = "E(" + std::to_string(n) + ")";
  code.provenance.subgroup = "<-I,g_1..g_" + std::to_string(r) + ">";
  code.provenance.rep = "natural";
  code.provenance.note = std::to_string(groups.size()) + " subgroups";
  return code;
}

}  // namespace gpack
