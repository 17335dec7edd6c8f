#include "gpack/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "gpack/error.hpp"

namespace gpack {

Partition::Partition(std::vector<std::size_t> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw InvalidArgument("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<std::size_t> p;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
      if (ec != std::errc()) throw ParseError("bad partition '" + std::string(text) + "'");
      p.push_back(v);
      i = static_cast<std::size_t>(ptr - text.data());
    } else if (c == '[' || c == ']' || c == ',' || c == ' ' || c == '(' || c == ')') {
      ++i;
    } else {
      throw ParseError("bad partition '" + std::string(text) + "'");
    }
  }
  if (p.empty()) throw ParseError("empty partition");
  try {
    return Partition(std::move(p));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::size_t Partition::size() const noexcept { return std::accumulate(parts.begin(), parts.end(), std::size_t{0}); }

Partition Partition::conjugate() const {
  std::vector<std::size_t> c(parts.empty() ? 0 : parts[0], 0);
  for (auto r : parts)
    for (std::size_t j = 0; j < r; ++j) ++c[j];
  return Partition(std::move(c));
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + "]";
}

std::uint64_t hook_dimension(const Partition& lambda) {
  const std::size_t n = lambda.size();
  if (n > 20) throw InvalidArgument("hook_dimension supports N <= 20");
  auto conj = lambda.conjugate();
  // cancel hook factors against 1..N through their prime factorisations
  std::vector<int> exponent(n + 1, 0);
  auto add = [&](std::size_t v, int sign) {
    for (std::size_t p = 2; v > 1; ++p)
      while (v % p == 0) {
        exponent[p] += sign;
        v /= p;
      }
  };
  for (std::size_t k = 2; k <= n; ++k) add(k, +1);
  for (std::size_t r = 0; r < lambda.rows(); ++r)
    for (std::size_t c = 0; c < lambda.parts[r]; ++c) add(lambda.parts[r] - c + conj.parts[c] - r - 1, -1);
  std::uint64_t d = 1;
  for (std::size_t p = 2; p <= n; ++p) {
    if (exponent[p] < 0) throw NumericalError("hook product does not divide N!");
    for (int e = 0; e < exponent[p]; ++e) d *= p;
  }
  return d;
}

std::vector<Partition> branching(const Partition& lambda) {
  if (lambda.size() < 2) throw InvalidArgument("branching needs N >= 2");
  std::vector<Partition> out;
  for (std::size_t r = 0; r < lambda.rows(); ++r) {
    bool corner = (r + 1 == lambda.rows()) || lambda.parts[r + 1] < lambda.parts[r];
    if (!corner) continue;
    auto p = lambda.parts;
    if (--p[r] == 0) p.pop_back();
    out.emplace_back(std::move(p));
  }
  return out;
}

std::vector<Partition> partitions_of(std::size_t n) {
  std::vector<Partition> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t maxp) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (std::size_t p = std::min(left, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  if (n > 0) rec(n, n);
  return out;
}

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
  // place N, N-1, ..., 1 by repeatedly removing corners
  std::vector<Tableau> out;
  const std::size_t n = lambda.size();
  Tableau t(lambda.rows());
  for (std::size_t r = 0; r < lambda.rows(); ++r) t[r].assign(lambda.parts[r], 0);
  std::vector<std::size_t> shape = lambda.parts;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == 0) {
      out.push_back(t);
      return;
    }
    for (std::size_t r = 0; r < shape.size(); ++r) {
      if (shape[r] == 0) continue;
      bool corner = (r + 1 == shape.size()) || shape[r + 1] < shape[r];
      if (!corner) continue;
      --shape[r];
      t[r][shape[r]] = k;
      rec(k - 1);
      ++shape[r];
    }
  };
  rec(n);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gpack
