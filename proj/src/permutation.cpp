#include "gpack/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "gpack/error.hpp"

namespace gpack {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) throw InvalidArgument("image array is not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::size_t>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      std::size_t a = cyc[k];
      std::size_t b = cyc[(k + 1) % cyc.size()];
      if (a >= degree || b >= degree) throw InvalidArgument("cycle point out of range");
      if (used[a]) throw InvalidArgument("cycles are not disjoint");
      used[a] = true;
      images[a] = static_cast<Point>(b);
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<std::size_t> cyc;
    for (;;) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
        ++i;
      if (i >= text.size()) throw ParseError("unterminated cycle: " + std::string(text));
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("unexpected character in cycle notation: " + std::string(text));
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + static_cast<std::size_t>(text[i++] - '0');
      if (v == 0 || v > degree)
        throw ParseError("point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      cyc.push_back(v - 1);
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  try {
    return from_cycles(degree, cycles);
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string(e.what()) + ": " + std::string(text));
  }
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw InvalidArgument("degree mismatch in composition");
  Permutation out;
  out.images_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) out.images_[i] = images_[rhs.images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::size_t Permutation::fixed_points() const noexcept {
  std::size_t n = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) n += images_[i] == i;
  return n;
}

int Permutation::sign() const {
  int s = 1;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(degree(), false);
  bool any = false;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) os << ' ';
      os << j + 1;
      first = false;
    }
    os << ')';
    any = true;
  }
  return any ? os.str() : "()";
}

std::size_t hash_images(std::span<const Point> images) noexcept {
  // FNV-1a over the image bytes
  std::uint64_t h = 1469598103934665603ULL;
  for (Point p : images) {
    h ^= p;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

}  // namespace gpack
