#pragma once

#include <cstddef>
#include <vector>

namespace gpack {

/// GF(q) for a prime power q, elements encoded as 0..q-1 (base-p digits of the
/// polynomial coefficients). Addition and multiplication are table driven.
class FiniteField {
public:
  /// Throws InvalidArgument unless q is a prime power with q <= 1024.
  explicit FiniteField(std::size_t q);

  std::size_t order() const noexcept { return q_; }
  std::size_t characteristic() const noexcept { return p_; }

  std::size_t add(std::size_t a, std::size_t b) const { return add_[a * q_ + b]; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * q_ + b]; }
  std::size_t neg(std::size_t a) const { return neg_[a]; }
  std::size_t sub(std::size_t a, std::size_t b) const { return add(a, neg(b)); }
  /// Throws InvalidArgument for a == 0.
  std::size_t inv(std::size_t a) const;
  std::size_t primitive_element() const noexcept { return primitive_; }
  bool is_square(std::size_t a) const;

  /// Returns p when q = p^k, or 0 when q is not a prime power.
  static std::size_t prime_base(std::size_t q);

private:
  std::size_t q_, p_, k_;
  std::vector<std::size_t> add_, mul_, neg_, inv_;
  std::size_t primitive_ = 1;
};

}  // namespace gpack
