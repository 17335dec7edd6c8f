#include "gpack/finite_field.hpp"

#include "gpack/error.hpp"

namespace gpack {

namespace {

using Poly = std::vector<std::size_t>;  // coefficients, low degree first

Poly decode(std::size_t a, std::size_t p, std::size_t k) {
  Poly c(k);
  for (std::size_t i = 0; i < k; ++i) {
    c[i] = a % p;
    a /= p;
  }
  return c;
}

std::size_t encode(const Poly& c, std::size_t p) {
  std::size_t a = 0;
  for (std::size_t i = c.size(); i-- > 0;) a = a * p + c[i];
  return a;
}

// Product of a and b modulo the monic polynomial `modulus` of degree k.
Poly mul_mod(const Poly& a, const Poly& b, const Poly& modulus, std::size_t p) {
  std::size_t k = modulus.size() - 1;
  Poly prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t d = 2 * k - 1; d >= k; --d) {
    std::size_t c = prod[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= k; ++i)
      prod[d - k + i] = (prod[d - k + i] + (p - c) * modulus[i]) % p;
  }
  prod.resize(k);
  return prod;
}

bool is_irreducible(const Poly& modulus, std::size_t p) {
  // A monic polynomial of degree k <= 3 is irreducible iff it has no root; for higher k
  // test that x^(p^k) == x and that the ring has no nonzero zero divisors via brute force.
  std::size_t k = modulus.size() - 1;
  std::size_t q = 1;
  for (std::size_t i = 0; i < k; ++i) q *= p;
  for (std::size_t a = 1; a < q; ++a) {
    Poly pa = decode(a, p, k);
    for (std::size_t b = 1; b < q; ++b) {
      Poly r = mul_mod(pa, decode(b, p, k), modulus, p);
      if (encode(r, p) == 0) return false;
    }
  }
  return true;
}

}  // namespace

std::size_t FiniteField::prime_base(std::size_t q) {
  if (q < 2) return 0;
  std::size_t p = 0;
  for (std::size_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return q;
  while (q % p == 0) q /= p;
  return q == 1 ? p : 0;
}

FiniteField::FiniteField(std::size_t q) : q_(q) {
  p_ = prime_base(q);
  if (p_ == 0 || q > 1024) throw InvalidArgument(std::to_string(q) + " is not a supported prime power");
  k_ = 0;
  for (std::size_t t = q; t > 1; t /= p_) ++k_;

  Poly modulus;
  if (k_ > 1) {
    for (std::size_t low = 0; low < q_; ++low) {
      Poly m = decode(low, p_, k_);
      m.push_back(1);
      if (is_irreducible(m, p_)) {
        modulus = m;
        break;
      }
    }
  }

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (std::size_t a = 0; a < q_; ++a) {
    Poly pa = decode(a, p_, k_);
    Poly na(k_);
    for (std::size_t i = 0; i < k_; ++i) na[i] = (p_ - pa[i]) % p_;
    neg_[a] = encode(na, p_);
    for (std::size_t b = 0; b < q_; ++b) {
      Poly pb = decode(b, p_, k_);
      Poly s(k_);
      for (std::size_t i = 0; i < k_; ++i) s[i] = (pa[i] + pb[i]) % p_;
      add_[a * q_ + b] = encode(s, p_);
      mul_[a * q_ + b] = k_ == 1 ? (a * b) % p_ : encode(mul_mod(pa, pb, modulus, p_), p_);
    }
  }
  for (std::size_t a = 1; a < q_; ++a)
    for (std::size_t b = 1; b < q_; ++b)
      if (mul(a, b) == 1) inv_[a] = b;

  for (std::size_t g = 1; g < q_; ++g) {
    std::size_t x = g, ord = 1;
    while (x != 1) {
      x = mul(x, g);
      ++ord;
    }
    if (ord == q_ - 1) {
      primitive_ = g;
      break;
    }
  }
}

std::size_t FiniteField::inv(std::size_t a) const {
  if (a == 0 || a >= q_) throw InvalidArgument("no inverse of zero");
  return inv_[a];
}

bool FiniteField::is_square(std::size_t a) const {
  if (a == 0) return true;
  for (std::size_t x = 1; x < q_; ++x)
    if (mul(x, x) == a) return true;
  return false;
}

}  // namespace gpack
