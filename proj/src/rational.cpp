#include "gpack/rational.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "gpack/error.hpp"

namespace gpack {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr auto lim = std::numeric_limits<std::int64_t>::max();
  if (num > lim || num < -lim || den > lim) throw NumericalError("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator+(const Rational& o) const {
  return from_wide(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                   static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  return from_wide(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw InvalidArgument("division by zero");
  return from_wide(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
}

std::optional<Rational> recover_rational(double x, std::int64_t max_den, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  // convergents h/k of the continued fraction of x
  double rem = x;
  std::int64_t h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  std::optional<Rational> best;
  for (int iter = 0; iter < 64; ++iter) {
    double a = std::floor(rem);
    if (std::abs(a) > 9e15) break;
    auto ai = static_cast<std::int64_t>(a);
    std::int64_t h = ai * h0 + h1;
    std::int64_t k = ai * k0 + k1;
    if (k > max_den) break;
    h1 = h0;
    h0 = h;
    k1 = k0;
    k0 = k;
    double err = std::abs(static_cast<double>(h) / static_cast<double>(k) - x);
    if (err <= tol * std::max(1.0, std::abs(x))) {
      best = Rational(h, k);
      break;
    }
    double frac = rem - a;
    if (frac < 1e-15) break;
    rem = 1.0 / frac;
  }
  return best;
}

}  // namespace gpack
