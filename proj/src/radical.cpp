#include "spinscreen/radical.hpp"

#include <cmath>

#include "spinscreen/errors.hpp"
#include "spinscreen/factorials.hpp"

namespace spinscreen {

ExactRadical ExactRadical::from_squarefree(BigRat r, BigInt d) {
  ExactRadical out;
  if (r == 0 || d == 0) return out;
  out.r_ = std::move(r);
  out.d_ = std::move(d);
  return out;
}

ExactRadical ExactRadical::make(BigRat r, const BigRat& d_any) {
  if (r == 0 || d_any == 0) return ExactRadical();
  if (d_any < 0) throw Error("negative radicand");

  // sqrt(p/q) = sqrt(p*q)/q
  BigInt p = big_numerator(d_any), q = big_denominator(d_any);
  BigInt n = p * q;
  r /= BigRat(q);

  BigInt square_root_part = 1;
  for (std::int32_t prime : prime_table()) {
    const BigInt pp = BigInt(prime) * prime;
    if (pp > n) break;
    while (n % pp == 0) {
      n /= pp;
      square_root_part *= prime;
    }
  }
  // Remaining cofactor may itself be a perfect square of something
  // beyond the prime table.
  const BigInt root = isqrt_floor(n);
  if (root * root == n) {
    square_root_part *= root;
    n = 1;
  }
  return from_squarefree(r * BigRat(square_root_part), n);
}

double ExactRadical::to_double() const {
  if (is_zero()) return 0.0;
  // Work on the exact square to keep a single rounding site, splitting
  // the power of two so values near the double range limits survive.
  auto [mant, exp] = to_mantissa_exp(squared());
  double m = std::fabs(mant);
  if (exp % 2 != 0) {
    m *= 2.0;
    exp -= 1;
  }
  double v = std::sqrt(m);
  v = std::ldexp(v, static_cast<int>(exp / 2));
  return sign() < 0 ? -v : v;
}

ExactRadical ExactRadical::operator-() const {
  ExactRadical out = *this;
  out.r_ = -out.r_;
  return out;
}

ExactRadical ExactRadical::operator*(const ExactRadical& o) const {
  if (is_zero() || o.is_zero()) return ExactRadical();
  // d1, d2 squarefree: d1*d2 = (g^2) * (d1/g)(d2/g) with g = gcd.
  const BigInt g = boost::multiprecision::gcd(d_, o.d_);
  return from_squarefree(r_ * o.r_ * BigRat(g), (d_ / g) * (o.d_ / g));
}

ExactRadical ExactRadical::operator*(const BigRat& q) const {
  if (is_zero() || q == 0) return ExactRadical();
  return from_squarefree(r_ * q, d_);
}

ExactRadical ExactRadical::operator+(const ExactRadical& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (d_ != o.d_)
    throw Error("sum of radicals with distinct radicands (" + d_.str() + " vs " +
                o.d_.str() + ")");
  BigRat r = r_ + o.r_;
  if (r == 0) return ExactRadical();
  return from_squarefree(std::move(r), d_);
}

std::string ExactRadical::to_string() const {
  return r_.str() + " * sqrt(" + d_.str() + ")";
}

}  // namespace spinscreen
