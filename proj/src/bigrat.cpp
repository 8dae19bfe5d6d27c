#include "spinscreen/bigrat.hpp"

namespace spinscreen {

std::pair<double, std::int64_t> to_mantissa_exp(const BigRat& q) {
  BigInt num = big_numerator(q);
  if (num == 0) return {0.0, 0};
  const bool neg = num < 0;
  if (neg) num = -num;
  BigInt den = big_denominator(q);

  const std::int64_t nb = static_cast<std::int64_t>(boost::multiprecision::msb(num));
  const std::int64_t db = static_cast<std::int64_t>(boost::multiprecision::msb(den));

  // Shift so that the integer quotient carries ~80 significant bits,
  // then round to nearest.
  const std::int64_t shift = 80 - (nb - db);
  if (shift > 0)
    num <<= shift;
  else if (shift < 0)
    den <<= -shift;

  BigInt quo, rem;
  boost::multiprecision::divide_qr(num, den, quo, rem);
  if (rem * 2 >= den) ++quo;

  const std::int64_t qb = static_cast<std::int64_t>(boost::multiprecision::msb(quo));
  // mantissa = quo / 2^(qb+1) in [0.5, 1)
  const double mant = quo.convert_to<double>() * std::ldexp(1.0, static_cast<int>(-(qb + 1)));
  const std::int64_t exp = (qb + 1) - shift;
  return {neg ? -mant : mant, exp};
}

double to_double(const BigRat& q) {
  auto [mant, exp] = to_mantissa_exp(q);
  if (mant == 0.0) return 0.0;
  if (exp > 1100) return mant > 0 ? HUGE_VAL : -HUGE_VAL;
  if (exp < -1100) return mant > 0 ? 0.0 : -0.0;
  return std::ldexp(mant, static_cast<int>(exp));
}

BigInt isqrt_floor(const BigInt& n) {
  if (n <= 0) return 0;
  return boost::multiprecision::sqrt(n);
}

BigRat rat_from_double(double v) {
  if (v == 0.0) return BigRat(0);
  int exp = 0;
  const double mant = std::frexp(v, &exp);  // v = mant * 2^exp, |mant| in [0.5, 1)
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));  // exact
  BigRat q(scaled);
  const int shift = exp - 53;
  if (shift > 0)
    q *= BigRat(BigInt(1) << shift);
  else if (shift < 0)
    q /= BigRat(BigInt(1) << -shift);
  return q;
}

}  // namespace spinscreen
