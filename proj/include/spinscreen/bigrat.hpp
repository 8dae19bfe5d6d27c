#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <utility>

namespace spinscreen {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_numerator(const BigRat& q) { return boost::multiprecision::numerator(q); }
inline BigInt big_denominator(const BigRat& q) { return boost::multiprecision::denominator(q); }

/// q = mantissa * 2^exp with mantissa in [0.5, 1), correctly rounded to
/// 53 bits. Returns {0.0, 0} for q == 0. Keeping the exponent separate
/// avoids overflow for values far outside double range.
std::pair<double, std::int64_t> to_mantissa_exp(const BigRat& q);

/// Nearest double; documented accurate to <= 2 ulp over the full range
/// where the result is normal.
double to_double(const BigRat& q);

/// floor(sqrt(n)) for n >= 0.
BigInt isqrt_floor(const BigInt& n);

/// Exact rational equal to the finite double v (every finite double is
/// p / 2^k).
BigRat rat_from_double(double v);

}  // namespace spinscreen
