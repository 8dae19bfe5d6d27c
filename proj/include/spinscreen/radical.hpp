#pragma once

#include <string>

#include "spinscreen/bigrat.hpp"

namespace spinscreen {

/// Exact value r * sqrt(d). Every 6j/3j symbol has this shape: a
/// rational single-sum times the square root of a product of triangle
/// coefficients.
///
/// Canonical form: d is a squarefree positive integer (rational
/// radicands are cleared into r), and r == 0 implies d == 1. Equal
/// values therefore compare equal field-by-field.
class ExactRadical {
 public:
  ExactRadical() : r_(0), d_(1) {}

  /// Canonicalizing constructor; d_any may be any nonnegative rational.
  /// Square factors found via the shared prime table are moved into r;
  /// a leftover perfect-square cofactor is also detected.
  static ExactRadical make(BigRat r, const BigRat& d_any);

  /// Fast path when the radicand is already a squarefree integer.
  static ExactRadical from_squarefree(BigRat r, BigInt d);

  static ExactRadical zero() { return ExactRadical(); }
  static ExactRadical from_rational(BigRat r) { return from_squarefree(std::move(r), BigInt(1)); }

  const BigRat& rational_part() const { return r_; }
  const BigInt& radicand() const { return d_; }

  bool is_zero() const { return r_ == 0; }
  int sign() const { return r_ == 0 ? 0 : (r_ < 0 ? -1 : 1); }

  /// r^2 * d, exact.
  BigRat squared() const { return r_ * r_ * BigRat(d_); }

  /// Nearest double, within 2 ulp of the correctly rounded result for
  /// |value| between 1e-300 and 1e300 (one rounding in the exact
  /// square's mantissa, half an ulp in the square root).
  double to_double() const;

  ExactRadical operator-() const;
  ExactRadical operator*(const ExactRadical& o) const;
  ExactRadical operator*(const BigRat& q) const;

  /// Sum; both terms must share the radicand (or be zero). Used by the
  /// vector-coupling oracle where this is guaranteed term by term.
  ExactRadical operator+(const ExactRadical& o) const;

  friend bool operator==(const ExactRadical& a, const ExactRadical& b) = default;

  /// "r_num/r_den * sqrt(d)".
  std::string to_string() const;

 private:
  BigRat r_;
  BigInt d_;
};

}  // namespace spinscreen
