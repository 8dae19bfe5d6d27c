#pragma once

#include <cstdint>
#include <compare>
#include <string>

#include "spinscreen/errors.hpp"

namespace spinscreen {

/// Exact half-integer angular momentum, stored as twice its value.
/// j = 3/2 is HalfInt::from_twice(3); j = 2 is HalfInt(2).
/// All arithmetic stays in integers, so parity tests and triangle
/// checks are exact.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr explicit HalfInt(std::int64_t whole) : twice_(2 * whole) {}

  static constexpr HalfInt from_twice(std::int64_t t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return (twice_ & 1) == 0; }
  constexpr bool is_half_odd() const { return (twice_ & 1) != 0; }
  constexpr bool is_negative() const { return twice_ < 0; }

  /// Integer value; caller must ensure is_integer().
  constexpr std::int64_t integer_value() const { return twice_ / 2; }

  constexpr double to_double() const { return 0.5 * static_cast<double>(twice_); }

  /// 2j + 1, the multiplicity weight.
  constexpr std::int64_t two_j_plus_one() const { return twice_ + 1; }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
    return from_twice(a.twice_ + b.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
    return from_twice(a.twice_ - b.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice_); }
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

  HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }

  friend constexpr HalfInt abs(HalfInt a) {
    return from_twice(a.twice_ < 0 ? -a.twice_ : a.twice_);
  }
  friend constexpr HalfInt min(HalfInt a, HalfInt b) { return a < b ? a : b; }
  friend constexpr HalfInt max(HalfInt a, HalfInt b) { return a < b ? b : a; }

  /// "7/2" for half-odd values, "3" for integers.
  std::string to_string() const;

 private:
  std::int64_t twice_ = 0;
};

/// Parses "n", "-n", or "t/2" (e.g. "7/2"). Throws ParseError.
HalfInt parse_half_int(const std::string& text);

inline std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace spinscreen
