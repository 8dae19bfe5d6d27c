#pragma once

#include <vector>

#include "spinscreen/half_int.hpp"

namespace spinscreen {

/// |a-b| <= c <= a+b with integer perimeter. Total function: any
/// violation (including negative inputs) yields false.
bool triangle_ok(HalfInt a, HalfInt b, HalfInt c);

/// The six entries {j1 j2 j12; j3 j j23}.
struct SixJLabels {
  HalfInt j1, j2, j12, j3, j, j23;

  bool valid() const {
    return triangle_ok(j1, j2, j12) && triangle_ok(j3, j, j12) &&
           triangle_ok(j1, j, j23) && triangle_ok(j3, j2, j23);
  }

  friend constexpr auto operator<=>(const SixJLabels&, const SixJLabels&) = default;

  std::string to_string() const;
};

/// Allowed (j12, j23) ranges for fixed j1, j2, j3, j. Always square:
/// both axes carry the same number of values.
///
/// Quantum bounds are the extreme j12/j23 labels; the continuous screen
/// rectangle used by the geometry runs from the lower quantum bound to
/// the upper one plus 1 (in J = j + 1/2 units the grid points sit at
/// half-integer positions strictly inside).
struct ScreenDomain {
  HalfInt j12_min, j12_max;
  HalfInt j23_min, j23_max;
  int size = 0;

  double J12_lo() const { return j12_min.to_double(); }
  double J12_hi() const { return (j12_max + HalfInt(1)).to_double(); }
  double J23_lo() const { return j23_min.to_double(); }
  double J23_hi() const { return (j23_max + HalfInt(1)).to_double(); }

  HalfInt j12_at(int i) const { return j12_min + HalfInt(i); }
  HalfInt j23_at(int i) const { return j23_min + HalfInt(i); }

  std::vector<HalfInt> j12_values() const;
  std::vector<HalfInt> j23_values() const;

  friend bool operator==(const ScreenDomain&, const ScreenDomain&) = default;
};

/// Throws EmptyDomainError when the quadrilateral closure fails.
ScreenDomain screen_domain(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j);

}  // namespace spinscreen
