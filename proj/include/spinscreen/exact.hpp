#pragma once

#include <cstdint>
#include <vector>

#include "spinscreen/angular.hpp"
#include "spinscreen/half_int.hpp"
#include "spinscreen/radical.hpp"

namespace spinscreen {

/// 3j labels; valid() checks m-sum, |m| <= j and j+m integrality on
/// top of the triangle rule.
struct ThreeJLabels {
  HalfInt j1, j2, j3, m1, m2, m3;
  bool valid() const;
};

/// Exact 6j via the single-sum Racah formula in integer arithmetic
/// over a common denominator. Invalid labels give exact zero (screen
/// iteration touches boundary-adjacent labels, so this is not an
/// error).
ExactRadical sixj_exact(const SixJLabels& labels);

/// Exact 3j via the single-sum formula; exact zero on any selection
/// rule failure.
ExactRadical threej_exact(const ThreeJLabels& labels);

/// Independent 6j oracle: contraction of four 3j symbols over all
/// magnetic quantum numbers. Exponential cost; guarded to entries
/// <= 10 (throws OracleRangeError beyond). Test use only.
ExactRadical sixj_oracle_cg(const SixJLabels& labels);

/// One row of the 3j-as-limit-of-6j convergence table.
struct LimitRow {
  std::int64_t R;
  double scaled_sixj;   // sqrt(2R+1) * {j1 j2 j3; l1+R l2+R l3+R}
  double abs_delta;     // | |scaled_sixj| - |threej| |
  int sign;             // sign of the scaled 6j
};

struct LimitEstimate {
  double threej;                // exact 3j target, as double
  HalfInt m1, m2, m3;           // m1 = l3 - l2, m2 = l1 - l3
  std::vector<LimitRow> rows;
};

/// Evaluates the large-R limit of {j1 j2 j3; l1+R l2+R l3+R} scaled by
/// sqrt(2R+1) against the exact 3j with m1 = l3-l2, m2 = l1-l3.
/// Schedule must be strictly increasing and every R must keep all 6j
/// entries triangle-valid (InvalidScheduleError otherwise).
LimitEstimate threej_limit_estimate(HalfInt j1, HalfInt j2, HalfInt j3,
                                    HalfInt l1, HalfInt l2, HalfInt l3,
                                    const std::vector<std::int64_t>& schedule);

/// Alternative input convention: m1 = F+D, m2 = F-D, realized as
/// l = (F, -F, D).
LimitEstimate threej_limit_estimate_fd(HalfInt j1, HalfInt j2, HalfInt j3,
                                       HalfInt F, HalfInt D,
                                       const std::vector<std::int64_t>& schedule);

}  // namespace spinscreen
