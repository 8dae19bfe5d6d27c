#pragma once

#include <vector>

#include "spinscreen/angular.hpp"
#include "spinscreen/half_int.hpp"

namespace spinscreen {

/// A full orthonormal 6j matrix over the allowed (j12, j23) grid,
/// built column by column from the three-term recurrence in j12 and
/// normalized by unitarity. Immutable after construction.
struct Screen {
  HalfInt j1, j2, j3, j;
  ScreenDomain domain;
  /// Row-major over j23 (outer) then j12 (inner); the j12 runs used by
  /// the recurrence are contiguous.
  std::vector<double> values;
  /// Per-column |weighted norm - 1| recorded at build time.
  std::vector<double> column_defect;
  /// Columns where the recurrence broke down and exact evaluation was
  /// used instead.
  int exact_fallback_columns = 0;

  double at(int i12, int i23) const {
    return values[static_cast<std::size_t>(i23) * domain.size + i12];
  }
  double& at(int i12, int i23) {
    return values[static_cast<std::size_t>(i23) * domain.size + i12];
  }
};

/// One column of 6j values f(j12) = {j1 j2 j12; j3 j j23} over the
/// allowed j12 range, from the Schulten-Gordon three-term recurrence
/// solved with the Luscombe-Luban ratio scheme, normalized by
/// unitarity, global sign fixed against one exact evaluation at the
/// j12_max endpoint.
std::vector<double> sixj_column(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j,
                                HalfInt j23);

/// Builds the whole screen. Columns are independent and evaluated
/// concurrently; `threads` <= 0 picks SPINSCREEN_THREADS or the
/// hardware count. Recurrence breakdown in a column falls back to
/// exact evaluation per element.
Screen build_screen(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j,
                    int threads = 0);

enum class Axis { rows, columns };

struct OrthonormalityDefect {
  double unit = 0.0;   // max over lines of |weighted norm - 1|
  double cross = 0.0;  // max over adjacent line pairs of |weighted dot|
  double max() const { return unit > cross ? unit : cross; }
};

/// Unitarity quality of a built screen along the requested axis.
OrthonormalityDefect orthonormality_defect(const Screen& s, Axis axis);

}  // namespace spinscreen
