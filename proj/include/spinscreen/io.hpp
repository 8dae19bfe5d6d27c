#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spinscreen/geometry.hpp"
#include "spinscreen/recurrence.hpp"
#include "spinscreen/symmetry.hpp"

namespace spinscreen {

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

/// Parses what format_double produced.
double parse_double(const std::string& s);

const char* region_name(Region r);
const char* quadrilateral_name(Quadrilateral q);
const char* curve_kind_name(CurveKind k);
const char* curve_branch_name(CurveBranch b);

/// A set of sampled curves for one screen, ready for serialization.
struct CurveSet {
  HalfInt j1, j2, j3, j;
  ScreenQuad quad;
  DegeneracyFlags flags;
  std::vector<CurveSample> curves;
  /// Mirror replicas into negative quadrants (x -> -x, y -> -y copies).
  bool mirrored = false;
};

/// Screen CSV: '#'-prefixed metadata header, then one data row per
/// grid point, row-major by j23 then j12, with region/quadrilateral
/// classification columns. Deterministic: no timestamps unless `stamp`
/// is nonempty.
void write_screen_csv(std::ostream& os, const Screen& s, const std::string& stamp = "");

/// Curves CSV: kind, branch, x, y and the V^2 residual at the point.
void write_curves_csv(std::ostream& os, const CurveSet& cs, const std::string& stamp = "");

/// JSON forms; values keep bit-exact round-trip via shortest-form
/// doubles. Screen JSON: {params, domain, defect, values, curves}.
std::string screen_to_json(const Screen& s, const std::string& stamp = "");
Screen screen_from_json(const std::string& text);
std::string curves_to_json(const CurveSet& cs, const std::string& stamp = "");

}  // namespace spinscreen
