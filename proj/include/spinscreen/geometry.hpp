#pragma once

#include <optional>
#include <vector>

#include "spinscreen/angular.hpp"
#include "spinscreen/bigrat.hpp"
#include "spinscreen/half_int.hpp"

namespace spinscreen {

/// The four fixed continuous edges of a screen, J = j + 1/2.
struct ScreenQuad {
  double J1, J2, J3, J;

  static ScreenQuad from_labels(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j);

  double x_lo() const;  // continuous J12 bounds of the screen rectangle
  double x_hi() const;
  double y_lo() const;  // continuous J23 bounds
  double y_hi() const;
  double max_edge() const;
  /// (max edge)^6, the natural scale of V^2.
  double v2_scale() const;
};

/// All six continuous edges of the associated tetrahedron.
struct TetraEdges {
  double J1, J2, J3, J, J12, J23;
};

/// V^2 from the 5x5 Cayley-Menger determinant. May be negative
/// (nonclassical configuration).
double volume_squared_cm(const TetraEdges& e);

/// Same value from the 3x3 Gramian of the vertex-vector frame;
/// algebraically identical to the Cayley-Menger form, kept as an
/// independent implementation cross-check.
double volume_squared_gram(const TetraEdges& e);

/// Exact rational V^2 for half-integer edges (in J units, so twice-odd
/// HalfInt values). Oracle path for the float determinants.
BigRat volume_squared_cm_exact(HalfInt J1, HalfInt J2, HalfInt J3, HalfInt J,
                               HalfInt J12, HalfInt J23);
BigRat volume_squared_cm_exact_rat(const BigRat& J1, const BigRat& J2,
                                   const BigRat& J3, const BigRat& J,
                                   const BigRat& J12, const BigRat& J23);

/// Heron area; values inside -tol*scale^4 of degeneracy clamp to 0,
/// worse violations throw NotATriangleError.
double triangle_area(double a, double b, double c);

/// x maximizing V^2 along the horizontal line at height y (and the
/// transposed version). Throws OutOfScreenError when the ridge leaves
/// the physical strip.
double ridge_x(double y, const ScreenQuad& q);
double ridge_y(double x, const ScreenQuad& q);

/// Volume at the ridge point, V_max = 2 F F' / (3y); equals
/// sqrt(V^2(ridge_x(y), y)). OutOfScreenError outside the strip.
double vmax_along_x(double y, const ScreenQuad& q);
double vmax_along_y(double x, const ScreenQuad& q);

struct CausticRoots {
  double lo = 0.0, hi = 0.0;
  bool tangent = false;  // coincident roots (deduplicated)
  int count = 0;         // 1 when tangent, else 2
};

/// Real roots of V^2 = 0 along a line; x_z^2 = x_Vmax^2 +- 12 Vmax/y.
/// Sorted ascending; throws NoRootError when both radicands are
/// negative.
CausticRoots caustic_roots_x(double y, const ScreenQuad& q);
CausticRoots caustic_roots_y(double x, const ScreenQuad& q);

enum class Region { classical_inside, flat_on_caustic, forbidden_outside };
enum class Quadrilateral { convex, concave, crossed, none };

struct ConfigClass {
  Region region = Region::forbidden_outside;
  Quadrilateral quadrilateral = Quadrilateral::none;
};

/// Region from the sign of V^2 (|V^2| < 1e-9 * scale counts as flat);
/// quadrilateral type from the quadrant relative to the two ridges:
/// above both -> convex, above exactly one -> concave, below both ->
/// crossed. Quadrant classification can be restricted to caustic
/// points.
ConfigClass classify_point(double x, double y, const ScreenQuad& q,
                           bool quadrants_everywhere = true);

enum class CurveKind { caustic, ridge_x, ridge_y };
enum class CurveBranch { plus, minus };

struct CurvePoint {
  double x, y;
};

struct CurveSample {
  CurveKind kind;
  CurveBranch branch;
  std::vector<CurvePoint> points;
  bool closed = false;
  bool has_gaps = false;  // NoRoot stretches flagged rather than fatal
};

/// Closed caustic polyline (minus branch up, plus branch down),
/// marched over a Chebyshev-spaced y grid so the curve closes cleanly
/// at the tangency points. n_points is the total point budget.
CurveSample sample_caustic(const ScreenQuad& q, int n_points);

/// The two ridge polylines, clipped to the screen rectangle.
std::vector<CurveSample> sample_ridges(const ScreenQuad& q, int n_points);

/// 3j caustic determinant with entries J_i^2 - m_i^2 (m3 = -m1-m2),
/// oriented so the classically allowed region is positive, matching
/// the sign of the 6j volume form it limits.
double threej_caustic_det(double J1, double J2, double J3, double m1, double m2);
BigRat threej_caustic_det_exact(const BigRat& J1, const BigRat& J2,
                                const BigRat& J3, const BigRat& m1,
                                const BigRat& m2);

/// The 5x5 Cayley-Menger form with edges (L_i + R) scaled by 2R^2;
/// tends to threej_caustic_det as R grows. Inputs in J/L units
/// (half-integers for quantum labels). Exact arithmetic, returned as
/// double via the rational.
double limit_det_scaled(double J1, double J2, double J3, double L1, double L2,
                        double L3, double R);
BigRat limit_det_scaled_exact(const BigRat& J1, const BigRat& J2,
                              const BigRat& J3, const BigRat& L1,
                              const BigRat& L2, const BigRat& L3,
                              const BigRat& R);

/// limit_det_scaled / threej_caustic_det, the convergence measurement.
double limit_det_ratio(double j1, double j2, double j3, double l1, double l2,
                       double l3, double R);

}  // namespace spinscreen
