#include "spinscreen/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "spinscreen/errors.hpp"

namespace spinscreen {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kCausticTol = 1e-9;  // relative to (max edge)^6

double sq(double v) { return v * v; }

// det of a k x k matrix by Gaussian elimination with partial pivoting;
// adequate for the float paths (the exact paths are the oracle).
template <int K>
double det_float(std::array<std::array<double, K>, K> m) {
  double det = 1.0;
  for (int c = 0; c < K; ++c) {
    int piv = c;
    for (int r = c + 1; r < K; ++r)
      if (std::fabs(m[r][c]) > std::fabs(m[piv][c])) piv = r;
    if (m[piv][c] == 0.0) return 0.0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < K; ++r) {
      const double f = m[r][c] / m[c][c];
      for (int k = c; k < K; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

// Exact determinant by cofactor expansion along the first row; the
// matrices are at most 5 x 5 so the cost is irrelevant.
BigRat det_exact(const std::vector<std::vector<BigRat>>& m) {
  const std::size_t k = m.size();
  if (k == 1) return m[0][0];
  BigRat det = 0;
  for (std::size_t c = 0; c < k; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<BigRat>> minor(k - 1, std::vector<BigRat>(k - 1));
    for (std::size_t r = 1; r < k; ++r) {
      std::size_t cc = 0;
      for (std::size_t col = 0; col < k; ++col) {
        if (col == c) continue;
        minor[r - 1][cc++] = m[r][col];
      }
    }
    const BigRat term = m[0][c] * det_exact(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

std::array<std::array<double, 5>, 5> cm_matrix(const TetraEdges& e) {
  const double a = sq(e.J3), b = sq(e.J), c = sq(e.J23);
  const double d = sq(e.J12), f = sq(e.J2), g = sq(e.J1);
  return {{{0, a, b, c, 1},
           {a, 0, d, f, 1},
           {b, d, 0, g, 1},
           {c, f, g, 0, 1},
           {1, 1, 1, 1, 0}}};
}

// All closed forms below are written in terms of squares (or of
// (a+b)^2 paired with (a-b)^2), so negating any single edge J -> -J
// reproduces bit-identical results.
double A_coef(double J1, double J3, double a, double b) {
  return (J1 * J1 - a * a) * (J3 * J3 - b * b);
}

double Jt_sq(const ScreenQuad& q) {
  return sq(q.J1) + sq(q.J2) + sq(q.J3) + sq(q.J);
}

// Signed square of the ridge abscissa; negative radicand means the
// ridge has left the physical strip.
double ridge_x_sq_signed(double y, const ScreenQuad& q) {
  return (A_coef(q.J1, q.J3, q.J, q.J2) + Jt_sq(q) * y * y - y * y * y * y) /
         (2.0 * y * y);
}
double ridge_y_sq_signed(double x, const ScreenQuad& q) {
  return (A_coef(q.J1, q.J3, q.J2, q.J) + Jt_sq(q) * x * x - x * x * x * x) /
         (2.0 * x * x);
}

double heron_product(double a, double b, double c) {
  const double sum = a + b, dif = a - b;
  return (sum * sum - c * c) * (c * c - dif * dif);
}

}  // namespace

ScreenQuad ScreenQuad::from_labels(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j) {
  return {j1.to_double() + 0.5, j2.to_double() + 0.5, j3.to_double() + 0.5,
          j.to_double() + 0.5};
}

double ScreenQuad::x_lo() const { return std::max(std::fabs(J1 - J2), std::fabs(J3 - J)); }
double ScreenQuad::x_hi() const { return std::min(J1 + J2, J3 + J); }
double ScreenQuad::y_lo() const { return std::max(std::fabs(J2 - J3), std::fabs(J1 - J)); }
double ScreenQuad::y_hi() const { return std::min(J2 + J3, J1 + J); }
double ScreenQuad::max_edge() const { return std::max(std::max(J1, J2), std::max(J3, J)); }
double ScreenQuad::v2_scale() const {
  const double m = std::max(max_edge(), std::max(x_hi(), y_hi()));
  return m * m * m * m * m * m;
}

double volume_squared_cm(const TetraEdges& e) {
  return det_float<5>(cm_matrix(e)) / 288.0;
}

double volume_squared_gram(const TetraEdges& e) {
  // Vectors from the vertex where edges J3, J, J23 meet; dot products
  // from the law of cosines. V^2 = det(G)/36.
  const double a = sq(e.J3), b = sq(e.J), c = sq(e.J23);
  const double g12 = 0.5 * (a + b - sq(e.J12));
  const double g13 = 0.5 * (a + c - sq(e.J2));
  const double g23 = 0.5 * (b + c - sq(e.J1));
  const double det = a * (b * c - g23 * g23) - g12 * (g12 * c - g23 * g13) +
                     g13 * (g12 * g23 - b * g13);
  return det / 36.0;
}

BigRat volume_squared_cm_exact_rat(const BigRat& J1, const BigRat& J2,
                                   const BigRat& J3, const BigRat& J,
                                   const BigRat& J12, const BigRat& J23) {
  const BigRat a = J3 * J3, b = J * J, c = J23 * J23;
  const BigRat d = J12 * J12, f = J2 * J2, g = J1 * J1;
  const BigRat one = 1;
  std::vector<std::vector<BigRat>> m = {{0, a, b, c, one},
                                        {a, 0, d, f, one},
                                        {b, d, 0, g, one},
                                        {c, f, g, 0, one},
                                        {one, one, one, one, 0}};
  return det_exact(m) / 288;
}

BigRat volume_squared_cm_exact(HalfInt J1, HalfInt J2, HalfInt J3, HalfInt J,
                               HalfInt J12, HalfInt J23) {
  auto r = [](HalfInt h) { return BigRat(h.twice(), 2); };
  return volume_squared_cm_exact_rat(r(J1), r(J2), r(J3), r(J), r(J12), r(J23));
}

double triangle_area(double a, double b, double c) {
  const double p = heron_product(a, b, c);
  if (p >= 0.0) return 0.25 * std::sqrt(p);
  const double scale = std::max({a, b, c, 1.0});
  if (p > -1e-12 * scale * scale * scale * scale) return 0.0;
  throw NotATriangleError("sides violate the triangle inequality");
}

double ridge_x(double y, const ScreenQuad& q) {
  if (!(y > 0.0)) throw OutOfScreenError("ridge_x needs y > 0");
  const double s = ridge_x_sq_signed(y, q);
  if (s < 0.0) throw OutOfScreenError("ridge_x radicand negative");
  return std::sqrt(s);
}

double ridge_y(double x, const ScreenQuad& q) {
  if (!(x > 0.0)) throw OutOfScreenError("ridge_y needs x > 0");
  const double s = ridge_y_sq_signed(x, q);
  if (s < 0.0) throw OutOfScreenError("ridge_y radicand negative");
  return std::sqrt(s);
}

double vmax_along_x(double y, const ScreenQuad& q) {
  if (!(y > 0.0)) throw OutOfScreenError("vmax_along_x needs y > 0");
  double fa, fb;
  try {
    fa = triangle_area(q.J1, q.J, y);
    fb = triangle_area(q.J2, q.J3, y);
  } catch (const NotATriangleError&) {
    throw OutOfScreenError("y outside both face-triangle ranges");
  }
  return 2.0 * fa * fb / (3.0 * y);
}

double vmax_along_y(double x, const ScreenQuad& q) {
  if (!(x > 0.0)) throw OutOfScreenError("vmax_along_y needs x > 0");
  double fa, fb;
  try {
    fa = triangle_area(q.J1, q.J2, x);
    fb = triangle_area(q.J, q.J3, x);
  } catch (const NotATriangleError&) {
    throw OutOfScreenError("x outside both face-triangle ranges");
  }
  return 2.0 * fa * fb / (3.0 * x);
}

namespace {

CausticRoots roots_from(double base_sq, double shift) {
  CausticRoots out;
  const double lo_sq = base_sq - shift;
  const double hi_sq = base_sq + shift;
  if (hi_sq < 0.0) throw NoRootError("both caustic radicands negative");
  if (lo_sq < 0.0) {
    // Only the outer root is real on this line.
    out.lo = out.hi = std::sqrt(hi_sq);
    out.tangent = false;
    out.count = 1;
    return out;
  }
  out.lo = std::sqrt(lo_sq);
  out.hi = std::sqrt(hi_sq);
  if (out.lo == out.hi) {
    out.tangent = true;
    out.count = 1;
  } else {
    out.count = 2;
  }
  return out;
}

}  // namespace

CausticRoots caustic_roots_x(double y, const ScreenQuad& q) {
  if (!(y > 0.0)) throw OutOfScreenError("caustic_roots_x needs y > 0");
  const double base = ridge_x_sq_signed(y, q);
  const double vm = vmax_along_x(y, q);
  return roots_from(base, 12.0 * vm / y);
}

CausticRoots caustic_roots_y(double x, const ScreenQuad& q) {
  if (!(x > 0.0)) throw OutOfScreenError("caustic_roots_y needs x > 0");
  const double base = ridge_y_sq_signed(x, q);
  const double vm = vmax_along_y(x, q);
  return roots_from(base, 12.0 * vm / x);
}

ConfigClass classify_point(double x, double y, const ScreenQuad& q,
                           bool quadrants_everywhere) {
  ConfigClass out;
  const double v2 = volume_squared_cm({q.J1, q.J2, q.J3, q.J, x, y});
  const double tol = kCausticTol * q.v2_scale();
  if (std::fabs(v2) < tol)
    out.region = Region::flat_on_caustic;
  else
    out.region = v2 > 0.0 ? Region::classical_inside : Region::forbidden_outside;

  if (quadrants_everywhere || out.region == Region::flat_on_caustic) {
    // Signed comparison against the squared ridge expressions; valid
    // even where the ridge itself has left the strip.
    const bool above_x_ridge = x * x > ridge_x_sq_signed(y, q);
    const bool above_y_ridge = y * y > ridge_y_sq_signed(x, q);
    if (above_x_ridge && above_y_ridge)
      out.quadrilateral = Quadrilateral::convex;
    else if (above_x_ridge || above_y_ridge)
      out.quadrilateral = Quadrilateral::concave;
    else
      out.quadrilateral = Quadrilateral::crossed;
  }
  return out;
}

CurveSample sample_caustic(const ScreenQuad& q, int n_points) {
  CurveSample out;
  out.kind = CurveKind::caustic;
  out.branch = CurveBranch::minus;
  const double ylo = q.y_lo();
  const double yhi = q.y_hi();
  const int half = std::max(n_points / 2, 8);

  // Chebyshev nodes cluster near the tangency endpoints where the two
  // branches meet, so the polyline closes cleanly there.
  std::vector<double> ys(half);
  for (int i = 0; i < half; ++i) {
    const double t = kPi * static_cast<double>(i) / (half - 1);
    ys[i] = 0.5 * (ylo + yhi) - 0.5 * (yhi - ylo) * std::cos(t);
  }

  std::vector<CurvePoint> minus_branch, plus_branch;
  if (ylo == 0.0) {
    // y = 0 needs the limit values: it forces J1 = J and J2 = J3, the
    // root expressions reduce to |J1 - J2| and J1 + J2, and the whole
    // bottom edge between them is flat. Start the branches at those
    // corner contact points instead of dividing by zero.
    minus_branch.push_back({std::fabs(q.J1 - q.J2), 0.0});
    plus_branch.push_back({std::fabs(q.J1 + q.J2), 0.0});
  }
  for (double y : ys) {
    if (y <= 0.0) continue;
    try {
      const CausticRoots r = caustic_roots_x(y, q);
      minus_branch.push_back({r.lo, y});
      plus_branch.push_back({r.hi, y});
    } catch (const NoRootError&) {
      out.has_gaps = true;
    } catch (const OutOfScreenError&) {
      out.has_gaps = true;
    }
  }
  out.points = std::move(minus_branch);
  for (auto it = plus_branch.rbegin(); it != plus_branch.rend(); ++it)
    out.points.push_back(*it);
  out.closed = !out.has_gaps && out.points.size() >= 4;
  return out;
}

std::vector<CurveSample> sample_ridges(const ScreenQuad& q, int n_points) {
  std::vector<CurveSample> out;
  const int n = std::max(n_points, 16);

  CurveSample rx;
  rx.kind = CurveKind::ridge_x;
  rx.branch = CurveBranch::plus;
  for (int i = 0; i < n; ++i) {
    const double y = q.y_lo() + (q.y_hi() - q.y_lo()) * i / (n - 1);
    if (y <= 0.0) continue;
    const double s = ridge_x_sq_signed(y, q);
    if (s < 0.0) {
      rx.has_gaps = true;
      continue;
    }
    const double x = std::sqrt(s);
    if (x < q.x_lo() || x > q.x_hi()) {
      rx.has_gaps = true;
      continue;
    }
    rx.points.push_back({x, y});
  }
  out.push_back(std::move(rx));

  CurveSample ry;
  ry.kind = CurveKind::ridge_y;
  ry.branch = CurveBranch::plus;
  for (int i = 0; i < n; ++i) {
    const double x = q.x_lo() + (q.x_hi() - q.x_lo()) * i / (n - 1);
    if (x <= 0.0) continue;
    const double s = ridge_y_sq_signed(x, q);
    if (s < 0.0) {
      ry.has_gaps = true;
      continue;
    }
    const double y = std::sqrt(s);
    if (y < q.y_lo() || y > q.y_hi()) {
      ry.has_gaps = true;
      continue;
    }
    ry.points.push_back({x, y});
  }
  out.push_back(std::move(ry));
  return out;
}

// The bordered 4x4 with entries J_i^2 - m_i^2 is negative on the
// classically allowed side as usually printed, the opposite of the
// volume-form convention; the leading minus aligns the two so the
// scaled 5x5 limit converges to it with ratio +1.
double threej_caustic_det(double J1, double J2, double J3, double m1, double m2) {
  const double m3 = -m1 - m2;
  const double a = J1 * J1 - m1 * m1;
  const double b = J2 * J2 - m2 * m2;
  const double c = J3 * J3 - m3 * m3;
  const std::array<std::array<double, 4>, 4> m = {{{0, a, b, 1},
                                                   {a, 0, c, 1},
                                                   {b, c, 0, 1},
                                                   {1, 1, 1, 0}}};
  return -det_float<4>(m);
}

BigRat threej_caustic_det_exact(const BigRat& J1, const BigRat& J2,
                                const BigRat& J3, const BigRat& m1,
                                const BigRat& m2) {
  const BigRat m3 = -m1 - m2;
  const BigRat a = J1 * J1 - m1 * m1;
  const BigRat b = J2 * J2 - m2 * m2;
  const BigRat c = J3 * J3 - m3 * m3;
  const BigRat one = 1;
  std::vector<std::vector<BigRat>> m = {{0, a, b, one},
                                        {a, 0, c, one},
                                        {b, c, 0, one},
                                        {one, one, one, 0}};
  return -det_exact(m);
}

BigRat limit_det_scaled_exact(const BigRat& J1, const BigRat& J2,
                              const BigRat& J3, const BigRat& L1,
                              const BigRat& L2, const BigRat& L3,
                              const BigRat& R) {
  const BigRat r1 = (L1 + R) * (L1 + R);
  const BigRat r2 = (L2 + R) * (L2 + R);
  const BigRat r3 = (L3 + R) * (L3 + R);
  const BigRat a = J3 * J3, b = J2 * J2, c = J1 * J1;
  const BigRat one = 1;
  std::vector<std::vector<BigRat>> m = {{0, r1, r2, r3, one},
                                        {r1, 0, a, b, one},
                                        {r2, a, 0, c, one},
                                        {r3, b, c, 0, one},
                                        {one, one, one, one, 0}};
  return det_exact(m) / (2 * R * R);
}

double limit_det_scaled(double J1, double J2, double J3, double L1, double L2,
                        double L3, double R) {
  // Entries like (L+R)^2 ~ R^2 cancel catastrophically in floating
  // point at large R, so even the double-facing path runs exactly.
  return to_double(limit_det_scaled_exact(
      rat_from_double(J1), rat_from_double(J2), rat_from_double(J3),
      rat_from_double(L1), rat_from_double(L2), rat_from_double(L3),
      rat_from_double(R)));
}

double limit_det_ratio(double j1, double j2, double j3, double l1, double l2,
                       double l3, double R) {
  const BigRat half(1, 2);
  auto J = [&](double v) { return rat_from_double(v) + half; };
  const BigRat m1 = J(l3) - J(l2);
  const BigRat m2 = J(l1) - J(l3);
  const BigRat c4 = threej_caustic_det_exact(J(j1), J(j2), J(j3), m1, m2);
  if (c4 == 0) return std::numeric_limits<double>::quiet_NaN();
  const BigRat c5 = limit_det_scaled_exact(J(j1), J(j2), J(j3), J(l1), J(l2),
                                           J(l3), rat_from_double(R));
  return to_double(c5 / c4);
}

}  // namespace spinscreen
