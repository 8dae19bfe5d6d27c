// Acceptance suite: one pass/fail line per criterion, nonzero exit on
// any failure. Tolerances are fixed here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "spinscreen/errors.hpp"
#include "spinscreen/exact.hpp"
#include "spinscreen/geometry.hpp"
#include "spinscreen/io.hpp"
#include "spinscreen/recurrence.hpp"
#include "spinscreen/symmetry.hpp"

using namespace spinscreen;

namespace {

HalfInt ht(std::int64_t t) { return HalfInt::from_twice(t); }

struct Tally {
  int checks = 0;
  int failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      if (first_failure.empty()) first_failure = what;
    }
  }
};

struct QuadGen {
  std::mt19937 rng;
  explicit QuadGen(unsigned seed) : rng(seed) {}
  std::array<HalfInt, 4> next(std::int64_t max_twice) {
    std::uniform_int_distribution<std::int64_t> d(0, max_twice);
    for (;;) {
      const HalfInt j1 = ht(d(rng)), j2 = ht(d(rng)), j3 = ht(d(rng));
      HalfInt j = ht(d(rng));
      if ((j1 + j2 + j3 + j).is_half_odd()) j += ht(1);
      try {
        (void)screen_domain(j1, j2, j3, j);
        return {j1, j2, j3, j};
      } catch (const EmptyDomainError&) {
      }
    }
  }
};

// Reference parameter sets (j1, j2, j3, j) used by the curve and
// degeneracy criteria, with their expected linear-configuration flags.
struct ReferenceCase {
  const char* name;
  std::int64_t j1, j2, j3, j;
  bool B, C, D;
};

const std::vector<ReferenceCase>& reference_cases() {
  static const std::vector<ReferenceCase> cases = {
      {"45-30-55-60", 45, 30, 55, 60, false, false, false},
      {"140-130-110-100", 140, 130, 110, 100, true, false, false},
      {"140-100-110-130", 140, 100, 110, 130, false, true, false},
      {"140-110-100-130", 140, 110, 100, 130, false, false, true},
      {"100-100-150-210", 100, 100, 150, 210, false, false, false},
      {"100-150-100-210", 100, 150, 100, 210, false, false, false},
      {"200-100-200-100", 200, 100, 200, 100, true, true, false},
      {"110-100-110-100", 110, 100, 110, 100, true, true, false},
      {"1000-1000-100-100", 1000, 1000, 100, 100, true, false, true},
      {"100-100-100-100", 100, 100, 100, 100, true, true, true},
  };
  return cases;
}

double max_screen_defect(const Screen& s) {
  return std::max(orthonormality_defect(s, Axis::columns).max(),
                  orthonormality_defect(s, Axis::rows).max());
}

// Checks one sampled curve set against the residual/stationarity/
// ordering tolerances of the geometry contract.
void check_curves(Tally& t, const std::string& name, const ScreenQuad& q) {
  const double scale = q.v2_scale();

  const CurveSample caustic = sample_caustic(q, 512);
  t.expect(!caustic.points.empty(), name + ": empty caustic");
  t.expect(!caustic.has_gaps, name + ": caustic has gaps");
  for (const CurvePoint& p : caustic.points) {
    const double v2 = volume_squared_cm({q.J1, q.J2, q.J3, q.J, p.x, p.y});
    if (!(std::fabs(v2) < 1e-9 * scale)) {
      t.expect(false, name + ": caustic residual " + format_double(v2));
      break;
    }
  }

  const double h = 1e-4 * std::max(1.0, q.max_edge());
  for (const CurveSample& ridge : sample_ridges(q, 256)) {
    t.expect(!ridge.points.empty(), name + ": empty ridge");
    for (const CurvePoint& p : ridge.points) {
      double fd;
      if (ridge.kind == CurveKind::ridge_x)
        fd = (volume_squared_cm({q.J1, q.J2, q.J3, q.J, p.x + h, p.y}) -
              volume_squared_cm({q.J1, q.J2, q.J3, q.J, p.x - h, p.y})) /
             (2 * h);
      else
        fd = (volume_squared_cm({q.J1, q.J2, q.J3, q.J, p.x, p.y + h}) -
              volume_squared_cm({q.J1, q.J2, q.J3, q.J, p.x, p.y - h})) /
             (2 * h);
      if (!(std::fabs(fd) < 1e-6 * scale)) {
        t.expect(false, name + ": ridge stationarity " + format_double(fd));
        break;
      }
    }
  }

  // Root ordering x_z- < x_Vmax < x_z+ on interior lines.
  for (int i = 1; i < 100; ++i) {
    const double y = q.y_lo() + (q.y_hi() - q.y_lo()) * i / 100.0;
    CausticRoots r;
    double xr;
    try {
      r = caustic_roots_x(y, q);
      xr = ridge_x(y, q);
    } catch (const Error&) {
      continue;
    }
    if (r.count == 2 && !(r.lo < xr && xr < r.hi)) {
      t.expect(false, name + ": root ordering at y=" + format_double(y));
      break;
    }
  }
}

using Clock = std::chrono::steady_clock;

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0 = no stated limit
  std::function<void(Tally&)> run;
};

}  // namespace

int main() {
  std::vector<double> collected_defects;  // from every screen built here

  const std::vector<Criterion> criteria = {
      {1, "(45,30,55,60) screen geometry and top-edge tangency", 1.0,
       [&](Tally& t) {
         const ScreenDomain d =
             screen_domain(HalfInt(45), HalfInt(30), HalfInt(55), HalfInt(60));
         t.expect(d.J12_lo() == 15.0 && d.J12_hi() == 76.0, "J12 bounds");
         t.expect(d.J23_lo() == 25.0 && d.J23_hi() == 86.0, "J23 bounds");
         t.expect(d.size == 61, "grid size");

         const ScreenQuad q{45.5, 30.5, 55.5, 60.5};
         const double x_formula = ridge_x(86.0, q);  // doubled caustic root
         // Independent oracle: bisect the x-derivative of V^2 along the
         // top edge; V^2 touches zero tangentially there, so its
         // gradient crosses zero at the tangency point.
         auto dv2 = [&](double x) {
           const double hh = 1e-5;
           return (volume_squared_cm({q.J1, q.J2, q.J3, q.J, x + hh, 86.0}) -
                   volume_squared_cm({q.J1, q.J2, q.J3, q.J, x - hh, 86.0})) /
                  (2 * hh);
         };
         double lo = 15.0, hi = 76.0;
         for (int it = 0; it < 200; ++it) {
           const double mid = 0.5 * (lo + hi);
           if (dv2(mid) > 0)
             lo = mid;
           else
             hi = mid;
         }
         const double x_oracle = 0.5 * (lo + hi);
         t.expect(std::fabs(x_formula - x_oracle) < 1e-6,
                  "tangency " + format_double(x_formula) + " vs oracle " +
                      format_double(x_oracle));
         t.expect(std::fabs(x_formula - 30.7) < 0.05, "tangency near 30.7");
       }},

      {2, "screen size identity over 500 random quadruples <= 300", 5.0,
       [&](Tally& t) {
         QuadGen gen(20260808);
         for (int i = 0; i < 500; ++i) {
           const auto [j1, j2, j3, j] = gen.next(600);
           const ScreenDomain d = screen_domain(j1, j2, j3, j);
           if (d.size != screen_size_from_edges(j1, j2, j3, j)) {
             t.expect(false, "size mismatch at quadruple " + j1.to_string() +
                                 "," + j2.to_string() + "," + j3.to_string() +
                                 "," + j.to_string());
             return;
           }
         }
         t.expect(true, "");
       }},

      {3, "exact vs oracle (all entries <= 4) and 50 recurrence screens <= 60", 120.0,
       [&](Tally& t) {
         long tested = 0;
         for (std::int64_t a = 0; a <= 8; ++a)
           for (std::int64_t b = 0; b <= 8; ++b)
             for (std::int64_t c = std::max<std::int64_t>(0, a > b ? a - b : b - a);
                  c <= std::min<std::int64_t>(8, a + b); ++c)
               for (std::int64_t d = 0; d <= 8; ++d)
                 for (std::int64_t e = 0; e <= 8; ++e)
                   for (std::int64_t f = 0; f <= 8; ++f) {
                     const SixJLabels l = {ht(a), ht(b), ht(c),
                                           ht(d), ht(e), ht(f)};
                     if (!l.valid()) continue;
                     ++tested;
                     if (!(sixj_exact(l) == sixj_oracle_cg(l))) {
                       t.expect(false, "oracle mismatch at " + l.to_string());
                       return;
                     }
                   }
         t.expect(tested > 13000, "exhaustive count " + std::to_string(tested));

         QuadGen gen(987);
         for (int s = 0; s < 50; ++s) {
           const auto [j1, j2, j3, j] = gen.next(120);
           const Screen scr = build_screen(j1, j2, j3, j);
           collected_defects.push_back(max_screen_defect(scr));
           for (int iy = 0; iy < scr.domain.size; ++iy)
             for (int ix = 0; ix < scr.domain.size; ++ix) {
               const double exact =
                   sixj_exact({j1, j2, scr.domain.j12_at(ix), j3, j,
                               scr.domain.j23_at(iy)})
                       .to_double();
               const double got = scr.at(ix, iy);
               const double tol = 1e-10 * std::fabs(exact) + 1e-14;
               if (!(std::fabs(got - exact) <= tol)) {
                 t.expect(false, "screen/exact mismatch at quad " +
                                     j1.to_string() + "," + j2.to_string() +
                                     "," + j3.to_string() + "," + j.to_string());
                 return;
               }
             }
         }
         t.expect(true, "");
       }},

      {4, "orthonormality: defect <= 1e-10, exact for entries <= 4", 0.0,
       [&](Tally& t) {
         // exact unitarity, exhaustively over small quadruples
         for (std::int64_t a = 0; a <= 8; ++a)
           for (std::int64_t b = 0; b <= 8; ++b)
             for (std::int64_t c = 0; c <= 8; ++c)
               for (std::int64_t d = 0; d <= 8; ++d) {
                 const HalfInt j1 = ht(a), j2 = ht(b), j3 = ht(c), j = ht(d);
                 ScreenDomain dom;
                 try {
                   dom = screen_domain(j1, j2, j3, j);
                 } catch (const EmptyDomainError&) {
                   continue;
                 }
                 for (int col = 0; col < dom.size; ++col) {
                   const HalfInt j23 = dom.j23_at(col);
                   BigRat sum = 0;
                   for (int row = 0; row < dom.size; ++row) {
                     const HalfInt j12 = dom.j12_at(row);
                     sum += BigRat(j12.two_j_plus_one()) *
                            BigRat(j23.two_j_plus_one()) *
                            sixj_exact({j1, j2, j12, j3, j, j23}).squared();
                   }
                   if (sum != BigRat(1)) {
                     t.expect(false, "exact unitarity broken at " +
                                         j1.to_string() + "," + j2.to_string() +
                                         "," + j3.to_string() + "," + j.to_string());
                     return;
                   }
                 }
               }
         t.expect(true, "");
         // float screens built across this suite
         for (double d : collected_defects)
           if (!(d <= 1e-10)) {
             t.expect(false, "screen defect " + format_double(d));
             return;
           }
         t.expect(!collected_defects.empty(), "no screens collected");
       }},

      {5, "Regge twin equality over the full 61x61 screen", 0.0,
       [&](Tally& t) {
         const Screen a =
             build_screen(HalfInt(45), HalfInt(30), HalfInt(55), HalfInt(60));
         const Screen b =
             build_screen(HalfInt(40), HalfInt(35), HalfInt(50), HalfInt(65));
         t.expect(max_screen_defect(a) <= 1e-10, "twin screen defect");
         t.expect(max_screen_defect(b) <= 1e-10, "twin screen defect");
         t.expect(a.domain == b.domain, "twin domains differ");
         double worst = 0.0;
         for (std::size_t i = 0; i < a.values.size(); ++i)
           worst = std::max(worst, std::fabs(a.values[i] - b.values[i]));
         t.expect(worst <= 1e-12, "float twin mismatch " + format_double(worst));

         std::mt19937 rng(5);
         std::uniform_int_distribution<int> pick(0, a.domain.size - 1);
         for (int n = 0; n < 20; ++n) {
           const HalfInt j12 = a.domain.j12_at(pick(rng));
           const HalfInt j23 = a.domain.j23_at(pick(rng));
           const ExactRadical va =
               sixj_exact({HalfInt(45), HalfInt(30), j12, HalfInt(55), HalfInt(60), j23});
           const ExactRadical vb =
               sixj_exact({HalfInt(40), HalfInt(35), j12, HalfInt(50), HalfInt(65), j23});
           if (!(va == vb)) {
             t.expect(false, "exact twin mismatch at j12=" + j12.to_string() +
                                 " j23=" + j23.to_string());
             return;
           }
         }
         t.expect(true, "");
       }},

      {6, "caustics and ridges on the reference parameter sets", 30.0,
       [&](Tally& t) {
         for (const ReferenceCase& fc : reference_cases()) {
           const ScreenQuad q = ScreenQuad::from_labels(
               HalfInt(fc.j1), HalfInt(fc.j2), HalfInt(fc.j3), HalfInt(fc.j));
           check_curves(t, fc.name, q);
         }
       }},

      {7, "degeneracy flags and corner contact (exact arithmetic)", 0.0,
       [&](Tally& t) {
         for (const ReferenceCase& fc : reference_cases()) {
           const HalfInt j1(fc.j1), j2(fc.j2), j3(fc.j3), j(fc.j);
           const ScreenDomain dom = screen_domain(j1, j2, j3, j);
           const DegeneracyFlags f =
               degeneracy_flags({j1, j2, dom.j12_min, j3, j, dom.j23_min});
           t.expect(f.B == fc.B && f.C == fc.C && f.D == fc.D,
                    std::string(fc.name) + ": flag mismatch");

           // continuous corner coordinates as exact half-integers
           const HalfInt x_lo = dom.j12_min;
           const HalfInt x_hi = dom.j12_max + HalfInt(1);
           const HalfInt y_lo = dom.j23_min;
           const HalfInt y_hi = dom.j23_max + HalfInt(1);
           auto J = [](HalfInt v) { return HalfInt::from_twice(v.twice() + 1); };
           auto v2_at = [&](HalfInt x, HalfInt y) {
             return volume_squared_cm_exact(J(j1), J(j2), J(j3), J(j), x, y);
           };
           if (fc.B)
             t.expect(v2_at(x_lo, y_hi) == BigRat(0),
                      std::string(fc.name) + ": B corner not flat");
           if (fc.C)
             t.expect(v2_at(x_hi, y_lo) == BigRat(0),
                      std::string(fc.name) + ": C corner not flat");
           if (fc.D)
             t.expect(v2_at(x_lo, y_lo) == BigRat(0),
                      std::string(fc.name) + ": D corner not flat");
         }
       }},

      {8, "Piero specularity where certified; none for the Regge-degenerate case", 0.0,
       [&](Tally& t) {
         // (100,150,100,210): j1 = j3 certificate
         const HalfInt j1(100), j2(150), j3(100), j(210);
         const ScreenDomain dom = screen_domain(j1, j2, j3, j);
         const auto cert =
             piero_axis({j1, j2, dom.j12_min, j3, j, dom.j23_min});
         t.expect(cert.has_value() && *cert == PieroWhich::j1_eq_j3,
                  "j1=j3 certificate");

         const Screen s = build_screen(j1, j2, j3, j);
         t.expect(max_screen_defect(s) <= 1e-10, "certified screen defect");
         double worst = 0.0;
         for (int ix = 0; ix < s.domain.size; ++ix)
           for (int iy = 0; iy < ix; ++iy)
             worst = std::max(worst, std::fabs(s.at(ix, iy) - s.at(iy, ix)));
         t.expect(worst <= 1e-12, "transpose defect " + format_double(worst));

         // caustic mirror distance, measured by re-solving the root at
         // the reflected ordinate
         const ScreenQuad q = ScreenQuad::from_labels(j1, j2, j3, j);
         const CurveSample c = sample_caustic(q, 512);
         double hausdorff = 0.0;
         for (const CurvePoint& p : c.points) {
           // reflected point (p.y, p.x) should satisfy V^2 = 0; distance
           // along x to the nearest root at height p.x
           try {
             const CausticRoots r = caustic_roots_x(p.x, q);
             const double dist =
                 std::min(std::fabs(r.lo - p.y), std::fabs(r.hi - p.y));
             hausdorff = std::max(hausdorff, dist);
           } catch (const Error&) {
             t.expect(false, "reflected point off screen");
             return;
           }
         }
         t.expect(hausdorff < 1e-6, "mirror Hausdorff " + format_double(hausdorff));

         // (140,110,100,130): Regge-degenerate, flag D, but no
         // certificate; the exact mirror tests are not claimed there.
         const ScreenDomain d1d =
             screen_domain(HalfInt(140), HalfInt(110), HalfInt(100), HalfInt(130));
         const SixJLabels l1d = {HalfInt(140), HalfInt(110), d1d.j12_min,
                                 HalfInt(100), HalfInt(130), d1d.j23_min};
         t.expect(!piero_axis(l1d).has_value(), "Regge-degenerate case unexpectedly certified");
         t.expect(degeneracy_flags(l1d).D, "Regge-degenerate case flag D");
       }},

      {9, "3j caustic determinant limit and value convergence", 0.0,
       [&](Tally& t) {
         // determinant identity at R = 1e6 for 20 random nonzero cases
         std::mt19937 rng(11);
         std::uniform_int_distribution<std::int64_t> dt(1, 20);  // twice-values
         int done = 0;
         while (done < 20) {
           const BigRat half(1, 2);
           const BigRat J1 = BigRat(dt(rng)) / 2 + half;
           const BigRat J2 = BigRat(dt(rng)) / 2 + half;
           const BigRat J3 = BigRat(dt(rng)) / 2 + half;
           const BigRat L1 = BigRat(dt(rng)) / 2 + half;
           const BigRat L2 = BigRat(dt(rng)) / 2 + half;
           const BigRat L3 = BigRat(dt(rng)) / 2 + half;
           const BigRat m1 = L3 - L2, m2 = L1 - L3;
           const BigRat det4 = threej_caustic_det_exact(J1, J2, J3, m1, m2);
           if (det4 == 0) continue;
           const BigRat det5 =
               limit_det_scaled_exact(J1, J2, J3, L1, L2, L3, BigRat(1000000));
           const double ratio = to_double(det5 / det4);
           if (!(std::fabs(ratio - 1.0) < 1e-3)) {
             t.expect(false, "det ratio " + format_double(ratio));
             return;
           }
           ++done;
         }
         t.expect(true, "");

         // value convergence, 5 small cases, R = 10..160
         const std::vector<std::int64_t> sched = {10, 20, 40, 80, 160};
         struct Case {
           std::int64_t j1, j2, j3, l1, l2, l3;
         };
         const std::vector<Case> cases = {{1, 1, 2, 1, 1, 1},
                                          {1, 1, 2, 2, 1, 1},
                                          {2, 1, 2, 1, 2, 2},
                                          {1, 2, 2, 2, 2, 1},
                                          {3, 2, 4, 1, 3, 2}};
         for (const Case& c : cases) {
           const LimitEstimate est = threej_limit_estimate(
               HalfInt(c.j1), HalfInt(c.j2), HalfInt(c.j3), HalfInt(c.l1),
               HalfInt(c.l2), HalfInt(c.l3), sched);
           t.expect(est.threej != 0.0, "degenerate 3j target");
           for (std::size_t i = 1; i < est.rows.size(); ++i)
             if (!(est.rows[i].abs_delta < est.rows[i - 1].abs_delta)) {
               t.expect(false, "non-monotone convergence");
               return;
             }
         }
         t.expect(true, "");
       }},

      {10, "caustic family j1=j2=j3=100, j = 25..275", 0.0,
       [&](Tally& t) {
         std::vector<CurveSample> family;
         for (std::int64_t j = 25; j <= 275; j += 25) {
           const ScreenQuad q = ScreenQuad::from_labels(
               HalfInt(100), HalfInt(100), HalfInt(100), HalfInt(j));
           check_curves(t, "family j=" + std::to_string(j), q);
           family.push_back(sample_caustic(q, 512));
         }
         t.expect(family.size() == 11, "sweep count");

         // the j = 100 member is the fully symmetric caustic
         const CurveSample symmetric = sample_caustic(
             ScreenQuad::from_labels(HalfInt(100), HalfInt(100), HalfInt(100),
                                     HalfInt(100)),
             512);
         const CurveSample& mid = family[3];
         t.expect(mid.points.size() == symmetric.points.size(), "symmetric member size");
         double worst = 0.0;
         for (std::size_t i = 0; i < mid.points.size(); ++i) {
           worst = std::max(worst, std::fabs(mid.points[i].x - symmetric.points[i].x));
           worst = std::max(worst, std::fabs(mid.points[i].y - symmetric.points[i].y));
         }
         t.expect(worst <= 1e-9, "symmetric member deviation " + format_double(worst));
       }},

      {11, "quantum-classical boundary along the (45,30,55,60) row j23 = 55", 0.0,
       [&](Tally& t) {
         const Screen s =
             build_screen(HalfInt(45), HalfInt(30), HalfInt(55), HalfInt(60));
         t.expect(max_screen_defect(s) <= 1e-10, "row screen defect");
         const int iy = (HalfInt(55) - s.domain.j23_min).twice() / 2;
         const double y = 55.5;
         const ScreenQuad q{45.5, 30.5, 55.5, 60.5};
         const CausticRoots roots = caustic_roots_x(y, q);
         t.expect(roots.count == 2, "two caustic roots on the row");

         // sign changes strictly inside the caustic
         int sign_changes = 0;
         double prev = 0.0;
         for (int ix = 0; ix < s.domain.size; ++ix) {
           const double x = s.domain.j12_at(ix).to_double() + 0.5;
           if (x <= roots.lo || x >= roots.hi) continue;
           const double v = s.at(ix, iy);
           if (prev != 0.0 && ((v < 0) != (prev < 0))) ++sign_changes;
           prev = v;
         }
         t.expect(sign_changes >= 5,
                  "sign changes " + std::to_string(sign_changes));

         // monotone decay toward the screen corner over the outermost
         // five grid points (only the large-j12 end of this row lies
         // outside the caustic; the left edge is still classical)
         const double corner_x = s.domain.j12_at(s.domain.size - 1).to_double() + 0.5;
         t.expect(corner_x > roots.hi, "corner end not outside the caustic");
         bool monotone = true;
         for (int ix = s.domain.size - 4; ix < s.domain.size; ++ix)
           if (!(std::fabs(s.at(ix, iy)) < std::fabs(s.at(ix - 1, iy))))
             monotone = false;
         t.expect(monotone, "outermost five not monotone");
       }},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Tally t;
    const auto t0 = Clock::now();
    try {
      c.run(t);
    } catch (const std::exception& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    bool ok = t.failures == 0;
    std::string note;
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      ok = false;
      note = " (over time limit " + format_double(c.limit_seconds) + "s)";
    }
    if (!ok) ++failed;
    std::printf("[%s] criterion %2d: %s (%.2fs, %d checks)%s%s\n",
                ok ? "PASS" : "FAIL", c.id, c.name, secs, t.checks,
                t.first_failure.empty() ? "" : (" - " + t.first_failure).c_str(),
                note.c_str());
  }
  if (failed) std::printf("%d criterion(s) FAILED\n", failed);
  return failed == 0 ? 0 : 1;
}
