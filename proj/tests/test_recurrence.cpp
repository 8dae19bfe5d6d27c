#include <doctest.h>

#include <cmath>
#include <random>

#include "spinscreen/exact.hpp"
#include "spinscreen/recurrence.hpp"
#include "spinscreen/symmetry.hpp"

using namespace spinscreen;

namespace {

HalfInt ht(std::int64_t t) { return HalfInt::from_twice(t); }

void check_column_against_exact(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j,
                                HalfInt j23, double rel_tol, double abs_floor) {
  const ScreenDomain dom = screen_domain(j1, j2, j3, j);
  const std::vector<double> col = sixj_column(j1, j2, j3, j, j23);
  REQUIRE(static_cast<int>(col.size()) == dom.size);
  for (int i = 0; i < dom.size; ++i) {
    const double exact =
        sixj_exact({j1, j2, dom.j12_at(i), j3, j, j23}).to_double();
    if (std::fabs(exact) > 1e-12)
      CHECK(std::fabs(col[i] - exact) <=
            rel_tol * std::fabs(exact) + abs_floor);
    else
      CHECK(std::fabs(col[i] - exact) <= abs_floor);
  }
}

}  // namespace

TEST_CASE("single-element column equals the exact value") {
  // (0,1,1,2): both ranges collapse to one point
  const std::vector<double> col =
      sixj_column(HalfInt(0), HalfInt(1), HalfInt(1), HalfInt(2), HalfInt(2));
  REQUIRE(col.size() == 1);
  const double exact =
      sixj_exact({HalfInt(0), HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(2),
                  HalfInt(2)}).to_double();
  CHECK(col[0] == doctest::Approx(exact).epsilon(1e-14));
}

TEST_CASE("column matches exact values on a mid-size case") {
  check_column_against_exact(HalfInt(45), HalfInt(30), HalfInt(55), HalfInt(60),
                             HalfInt(60), 1e-10, 1e-14);
}

TEST_CASE("column rejects j23 outside the allowed range") {
  CHECK_THROWS_AS(
      sixj_column(HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(1), ht(1)),
      EmptyDomainError);
  CHECK_THROWS_AS(
      sixj_column(HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(5)),
      EmptyDomainError);
}

TEST_CASE("columns match exact values exhaustively at small entries") {
  for (std::int64_t t1 = 0; t1 <= 8; ++t1)
    for (std::int64_t t2 = 0; t2 <= 8; ++t2)
      for (std::int64_t t3 = 0; t3 <= 8; ++t3)
        for (std::int64_t t = 0; t <= 8; ++t) {
          const HalfInt j1 = ht(t1), j2 = ht(t2), j3 = ht(t3), j = ht(t);
          ScreenDomain dom;
          try {
            dom = screen_domain(j1, j2, j3, j);
          } catch (const EmptyDomainError&) {
            continue;
          }
          for (int c = 0; c < dom.size; ++c)
            check_column_against_exact(j1, j2, j3, j, dom.j23_at(c), 1e-12, 1e-13);
        }
}

TEST_CASE("degenerate zero-start column (j1=j2, j3=j)") {
  // j12_min = 0 exercises the reduced-coefficient recurrence
  check_column_against_exact(HalfInt(8), HalfInt(8), HalfInt(6), HalfInt(6),
                             HalfInt(5), 1e-12, 1e-13);
  check_column_against_exact(ht(15), ht(15), ht(9), ht(9), HalfInt(4), 1e-12,
                             1e-13);
}

TEST_CASE("screen 3x3 equals the exact matrix") {
  const Screen s = build_screen(HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(1));
  REQUIRE(s.domain.size == 3);
  for (int ix = 0; ix < 3; ++ix)
    for (int iy = 0; iy < 3; ++iy) {
      const double exact =
          sixj_exact({s.j1, s.j2, s.domain.j12_at(ix), s.j3, s.j,
                      s.domain.j23_at(iy)}).to_double();
      CHECK(s.at(ix, iy) == doctest::Approx(exact).epsilon(1e-13));
    }
  CHECK(orthonormality_defect(s, Axis::columns).max() < 1e-14);
  CHECK(orthonormality_defect(s, Axis::rows).max() < 1e-14);
}

TEST_CASE("mid-size screen unitarity on both axes") {
  const Screen s = build_screen(HalfInt(45), HalfInt(30), HalfInt(55), HalfInt(60));
  REQUIRE(s.domain.size == 61);
  CHECK(orthonormality_defect(s, Axis::columns).max() < 1e-10);
  CHECK(orthonormality_defect(s, Axis::rows).max() < 1e-10);
  CHECK(s.exact_fallback_columns == 0);
}

TEST_CASE("defect measurement detects a corrupted value") {
  Screen s = build_screen(HalfInt(5), HalfInt(5), HalfInt(5), HalfInt(5));
  // zero an interior value with nontrivial magnitude
  int ix = 0, iy = s.domain.size / 2;
  for (int i = 0; i < s.domain.size; ++i)
    if (std::fabs(s.at(i, iy)) > std::fabs(s.at(ix, iy))) ix = i;
  s.at(ix, iy) = 0.0;
  CHECK(orthonormality_defect(s, Axis::columns).max() > 1e-3);
}

TEST_CASE("Regge twin screens are identical") {
  const Screen a = build_screen(HalfInt(45), HalfInt(30), HalfInt(55), HalfInt(60));
  const Screen b = build_screen(HalfInt(40), HalfInt(35), HalfInt(50), HalfInt(65));
  REQUIRE(a.domain == b.domain);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    worst = std::max(worst, std::fabs(a.values[i] - b.values[i]));
  CHECK(worst < 1e-12);
}

TEST_CASE("diagonal symmetry when a column pair is equal") {
  // j1 == j3
  const Screen s = build_screen(HalfInt(6), HalfInt(4), HalfInt(6), HalfInt(3));
  REQUIRE(piero_axis({s.j1, s.j2, s.domain.j12_min, s.j3, s.j, s.domain.j23_min})
              .has_value());
  for (int ix = 0; ix < s.domain.size; ++ix)
    for (int iy = 0; iy < s.domain.size; ++iy)
      CHECK(std::fabs(s.at(ix, iy) - s.at(iy, ix)) < 1e-12);
  // j2 == j
  const Screen t = build_screen(HalfInt(5), HalfInt(3), HalfInt(4), HalfInt(3));
  for (int ix = 0; ix < t.domain.size; ++ix)
    for (int iy = 0; iy < t.domain.size; ++iy)
      CHECK(std::fabs(t.at(ix, iy) - t.at(iy, ix)) < 1e-12);
}

TEST_CASE("fully symmetric 201x201 screen") {
  const Screen s = build_screen(HalfInt(100), HalfInt(100), HalfInt(100), HalfInt(100));
  REQUIRE(s.domain.size == 201);
  CHECK(s.domain.j12_min == HalfInt(0));
  CHECK(s.domain.J12_hi() == 201.0);
  CHECK(orthonormality_defect(s, Axis::columns).max() < 1e-10);
  CHECK(orthonormality_defect(s, Axis::rows).max() < 1e-10);
  CHECK(s.exact_fallback_columns == 0);
  // spot values against exact evaluation
  for (int ix : {0, 50, 200})
    for (int iy : {0, 100, 200}) {
      const double exact =
          sixj_exact({s.j1, s.j2, s.domain.j12_at(ix), s.j3, s.j,
                      s.domain.j23_at(iy)}).to_double();
      CHECK(std::fabs(s.at(ix, iy) - exact) <= 1e-10 * std::fabs(exact) + 1e-14);
    }
}

TEST_CASE("thread fan-out is deterministic") {
  const Screen a = build_screen(HalfInt(12), HalfInt(9), HalfInt(10), HalfInt(11), 1);
  const Screen b = build_screen(HalfInt(12), HalfInt(9), HalfInt(10), HalfInt(11), 4);
  REQUIRE(a.values.size() == b.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i)
    CHECK(a.values[i] == b.values[i]);
}

TEST_CASE("random screens match exact evaluation") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::int64_t> d(0, 40);  // twice-values
  int done = 0;
  while (done < 6) {
    const HalfInt j1 = ht(d(rng)), j2 = ht(d(rng)), j3 = ht(d(rng));
    HalfInt j = ht(d(rng));
    if ((j1 + j2 + j3 + j).is_half_odd()) j += ht(1);
    ScreenDomain dom;
    try {
      dom = screen_domain(j1, j2, j3, j);
    } catch (const EmptyDomainError&) {
      continue;
    }
    const Screen s = build_screen(j1, j2, j3, j);
    for (int iy = 0; iy < dom.size; ++iy)
      for (int ix = 0; ix < dom.size; ++ix) {
        const double exact =
            sixj_exact({j1, j2, dom.j12_at(ix), j3, j, dom.j23_at(iy)}).to_double();
        if (std::fabs(exact) > 1e-12)
          CHECK(std::fabs(s.at(ix, iy) - exact) <= 1e-10 * std::fabs(exact) + 1e-14);
      }
    ++done;
  }
}
