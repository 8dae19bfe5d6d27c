#include "spinscreen/recurrence.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "spinscreen/errors.hpp"
#include "spinscreen/exact.hpp"

namespace spinscreen {

namespace {

// Coefficients of X(n) f(n+1) + Y(n) f(n) + Z(n) f(n-1) = 0 for
// f(j12) = {j1 j2 j12; j3 j j23} (Schulten & Gordon, J. Math. Phys. 16,
// 1961 (1975)):
//   X(n) = n E(n+1),  Y(n) = F(n),  Z(n) = (n+1) E(n)
// with E, F as below. When j12_min == 0 (forces j1 == j2 and j3 == j)
// a factor n(n+1) is divided out of all three coefficients, otherwise
// X(0) = 0 stalls the recursion at the lower end.
struct SixJRecurrence {
  double f1, f2, f3, fj, f23;   // j(j+1) values
  double d12sq, s12p1sq;        // (j1-j2)^2, (j1+j2+1)^2
  double d3jsq, s3jp1sq;        // (j3-j)^2,  (j3+j+1)^2
  bool reduced;

  SixJRecurrence(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j, HalfInt j23,
                 bool reduced_form)
      : reduced(reduced_form) {
    auto jj = [](HalfInt v) {
      const double x = v.to_double();
      return x * (x + 1.0);
    };
    f1 = jj(j1);
    f2 = jj(j2);
    f3 = jj(j3);
    fj = jj(j);
    f23 = jj(j23);
    const double dj12 = j1.to_double() - j2.to_double();
    const double sj12 = j1.to_double() + j2.to_double();
    const double dj3j = j3.to_double() - j.to_double();
    const double sj3j = j3.to_double() + j.to_double();
    d12sq = dj12 * dj12;
    s12p1sq = (sj12 + 1.0) * (sj12 + 1.0);
    d3jsq = dj3j * dj3j;
    s3jp1sq = (sj3j + 1.0) * (sj3j + 1.0);
  }

  double E(double x) const {
    const double xx = x * x;
    const double p = (xx - d12sq) * (s12p1sq - xx) * (xx - d3jsq) * (s3jp1sq - xx);
    return p > 0.0 ? std::sqrt(p) : 0.0;
  }
  // E with the x^2 factor (present when j1==j2 and j3==j) removed.
  double E_reduced(double x) const {
    const double xx = x * x;
    const double p = (s12p1sq - xx) * (s3jp1sq - xx);
    return p > 0.0 ? std::sqrt(p) : 0.0;
  }

  double X(double n) const {
    if (reduced) return (n + 1.0) * E_reduced(n + 1.0);
    return n * E(n + 1.0);
  }
  double Z(double n) const {
    if (reduced) return n * E_reduced(n);
    return (n + 1.0) * E(n);
  }
  double Y(double n) const {
    const double xx = n * (n + 1.0);
    if (reduced)
      return (2.0 * n + 1.0) * (-xx + f1 + f2 + f3 + fj - 2.0 * f23);
    return (2.0 * n + 1.0) *
           (xx * (-xx + f1 + f2) + f3 * (xx + f1 - f2) + fj * (xx - f1 + f2) -
            2.0 * xx * f23);
  }
};

// Solves the three-term recurrence over n = nmin + i, i in [0, N).
// Ratio (two-term) recursions are used in the decaying tails where the
// linear recurrence is unstable, the linear recurrence bridges the
// classical region, and the pieces are matched where they meet
// (Luscombe & Luban, Phys. Rev. E 57, 7274 (1998)).
void solve_three_term(const SixJRecurrence& rec, double nmin, int N,
                      std::vector<double>& f) {
  f.assign(N, 0.0);
  if (N == 1) {
    f[0] = 1.0;
    return;
  }
  const double tiny = std::sqrt(std::sqrt(std::numeric_limits<double>::min()));
  const double nmax = nmin + (N - 1);

  // Backward ratio sweep from the top.
  int i2 = N - 1;
  const double ymax = rec.Y(nmax);
  if (std::fabs(ymax) < tiny) {
    f[i2] = 1.0;
  } else {
    double rn = -rec.Z(nmax) / ymax;
    f[i2] = rn;
    while (--i2 > 0) {
      const double n = nmin + i2;
      rn = -rec.Z(n) / (rec.Y(n) + rec.X(n) * rn);
      if (std::fabs(rn) > 1.0) break;
      f[i2] = rn;
    }
    f[i2] = 1.0;
    for (int k = i2 + 1; k + 1 <= N - 1; ++k) f[k + 1] *= f[k];
  }
  if (i2 == 0) return;

  // Forward ratio sweep from the bottom.
  int i1 = 0;
  const double ymin = rec.Y(nmin);
  if (std::fabs(ymin) < tiny) {
    f[i1] = 1.0;
  } else {
    double sn = -rec.X(nmin) / ymin;
    f[i1] = sn;
    while (++i1 < i2) {
      const double n = nmin + i1;
      sn = -rec.X(n) / (rec.Y(n) + rec.Z(n) * sn);
      if (std::fabs(sn) > 1.0) break;
      f[i1] = sn;
    }
    f[i1] = 1.0;
    for (int k = i1 - 1; k >= 1; --k) f[k - 1] *= f[k];
  }

  if (i1 >= i2) return;

  // Linear three-term bridge across the classical region, then glue to
  // the backward branch at i2.
  int k = i1;
  if (k == 0) {
    // Z(nmin) vanishes for these coefficients; two-term first step.
    f[1] = -rec.Y(nmin) * f[0] / rec.X(nmin);
    ++k;
  }
  for (; k < i2; ++k) {
    const double n = nmin + k;
    f[k + 1] = (-rec.Y(n) * f[k] - rec.Z(n) * f[k - 1]) / rec.X(n);
  }
  const double match = f[i2];
  if (match == 0.0 || !std::isfinite(match))
    throw RecurrenceBreakdownError("recurrence branches failed to match");
  const double scale = 1.0 / match;
  for (int m = 0; m <= i2; ++m) f[m] *= scale;
}

int env_thread_cap() {
  if (const char* env = std::getenv("SPINSCREEN_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

std::vector<double> column_by_exact(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j,
                                    HalfInt j23, const ScreenDomain& dom) {
  std::vector<double> col(dom.size);
  for (int i = 0; i < dom.size; ++i)
    col[i] = sixj_exact({j1, j2, dom.j12_at(i), j3, j, j23}).to_double();
  return col;
}

void normalize_and_sign(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j,
                        HalfInt j23, const ScreenDomain& dom,
                        std::vector<double>& f) {
  const double w23 = static_cast<double>(j23.two_j_plus_one());
  double norm = 0.0;
  for (int i = 0; i < dom.size; ++i) {
    const double w12 = static_cast<double>(dom.j12_at(i).two_j_plus_one());
    norm += w12 * w23 * f[i] * f[i];
  }
  if (!(norm > 0.0) || !std::isfinite(norm))
    throw RecurrenceBreakdownError("column norm degenerate");
  const double inv = 1.0 / std::sqrt(norm);
  for (double& v : f) v *= inv;

  // Global sign from one exact value. The stretched symbol at j12_max
  // never vanishes, but guard with the largest element anyway.
  int anchor = dom.size - 1;
  if (f[anchor] == 0.0) {
    anchor = 0;
    for (int i = 1; i < dom.size; ++i)
      if (std::fabs(f[i]) > std::fabs(f[anchor])) anchor = i;
  }
  const int exact_sign =
      sixj_exact({j1, j2, dom.j12_at(anchor), j3, j, j23}).sign();
  if (exact_sign != 0 && ((f[anchor] < 0.0) != (exact_sign < 0)))
    for (double& v : f) v = -v;
}

}  // namespace

std::vector<double> sixj_column(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j,
                                HalfInt j23) {
  const ScreenDomain dom = screen_domain(j1, j2, j3, j);
  if (!triangle_ok(j1, j, j23) || !triangle_ok(j3, j2, j23))
    throw EmptyDomainError("j23=" + j23.to_string() + " outside allowed range");

  const bool reduced = dom.j12_min.twice() == 0;
  const SixJRecurrence rec(j1, j2, j3, j, j23, reduced);
  std::vector<double> f;
  solve_three_term(rec, dom.j12_min.to_double(), dom.size, f);
  for (double v : f)
    if (!std::isfinite(v)) throw RecurrenceBreakdownError("non-finite column value");
  normalize_and_sign(j1, j2, j3, j, j23, dom, f);
  return f;
}

Screen build_screen(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j, int threads) {
  Screen s;
  s.j1 = j1;
  s.j2 = j2;
  s.j3 = j3;
  s.j = j;
  s.domain = screen_domain(j1, j2, j3, j);
  const int n = s.domain.size;
  s.values.assign(static_cast<std::size_t>(n) * n, 0.0);
  s.column_defect.assign(n, 0.0);

  std::atomic<int> next{0};
  std::atomic<int> fallbacks{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const int c = next.fetch_add(1);
      if (c >= n) return;
      const HalfInt j23 = s.domain.j23_at(c);
      try {
        std::vector<double> col;
        try {
          col = sixj_column(j1, j2, j3, j, j23);
        } catch (const RecurrenceBreakdownError&) {
          col = column_by_exact(j1, j2, j3, j, j23, s.domain);
          fallbacks.fetch_add(1);
        }
        const double w23 = static_cast<double>(j23.two_j_plus_one());
        double norm = 0.0;
        for (int i = 0; i < n; ++i) {
          const double w12 = static_cast<double>(s.domain.j12_at(i).two_j_plus_one());
          norm += w12 * w23 * col[i] * col[i];
          s.at(i, c) = col[i];
        }
        s.column_defect[c] = std::fabs(norm - 1.0);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  int nthreads = threads > 0 ? threads : env_thread_cap();
  nthreads = std::min(nthreads, n);
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  s.exact_fallback_columns = fallbacks.load();
  return s;
}

OrthonormalityDefect orthonormality_defect(const Screen& s, Axis axis) {
  const int n = s.domain.size;
  // Work on U(i12, i23) = sqrt(w12 w23) * value, an orthogonal matrix.
  std::vector<double> w12(n), w23(n);
  for (int i = 0; i < n; ++i) {
    w12[i] = static_cast<double>(s.domain.j12_at(i).two_j_plus_one());
    w23[i] = static_cast<double>(s.domain.j23_at(i).two_j_plus_one());
  }
  auto u = [&](int i12, int i23) {
    return std::sqrt(w12[i12] * w23[i23]) * s.at(i12, i23);
  };

  OrthonormalityDefect d;
  for (int line = 0; line < n; ++line) {
    double unit = 0.0, cross = 0.0;
    for (int i = 0; i < n; ++i) {
      const double a = axis == Axis::columns ? u(i, line) : u(line, i);
      unit += a * a;
      if (line + 1 < n) {
        const double b = axis == Axis::columns ? u(i, line + 1) : u(line + 1, i);
        cross += a * b;
      }
    }
    d.unit = std::max(d.unit, std::fabs(unit - 1.0));
    if (line + 1 < n) d.cross = std::max(d.cross, std::fabs(cross));
  }
  return d;
}

}  // namespace spinscreen
