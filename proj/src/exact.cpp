#include "spinscreen/exact.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "spinscreen/errors.hpp"
#include "spinscreen/factorials.hpp"

namespace spinscreen {

namespace {

// Alternating single sum over k with denominator factorials
// prod_i (k - a_i)! * prod_j (b_j - k)! and optional (k+1)! numerator,
// evaluated as exact integers over the common denominator
//   Q = prod_i (kmax - a_i)! * prod_j (b_j - kmin)!.
// Successive terms differ by small integer factors, so each step is a
// handful of short multiplications and exact divisions.
struct AlternatingSum {
  BigInt sum = 0;  // sum_k (-1)^k * Q * term_k
  BigInt q = 1;
};

AlternatingSum racah_style_sum(const std::vector<std::int64_t>& a,
                               const std::vector<std::int64_t>& b,
                               bool k_plus_one_factorial) {
  const std::int64_t kmin = *std::max_element(a.begin(), a.end());
  const std::int64_t kmax = *std::min_element(b.begin(), b.end());

  AlternatingSum out;
  for (std::int64_t ai : a) out.q *= factorial(kmax - ai);
  for (std::int64_t bj : b) out.q *= factorial(bj - kmin);

  // t_kmin = [ (kmin+1)! ] * prod_i (kmax - a_i)! / (kmin - a_i)!
  BigInt t = k_plus_one_factorial ? factorial(kmin + 1) : BigInt(1);
  for (std::int64_t ai : a) t *= factorial(kmax - ai) / factorial(kmin - ai);

  bool negative = (kmin & 1) != 0;
  out.sum = negative ? -t : t;
  for (std::int64_t k = kmin; k < kmax; ++k) {
    // Multiply everything first so the single division is exact.
    std::int64_t up = k_plus_one_factorial ? k + 2 : 1;
    for (std::int64_t bj : b) up *= bj - k;
    std::int64_t down = 1;
    for (std::int64_t ai : a) down *= k + 1 - ai;
    t *= up;
    t /= down;
    negative = !negative;
    out.sum += negative ? -t : t;
  }
  return out;
}

// Adds Delta(a,b,c) = (a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)! to the
// factored radicand product.
void mul_triangle_coeff(FactorialProduct& fp, HalfInt a, HalfInt b, HalfInt c) {
  fp.mul_factorial((a + b - c).integer_value(), +1);
  fp.mul_factorial((a - b + c).integer_value(), +1);
  fp.mul_factorial((-a + b + c).integer_value(), +1);
  fp.mul_factorial((a + b + c).integer_value() + 1, -1);
}

}  // namespace

bool ThreeJLabels::valid() const {
  if ((m1 + m2 + m3).twice() != 0) return false;
  if (abs(m1) > j1 || abs(m2) > j2 || abs(m3) > j3) return false;
  if (!(j1 + m1).is_integer() || !(j2 + m2).is_integer() || !(j3 + m3).is_integer())
    return false;
  return triangle_ok(j1, j2, j3);
}

ExactRadical sixj_exact(const SixJLabels& L) {
  if (!L.valid()) return ExactRadical::zero();

  const std::vector<std::int64_t> a = {
      (L.j1 + L.j2 + L.j12).integer_value(),
      (L.j1 + L.j + L.j23).integer_value(),
      (L.j3 + L.j2 + L.j23).integer_value(),
      (L.j3 + L.j + L.j12).integer_value(),
  };
  const std::vector<std::int64_t> b = {
      (L.j1 + L.j2 + L.j3 + L.j).integer_value(),
      (L.j2 + L.j12 + L.j + L.j23).integer_value(),
      (L.j1 + L.j12 + L.j3 + L.j23).integer_value(),
  };
  const AlternatingSum s = racah_style_sum(a, b, /*k_plus_one_factorial=*/true);
  if (s.sum == 0) return ExactRadical::zero();

  FactorialProduct fp;
  mul_triangle_coeff(fp, L.j1, L.j2, L.j12);
  mul_triangle_coeff(fp, L.j3, L.j, L.j12);
  mul_triangle_coeff(fp, L.j1, L.j, L.j23);
  mul_triangle_coeff(fp, L.j3, L.j2, L.j23);
  const auto split = fp.sqrt_split();

  return ExactRadical::from_squarefree(BigRat(s.sum, s.q) * split.scale, split.radicand);
}

ExactRadical threej_exact(const ThreeJLabels& L) {
  if (!L.valid()) return ExactRadical::zero();

  const std::vector<std::int64_t> a = {
      0,
      (L.j2 - L.j3 - L.m1).integer_value(),
      (L.j1 - L.j3 + L.m2).integer_value(),
  };
  const std::vector<std::int64_t> b = {
      (L.j1 + L.j2 - L.j3).integer_value(),
      (L.j1 - L.m1).integer_value(),
      (L.j2 + L.m2).integer_value(),
  };
  const AlternatingSum s = racah_style_sum(a, b, /*k_plus_one_factorial=*/false);
  if (s.sum == 0) return ExactRadical::zero();

  FactorialProduct fp;
  mul_triangle_coeff(fp, L.j1, L.j2, L.j3);
  fp.mul_factorial((L.j1 + L.m1).integer_value(), +1);
  fp.mul_factorial((L.j1 - L.m1).integer_value(), +1);
  fp.mul_factorial((L.j2 + L.m2).integer_value(), +1);
  fp.mul_factorial((L.j2 - L.m2).integer_value(), +1);
  fp.mul_factorial((L.j3 + L.m3).integer_value(), +1);
  fp.mul_factorial((L.j3 - L.m3).integer_value(), +1);
  const auto split = fp.sqrt_split();

  const bool phase_negative = ((L.j1 - L.j2 - L.m3).integer_value() & 1) != 0;
  BigRat r = BigRat(s.sum, s.q) * split.scale;
  if (phase_negative) r = -r;
  return ExactRadical::from_squarefree(std::move(r), split.radicand);
}

namespace {

// Memoized exact 3j keyed on twice-values; the oracle revisits the
// same symbols many times across the magnetic sums.
class ThreeJCache {
 public:
  const ExactRadical& get(HalfInt j1, HalfInt j2, HalfInt j3,
                          HalfInt m1, HalfInt m2, HalfInt m3) {
    const Key key = {j1.twice(), j2.twice(), j3.twice(),
                     m1.twice(), m2.twice(), m3.twice()};
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_.emplace(key, threej_exact({j1, j2, j3, m1, m2, m3})).first;
    return it->second;
  }

 private:
  using Key = std::array<std::int64_t, 6>;
  std::map<Key, ExactRadical> cache_;
};

}  // namespace

ExactRadical sixj_oracle_cg(const SixJLabels& L) {
  const HalfInt ten(10);
  for (HalfInt v : {L.j1, L.j2, L.j12, L.j3, L.j, L.j23})
    if (v > ten || v.is_negative())
      throw OracleRangeError("oracle guarded to entries <= 10, got " + v.to_string());
  if (!L.valid()) return ExactRadical::zero();

  // {j1 j2 j12; j3 j j23} as a fourfold contraction of 3j symbols:
  //   sum over m1, m2, n1 of (-1)^(j3+j+j23+n1+n2+n3)
  //     (j1 j2 j12; m1 m2 m12) (j1 j j23; m1 n2 -n3)
  //     (j3 j2 j23; -n1 m2 n3) (j3 j j12; n1 -n2 m12)
  // with m12 = -m1-m2, n3 = n1 - m2, n2 = n1 + m12.
  const HalfInt l1 = L.j3, l2 = L.j, l3 = L.j23;
  const HalfInt step(1);
  thread_local ThreeJCache cache;

  ExactRadical total = ExactRadical::zero();
  for (HalfInt m1 = -L.j1; m1 <= L.j1; m1 += step) {
    for (HalfInt m2 = -L.j2; m2 <= L.j2; m2 += step) {
      const HalfInt m3 = -(m1 + m2);
      if (abs(m3) > L.j12) continue;
      const ExactRadical& t1 = cache.get(L.j1, L.j2, L.j12, m1, m2, m3);
      if (t1.is_zero()) continue;
      for (HalfInt n1 = -l1; n1 <= l1; n1 += step) {
        const HalfInt n3 = n1 - m2;
        const HalfInt n2 = n1 + m3;
        if (abs(n2) > l2 || abs(n3) > l3) continue;
        const ExactRadical& t2 = cache.get(L.j1, l2, l3, m1, n2, -n3);
        if (t2.is_zero()) continue;
        const ExactRadical& t3 = cache.get(l1, L.j2, l3, -n1, m2, n3);
        if (t3.is_zero()) continue;
        const ExactRadical& t4 = cache.get(l1, l2, L.j12, n1, -n2, m3);
        if (t4.is_zero()) continue;
        ExactRadical term = t1 * t2 * t3 * t4;
        const HalfInt phase_ji = l1 + l2 + l3 + n1 + n2 + n3;
        if ((phase_ji.integer_value() & 1) != 0) term = -term;
        total = total + term;
      }
    }
  }
  return total;
}

namespace {

LimitEstimate limit_estimate_impl(HalfInt j1, HalfInt j2, HalfInt j3,
                                  HalfInt l1, HalfInt l2, HalfInt l3,
                                  const std::vector<std::int64_t>& schedule) {
  if (schedule.empty()) throw InvalidScheduleError("empty R schedule");
  for (std::size_t i = 1; i < schedule.size(); ++i)
    if (schedule[i] <= schedule[i - 1])
      throw InvalidScheduleError("R schedule must be strictly increasing");

  LimitEstimate out;
  out.m1 = l3 - l2;
  out.m2 = l1 - l3;
  out.m3 = -(out.m1 + out.m2);
  out.threej = threej_exact({j1, j2, j3, out.m1, out.m2, out.m3}).to_double();

  for (std::int64_t R : schedule) {
    const HalfInt hr(R);
    const SixJLabels big = {j1, j2, j3, l1 + hr, l2 + hr, l3 + hr};
    if (!big.valid())
      throw InvalidScheduleError("R=" + std::to_string(R) +
                                 " gives invalid 6j entries " + big.to_string());
    const double v = sixj_exact(big).to_double() * std::sqrt(2.0 * R + 1.0);
    LimitRow row;
    row.R = R;
    row.scaled_sixj = v;
    row.abs_delta = std::fabs(std::fabs(v) - std::fabs(out.threej));
    row.sign = v > 0 ? 1 : (v < 0 ? -1 : 0);
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace

LimitEstimate threej_limit_estimate(HalfInt j1, HalfInt j2, HalfInt j3,
                                    HalfInt l1, HalfInt l2, HalfInt l3,
                                    const std::vector<std::int64_t>& schedule) {
  return limit_estimate_impl(j1, j2, j3, l1, l2, l3, schedule);
}

LimitEstimate threej_limit_estimate_fd(HalfInt j1, HalfInt j2, HalfInt j3,
                                       HalfInt F, HalfInt D,
                                       const std::vector<std::int64_t>& schedule) {
  return limit_estimate_impl(j1, j2, j3, F, -F, D, schedule);
}

}  // namespace spinscreen
