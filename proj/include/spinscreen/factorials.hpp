#pragma once

#include <cstdint>
#include <vector>

#include "spinscreen/bigrat.hpp"
#include "spinscreen/half_int.hpp"

namespace spinscreen {

/// Largest factorial argument the memo table will hold (twice-value 2n
/// capped at 4000, i.e. n <= 2000 in j units times two entries).
inline constexpr std::int64_t kFactorialCapTwice = 4000;

/// n! for integer n, memoized. Grows the shared table on demand; reads
/// after the table covers n never lock. Throws FactorialRangeError
/// beyond the cap or for negative/non-integer arguments.
const BigInt& factorial(std::int64_t n);

/// Factorial of a HalfInt that must hold an integer value.
const BigInt& factorial(HalfInt n);

/// All primes <= kFactorialCapTwice + 1, ascending.
const std::vector<std::int32_t>& prime_table();

/// Exponent of prime p in n! (Legendre's formula).
std::int64_t factorial_prime_exponent(std::int64_t n, std::int64_t p);

/// A product of factorials kept as a prime exponent vector, so the
/// square part of the radicand can be split off without factoring any
/// big integer.
class FactorialProduct {
 public:
  /// Multiplies by (n!)^power.
  void mul_factorial(std::int64_t n, int power);

  struct SqrtSplit {
    BigRat scale;     // product of p^(e/2) over even parts, sign-free
    BigInt radicand;  // squarefree product of odd-exponent primes
  };
  /// sqrt(product) = scale * sqrt(radicand) with radicand squarefree.
  /// Requires every odd-exponent prime to appear with positive total
  /// exponent (true for triangle-coefficient products).
  SqrtSplit sqrt_split() const;

 private:
  std::vector<std::int32_t> exps_;  // indexed like prime_table()
  std::int64_t max_arg_ = 0;
};

}  // namespace spinscreen
