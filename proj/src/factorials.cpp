#include "spinscreen/factorials.hpp"

#include <atomic>
#include <mutex>

#include "spinscreen/errors.hpp"

namespace spinscreen {

namespace {

constexpr std::int64_t kCapArg = kFactorialCapTwice;

// Grow-only table preallocated to the cap so the storage never moves:
// readers index it lock-free once the acquire-load shows their entry
// is filled, writers extend under the mutex.
std::vector<BigInt>& table() {
  static std::vector<BigInt> t(static_cast<std::size_t>(kCapArg) + 1);
  return t;
}
std::atomic<std::int64_t> g_filled{0};  // entries [0, g_filled) are ready
std::mutex g_mutex;

}  // namespace

const BigInt& factorial(std::int64_t n) {
  if (n < 0) throw FactorialRangeError("factorial of negative " + std::to_string(n));
  if (n > kCapArg)
    throw FactorialRangeError("factorial argument " + std::to_string(n) +
                              " beyond table cap " + std::to_string(kCapArg));
  std::vector<BigInt>& t = table();
  if (g_filled.load(std::memory_order_acquire) <= n) {
    std::lock_guard<std::mutex> lock(g_mutex);
    std::int64_t have = g_filled.load(std::memory_order_relaxed);
    if (have == 0) {
      t[0] = 1;
      have = 1;
    }
    while (have <= n) {
      t[static_cast<std::size_t>(have)] = t[static_cast<std::size_t>(have - 1)] * have;
      ++have;
    }
    g_filled.store(have, std::memory_order_release);
  }
  return t[static_cast<std::size_t>(n)];
}

const BigInt& factorial(HalfInt n) {
  if (!n.is_integer())
    throw FactorialRangeError("factorial of half-odd " + n.to_string());
  return factorial(n.integer_value());
}

const std::vector<std::int32_t>& prime_table() {
  static const std::vector<std::int32_t> primes = [] {
    const std::int32_t limit = static_cast<std::int32_t>(kFactorialCapTwice) + 1;
    std::vector<bool> sieve(limit + 1, true);
    std::vector<std::int32_t> out;
    for (std::int32_t p = 2; p <= limit; ++p) {
      if (!sieve[p]) continue;
      out.push_back(p);
      for (std::int64_t q = static_cast<std::int64_t>(p) * p; q <= limit; q += p)
        sieve[static_cast<std::size_t>(q)] = false;
    }
    return out;
  }();
  return primes;
}

std::int64_t factorial_prime_exponent(std::int64_t n, std::int64_t p) {
  std::int64_t e = 0;
  while (n >= p) {
    n /= p;
    e += n;
  }
  return e;
}

void FactorialProduct::mul_factorial(std::int64_t n, int power) {
  if (n < 0) throw FactorialRangeError("factorial of negative " + std::to_string(n));
  if (n < 2 || power == 0) return;
  const auto& primes = prime_table();
  if (n > primes.back())
    throw FactorialRangeError("factorial argument " + std::to_string(n) +
                              " beyond prime table");
  if (n > max_arg_) max_arg_ = n;
  for (std::size_t i = 0; i < primes.size() && primes[i] <= n; ++i) {
    if (exps_.size() <= i) exps_.resize(i + 1, 0);
    exps_[i] += static_cast<std::int32_t>(power * factorial_prime_exponent(n, primes[i]));
  }
}

FactorialProduct::SqrtSplit FactorialProduct::sqrt_split() const {
  const auto& primes = prime_table();
  BigInt scale_num = 1, scale_den = 1, radicand = 1;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const std::int32_t e = exps_[i];
    if (e == 0) continue;
    const BigInt p = primes[i];
    if (e > 0) {
      if (e / 2 > 0) scale_num *= boost::multiprecision::pow(p, static_cast<unsigned>(e / 2));
      if (e % 2) radicand *= p;
    } else {
      // p^e = p^(a mod 2) / p^(2*ceil(a/2)) with a = -e.
      const std::int32_t a = -e;
      scale_den *= boost::multiprecision::pow(p, static_cast<unsigned>((a + 1) / 2));
      if (a % 2) radicand *= p;
    }
  }
  return {BigRat(scale_num, scale_den), radicand};
}

}  // namespace spinscreen
