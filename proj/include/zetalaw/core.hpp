#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zetalaw {

// All integer arithmetic is 64-bit unsigned and exact. Operations whose
// intermediate products could overflow reject their inputs instead of
// wrapping; products of two values are safe for inputs up to 2^31.

/// Multiplies with overflow detection.
inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("checked_mul: product exceeds 64 bits");
  }
  return r;
}

/// base^exp with overflow detection.
inline std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

// Smallest-prime-factor sieve. Factorization of any n <= limit walks the
// smallest_factor chain in O(log n), which is what the bulk density
// computations rely on.
struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint32_t> primes;           // ascending, all primes <= limit
  std::vector<std::uint32_t> smallest_factor;  // [n] = least prime factor of n; [0] = [1] = 0

  bool contains(std::uint64_t n) const { return n >= 1 && n <= limit; }
};

/// Builds a PrimeTable for 2 <= limit <= 2^31.
PrimeTable sieve(std::uint64_t limit);

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

// value == product of prime^exponent; primes strictly increasing.
// factorize(1) yields the empty factor list.
struct Factorization {
  std::uint64_t value = 1;
  std::vector<PrimePower> factors;
};

Factorization factorize(std::uint64_t n, const PrimeTable& table);

/// Moebius function: 0 if n has a squared prime factor, else (-1)^(#prime factors).
int moebius(std::uint64_t n, const PrimeTable& table);

/// Moebius values for 1..n as a dense array ([0] unused), for bulk sieve sums.
std::vector<std::int8_t> moebius_upto(std::uint64_t n, const PrimeTable& table);

/// Deterministic trial-division primality test.
bool is_prime(std::uint64_t n);

/// p-adic valuation: the largest e with p^e | n. Requires p prime, n >= 1.
std::uint32_t valuation(std::uint64_t p, std::uint64_t n);

/// r_m(n) = prod p^floor(v_p(n)/m), the largest a with a^m | n. Requires m >= 2.
std::uint64_t power_radical(std::uint32_t m, std::uint64_t n, const PrimeTable& table);

// Dirichlet convolution (a*b)_n = sum_{d|n} a_d b_{n/d} on 1-indexed
// sequences: a[0] is ignored, a[k] is the value at k. O(N log N).
template <class T>
std::vector<T> dirichlet_convolve(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dirichlet_convolve: sequences must have equal length");
  }
  if (a.size() < 2) {
    throw std::invalid_argument("dirichlet_convolve: sequences must cover at least n = 1");
  }
  const std::size_t n = a.size() - 1;
  std::vector<T> out(a.size(), T{});
  for (std::size_t d = 1; d <= n; ++d) {
    for (std::size_t q = 1; d * q <= n; ++q) {
      out[d * q] += a[d] * b[q];
    }
  }
  return out;
}

// A multiplicative function given by its values on prime powers. The value
// at 1 is implicitly 1. When completely_multiplicative is set,
// value_at_prime_power(p, e) must equal value_at_prime_power(p, 1)^e, and
// Euler-product evaluation may use the closed geometric form.
struct MultiplicativeSpec {
  std::string name;
  std::function<double(std::uint64_t prime, std::uint32_t exponent)> value_at_prime_power;
  bool completely_multiplicative = false;
};

/// Evaluates spec on a factored integer: product over prime powers, 1 on empty.
double eval_multiplicative(const MultiplicativeSpec& spec, const Factorization& f);

namespace specs {

MultiplicativeSpec one();
MultiplicativeSpec moebius();
MultiplicativeSpec chi4();       // 0 on evens, (-1)^n at 2n+1
MultiplicativeSpec identity();   // n itself
MultiplicativeSpec squarefree_indicator();  // mu^2

}  // namespace specs

}  // namespace zetalaw
