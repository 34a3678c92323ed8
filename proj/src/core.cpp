#include "zetalaw/core.hpp"

#include <algorithm>
#include <cmath>

namespace zetalaw {

namespace {
constexpr std::uint64_t kMaxSieveLimit = std::uint64_t{1} << 31;
}

PrimeTable sieve(std::uint64_t limit) {
  if (limit < 2) throw std::invalid_argument("sieve: limit must be at least 2");
  if (limit > kMaxSieveLimit) throw std::invalid_argument("sieve: limit exceeds 2^31");

  PrimeTable table;
  table.limit = limit;
  table.smallest_factor.assign(limit + 1, 0);

  // Linear sieve: each composite is struck exactly once, by its least prime factor.
  auto& spf = table.smallest_factor;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<std::uint32_t>(i);
      table.primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : table.primes) {
      if (p > spf[i] || i * p > limit) break;
      spf[i * p] = p;
    }
  }
  return table;
}

Factorization factorize(std::uint64_t n, const PrimeTable& table) {
  if (!table.contains(n)) {
    throw std::invalid_argument("factorize: n must satisfy 1 <= n <= table.limit");
  }
  Factorization f;
  f.value = n;
  std::uint64_t x = n;
  while (x > 1) {
    const std::uint64_t p = table.smallest_factor[x];
    std::uint32_t e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  return f;
}

int moebius(std::uint64_t n, const PrimeTable& table) {
  const Factorization f = factorize(n, table);
  int sign = 1;
  for (const auto& pp : f.factors) {
    if (pp.exponent >= 2) return 0;
    sign = -sign;
  }
  return sign;
}

std::vector<std::int8_t> moebius_upto(std::uint64_t n, const PrimeTable& table) {
  if (n > table.limit) {
    throw std::invalid_argument("moebius_upto: n exceeds table.limit");
  }
  std::vector<std::int8_t> mu(n + 1, 0);
  if (n >= 1) mu[1] = 1;
  for (std::uint64_t k = 2; k <= n; ++k) {
    const std::uint64_t p = table.smallest_factor[k];
    const std::uint64_t q = k / p;
    // mu(k) = 0 if p | q (square factor), else -mu(q)
    mu[k] = (q % p == 0) ? std::int8_t{0} : static_cast<std::int8_t>(-mu[q]);
  }
  return mu;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::uint32_t valuation(std::uint64_t p, std::uint64_t n) {
  if (!is_prime(p)) throw std::invalid_argument("valuation: p must be prime");
  if (n == 0) throw std::invalid_argument("valuation: n must be positive");
  std::uint32_t e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::uint64_t power_radical(std::uint32_t m, std::uint64_t n, const PrimeTable& table) {
  if (m < 2) throw std::invalid_argument("power_radical: m must be at least 2");
  const Factorization f = factorize(n, table);
  std::uint64_t r = 1;
  for (const auto& pp : f.factors) {
    r = checked_mul(r, checked_pow(pp.prime, pp.exponent / m));
  }
  return r;
}

double eval_multiplicative(const MultiplicativeSpec& spec, const Factorization& f) {
  double v = 1.0;
  for (const auto& pp : f.factors) {
    v *= spec.value_at_prime_power(pp.prime, pp.exponent);
  }
  return v;
}

namespace specs {

MultiplicativeSpec one() {
  return {"one", [](std::uint64_t, std::uint32_t) { return 1.0; }, true};
}

MultiplicativeSpec moebius() {
  return {"mobius",
          [](std::uint64_t, std::uint32_t e) { return e == 1 ? -1.0 : 0.0; },
          false};
}

MultiplicativeSpec chi4() {
  return {"chi4",
          [](std::uint64_t p, std::uint32_t e) -> double {
            if (p % 2 == 0) return 0.0;
            if (p % 4 == 1) return 1.0;
            return (e % 2 == 0) ? 1.0 : -1.0;  // (-1)^e
          },
          true};
}

MultiplicativeSpec identity() {
  return {"identity",
          [](std::uint64_t p, std::uint32_t e) {
            return std::pow(static_cast<double>(p), static_cast<double>(e));
          },
          true};
}

MultiplicativeSpec squarefree_indicator() {
  return {"squarefree",
          [](std::uint64_t, std::uint32_t e) { return e == 1 ? 1.0 : 0.0; },
          false};
}

}  // namespace specs

}  // namespace zetalaw
