#include "zetalaw/densities.hpp"

#include <numeric>
#include <stdexcept>

namespace zetalaw {

namespace {

void check_range(std::uint64_t n, std::uint32_t m, const PrimeTable& table, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n >= 1");
  if (m < 2) throw std::invalid_argument(std::string(who) + ": m >= 2");
  if (n > table.limit)
    throw std::invalid_argument(std::string(who) + ": n exceeds sieve limit");
}

// sum_{k<=q} mu(k) floor(q/k)^m with a precomputed mu array covering 1..q.
__int128 tuple_count_from_mu(std::uint64_t q, std::uint32_t m,
                             const std::vector<std::int8_t>& mu) {
  __int128 acc = 0;
  for (std::uint64_t k = 1; k <= q; ++k) {
    if (mu[k] == 0) continue;
    const std::uint64_t base = q / k;
    std::uint64_t power = base;
    for (std::uint32_t i = 1; i < m; ++i) power *= base;  // <= q^m, checked by caller
    acc += mu[k] > 0 ? static_cast<__int128>(power) : -static_cast<__int128>(power);
  }
  return acc;
}

}  // namespace

std::uint64_t coprime_tuple_count(std::uint64_t n, std::uint32_t m, const PrimeTable& table) {
  check_range(n, m, table, "coprime_tuple_count");
  checked_pow(n, m);  // reject ranges whose counts cannot be exact in 64 bits
  const std::vector<std::int8_t> mu = moebius_upto(n, table);
  const __int128 acc = tuple_count_from_mu(n, m, mu);
  if (acc < 0 || acc > static_cast<__int128>(UINT64_MAX))
    throw std::overflow_error("coprime_tuple_count: count out of 64-bit range");
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t coprime_pair_count(std::uint64_t n, const PrimeTable& table) {
  return coprime_tuple_count(n, 2, table);
}

double coprime_density_exact(std::uint64_t n, std::uint32_t m, const PrimeTable& table) {
  const std::uint64_t count = coprime_tuple_count(n, m, table);
  return static_cast<double>(static_cast<long double>(count) /
                             static_cast<long double>(checked_pow(n, m)));
}

std::uint64_t mfree_count(std::uint64_t n, std::uint32_t m, const PrimeTable& table) {
  check_range(n, m, table, "mfree_count");
  std::int64_t acc = 0;
  for (std::uint64_t k = 1;; ++k) {
    std::uint64_t km = 1;
    bool over = false;
    for (std::uint32_t i = 0; i < m; ++i) {
      if (km > n / k) { over = true; break; }
      km *= k;
    }
    if (over || km > n) break;
    const int mu = moebius(k, table);
    acc += mu * static_cast<std::int64_t>(n / km);
  }
  return static_cast<std::uint64_t>(acc);
}

double mfree_density_exact(std::uint64_t n, std::uint32_t m, const PrimeTable& table) {
  return static_cast<double>(static_cast<long double>(mfree_count(n, m, table)) /
                             static_cast<long double>(n));
}

SparsePmf<std::uint64_t> gcd_law_exact(std::uint64_t n, std::uint32_t m,
                                       const PrimeTable& table) {
  check_range(n, m, table, "gcd_law_exact");
  const std::uint64_t n_pow_m = checked_pow(n, m);
  const std::vector<std::int8_t> mu = moebius_upto(n, table);

  // P(Z_n = d) = (#coprime m-tuples of {1..floor(n/d)}^m) / n^m.
  SparsePmf<std::uint64_t> law;
  const long double denom = static_cast<long double>(n_pow_m);
  for (std::uint64_t d = 1; d <= n; ++d) {
    const __int128 count = tuple_count_from_mu(n / d, m, mu);
    law.mass[d] = static_cast<double>(static_cast<long double>(count) / denom);
  }
  return law;
}

SparsePmf<std::uint64_t> radical_law_exact(std::uint64_t n, std::uint32_t m,
                                           const PrimeTable& table) {
  check_range(n, m, table, "radical_law_exact");
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t k = 1; k <= n; ++k) ++counts[power_radical(m, k, table)];

  SparsePmf<std::uint64_t> law;
  for (const auto& [a, c] : counts)
    law.mass[a] = static_cast<double>(static_cast<long double>(c) / static_cast<long double>(n));
  return law;
}

double cesaro_gap(std::uint64_t n, std::uint32_t m, const PrimeTable& table) {
  return tv_distance(gcd_law_exact(n, m, table), radical_law_exact(n, m, table)).scalar();
}

std::uint64_t mc_coprime_successes(std::uint64_t n, std::uint32_t m,
                                   std::uint64_t samples, Rng& rng) {
  if (n < 1) throw std::invalid_argument("mc_coprime_successes: n >= 1");
  if (m < 2) throw std::invalid_argument("mc_coprime_successes: m >= 2");
  if (samples < 1) throw std::invalid_argument("mc_coprime_successes: samples >= 1");
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    std::uint64_t g = 0;
    for (std::uint32_t j = 0; j < m; ++j) g = std::gcd(g, uniform_int(rng, 1, n));
    if (g == 1) ++hits;
  }
  return hits;
}

MonteCarloEstimate mc_coprime_density(std::uint64_t n, std::uint32_t m,
                                      std::uint64_t samples, Rng& rng) {
  return binomial_estimate(mc_coprime_successes(n, m, samples, rng), samples);
}

}  // namespace zetalaw
