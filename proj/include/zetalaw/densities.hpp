#pragma once

#include <cstdint>

#include "zetalaw/core.hpp"
#include "zetalaw/montecarlo.hpp"
#include "zetalaw/pmf.hpp"
#include "zetalaw/rng.hpp"

namespace zetalaw {

/// Number of m-tuples in {1..n}^m with gcd 1, by the sieve identity
/// sum_k mu(k) floor(n/k)^m. Requires n^m to fit in 64 bits.
std::uint64_t coprime_tuple_count(std::uint64_t n, std::uint32_t m, const PrimeTable& table);

/// coprime_tuple_count for pairs (m = 2).
std::uint64_t coprime_pair_count(std::uint64_t n, const PrimeTable& table);

/// P(gcd of m independent uniforms on {1..n} is 1), exactly.
double coprime_density_exact(std::uint64_t n, std::uint32_t m, const PrimeTable& table);

/// Number of m-free integers in {1..n} (no prime-power divisor p^m).
std::uint64_t mfree_count(std::uint64_t n, std::uint32_t m, const PrimeTable& table);

/// mfree_count / n.
double mfree_density_exact(std::uint64_t n, std::uint32_t m, const PrimeTable& table);

/// Exact law of Z_n = gcd of m independent uniforms on {1..n}.
SparsePmf<std::uint64_t> gcd_law_exact(std::uint64_t n, std::uint32_t m,
                                       const PrimeTable& table);

/// Exact law of W_n = r_m(X) for X uniform on {1..n}.
SparsePmf<std::uint64_t> radical_law_exact(std::uint64_t n, std::uint32_t m,
                                           const PrimeTable& table);

/// Total variation distance between the laws of Z_n and W_n; tends to 0.
double cesaro_gap(std::uint64_t n, std::uint32_t m, const PrimeTable& table);

/// Number of uniform m-tuples on {1..n}^m with gcd 1 among `samples` draws.
std::uint64_t mc_coprime_successes(std::uint64_t n, std::uint32_t m,
                                   std::uint64_t samples, Rng& rng);

/// Monte Carlo coprime density with binomial standard error.
MonteCarloEstimate mc_coprime_density(std::uint64_t n, std::uint32_t m,
                                      std::uint64_t samples, Rng& rng);

}  // namespace zetalaw
