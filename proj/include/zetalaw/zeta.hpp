#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "zetalaw/core.hpp"
#include "zetalaw/pmf.hpp"
#include "zetalaw/rng.hpp"

namespace zetalaw {

// Samplers and Euler products refuse s below this: the law degenerates as
// s -> 1 (the normalizer blows up) and rejection costs grow without bound.
inline constexpr double kMinProductS = 1.01;

/// zeta(s) = sum k^-s by direct summation plus Euler-Maclaurin tail
/// correction, with absolute error certified below `tolerance`.
double zeta_value(double s, double tolerance);

/// Dirichlet beta(s) = sum (-1)^n (2n+1)^-s, for s > 0, via accelerated
/// alternating summation with error certified below `tolerance`.
double dirichlet_beta(double s, double tolerance);

// The law on positive integers with mass n^-s / zeta(s).
struct ZetaLaw {
  double s = 2.0;
  double zeta_s = 0.0;           // precomputed normalizer
  double series_tolerance = 0.0; // certified error of zeta_s

  explicit ZetaLaw(double s_param, double tolerance = 1e-13);
};

/// Mass of n: n^-s / zeta(s).
double pmf(const ZetaLaw& law, std::uint64_t n);

/// P(n | X) = n^-s, exactly.
double divisibility_prob(const ZetaLaw& law, std::uint64_t n);

// Exact Zeta(s) draw by rejection from a Pareto-type envelope. Expected
// O(1) rejections for s >= 1.5; the acceptance rate degrades as s -> 1.
// Candidates that do not fit in 64 bits are redrawn, so strictly speaking
// the law is conditioned on X < 2^63 (defect below 4e-10 for s >= 1.5).
std::uint64_t sample(const ZetaLaw& law, Rng& rng);

// Truncated valuation representation of a Zeta draw: independent exponents
// at each prime p <= prime_bound, with 1 + exponent geometric of parameter
// 1 - p^-s. Primes above prime_bound are forced to exponent zero, so the
// reconstructed value follows the Zeta law only approximately.
struct ValuationVector {
  std::uint64_t prime_bound = 0;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> exponents;  // nonzero only
  bool overflow = false;      // reconstructed value exceeds 64 bits
  std::uint64_t value = 1;    // product of p^e_p; meaningless if overflow
};

ValuationVector sample_by_valuations(const ZetaLaw& law, std::uint64_t prime_bound,
                                     const PrimeTable& table, Rng& rng);

/// Truncated Euler product prod_{p <= table.limit} (1 - p^-s) -> 1/zeta(s).
double euler_product_inv_zeta(double s, const PrimeTable& table);

// Euler product of a Dirichlet series: prod over primes p <= table.limit of
// sum_{j <= inner_terms} p^-sj phi(p^j), or of the closed geometric form
// 1/(1 - p^-s phi(p)) when the spec is completely multiplicative. Throws
// when the inner series visibly diverges (three successive growing terms).
double euler_product_multiplicative(const MultiplicativeSpec& spec, double s,
                                    const PrimeTable& table, std::uint32_t inner_terms);

/// E[phi(X)] under the Zeta law: prod_p (1 - p^-s) sum_j p^-sj phi(p^j),
/// truncated like euler_product_multiplicative.
double expected_multiplicative(const MultiplicativeSpec& spec, const ZetaLaw& law,
                               const PrimeTable& table, std::uint32_t inner_terms);

/// Exact pmf restricted to {1..support_limit}; the tail goes to deficiency.
SparsePmf<std::uint64_t> truncated_pmf(const ZetaLaw& law, std::uint64_t support_limit);

}  // namespace zetalaw
