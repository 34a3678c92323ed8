#include "zetalaw/zeta.hpp"

#include <cmath>
#include <stdexcept>

namespace zetalaw {

double zeta_value(double s, double tolerance) {
  if (!(s > 1.0)) throw std::invalid_argument("zeta_value: requires s > 1");
  if (!(tolerance > 0.0)) throw std::invalid_argument("zeta_value: tolerance must be positive");

  // Direct sum to K plus the Euler-Maclaurin tail at a = K + 1:
  //   sum_{k>K} k^-s = a^(1-s)/(s-1) + a^-s/2 + s a^-(s+1)/12 + R,
  //   |R| <= s(s+1)(s+2) a^-(s+3)/720.
  std::uint64_t k_terms = 16;
  const double coef = s * (s + 1.0) * (s + 2.0) / 720.0;
  while (coef * std::pow(static_cast<double>(k_terms + 1), -(s + 3.0)) > tolerance / 2.0) {
    k_terms *= 2;
    if (k_terms > (1ULL << 26))
      throw std::invalid_argument("zeta_value: tolerance unreachable for this s");
  }

  long double sum = 0.0L;
  for (std::uint64_t k = k_terms; k >= 1; --k)
    sum += std::pow(static_cast<long double>(k), static_cast<long double>(-s));
  const long double a = static_cast<long double>(k_terms + 1);
  sum += std::pow(a, 1.0L - static_cast<long double>(s)) / (static_cast<long double>(s) - 1.0L);
  sum += std::pow(a, -static_cast<long double>(s)) / 2.0L;
  sum += static_cast<long double>(s) * std::pow(a, -static_cast<long double>(s) - 1.0L) / 12.0L;
  return static_cast<double>(sum);
}

namespace {

// Cohen-Villegas-Zagier acceleration of sum (-1)^k a_k for totally monotone
// a_k; here a_k = (2k+1)^-s. Error after n terms is below about 2/(3+sqrt8)^n
// times the sum, so a handful of terms buys machine precision.
long double beta_accelerated(double s, int n) {
  long double d = std::pow(3.0L + std::sqrt(8.0L), n);
  d = (d + 1.0L / d) / 2.0L;
  long double b = -1.0L;
  long double c = -d;
  long double acc = 0.0L;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    acc += c * std::pow(static_cast<long double>(2 * k + 1), static_cast<long double>(-s));
    b *= (k + n) * (k - n) / ((k + 0.5L) * (k + 1.0L));
  }
  return acc / d;
}

}  // namespace

double dirichlet_beta(double s, double tolerance) {
  if (!(s > 0.0)) throw std::invalid_argument("dirichlet_beta: requires s > 0");
  if (!(tolerance > 0.0))
    throw std::invalid_argument("dirichlet_beta: tolerance must be positive");

  const double log_rate = std::log(3.0 + std::sqrt(8.0));
  int n = static_cast<int>(std::ceil(std::log(4.0 / tolerance) / log_rate)) + 2;
  if (n < 8) n = 8;
  // Self-check: the n-term and (n+8)-term evaluations must have stabilized.
  for (int attempt = 0; attempt < 4; ++attempt, n += 8) {
    const long double v1 = beta_accelerated(s, n);
    const long double v2 = beta_accelerated(s, n + 8);
    if (std::fabs(v2 - v1) <= static_cast<long double>(tolerance) / 2.0L)
      return static_cast<double>(v2);
  }
  throw std::runtime_error("dirichlet_beta: acceleration failed to stabilize");
}

ZetaLaw::ZetaLaw(double s_param, double tolerance) : s(s_param), series_tolerance(tolerance) {
  if (!(s_param > 1.0)) throw std::invalid_argument("ZetaLaw: requires s > 1");
  zeta_s = zeta_value(s_param, tolerance);
}

double pmf(const ZetaLaw& law, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("pmf: n >= 1");
  return std::pow(static_cast<double>(n), -law.s) / law.zeta_s;
}

double divisibility_prob(const ZetaLaw& law, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("divisibility_prob: n >= 1");
  return std::pow(static_cast<double>(n), -law.s);
}

std::uint64_t sample(const ZetaLaw& law, Rng& rng) {
  if (law.s < kMinProductS)
    throw std::domain_error("sample: s below 1.01 refused (degenerate law)");
  // Devroye's rejection scheme for the Zipf tail: invert the Pareto
  // envelope, accept with the ratio of the discrete pmf to the envelope.
  const double sm1 = law.s - 1.0;
  const double b = std::pow(2.0, sm1);
  for (;;) {
    const double u = 1.0 - uniform_double(rng);  // (0, 1]
    const double v = uniform_double(rng);
    const double xd = std::floor(std::pow(u, -1.0 / sm1));
    if (!(xd >= 1.0) || xd >= 9.0e18) continue;  // redraw: out of 64-bit range
    const std::uint64_t x = static_cast<std::uint64_t>(xd);
    const double t = std::pow(1.0 + 1.0 / xd, sm1);
    if (v * xd * (t - 1.0) / (b - 1.0) <= t / b) return x;
  }
}

ValuationVector sample_by_valuations(const ZetaLaw& law, std::uint64_t prime_bound,
                                     const PrimeTable& table, Rng& rng) {
  if (prime_bound < 2)
    throw std::invalid_argument("sample_by_valuations: prime_bound >= 2");
  if (prime_bound > table.limit)
    throw std::invalid_argument("sample_by_valuations: prime_bound exceeds table limit");

  ValuationVector out;
  out.prime_bound = prime_bound;
  for (std::uint32_t p : table.primes) {
    if (p > prime_bound) break;
    // 1 + exponent is geometric(1 - p^-s): invert P(exponent >= a) = p^-as.
    const double u = 1.0 - uniform_double(rng);  // (0, 1]
    const std::uint32_t e =
        static_cast<std::uint32_t>(std::floor(std::log(u) / (-law.s * std::log(p))));
    if (e == 0) continue;
    out.exponents.emplace_back(p, e);
    if (!out.overflow) {
      for (std::uint32_t i = 0; i < e && !out.overflow; ++i) {
        if (out.value > UINT64_MAX / p) {
          out.overflow = true;
          out.value = 1;
        } else {
          out.value *= p;
        }
      }
    }
  }
  return out;
}

double euler_product_inv_zeta(double s, const PrimeTable& table) {
  if (s < kMinProductS)
    throw std::invalid_argument("euler_product_inv_zeta: s below 1.01 refused");
  long double prod = 1.0L;
  for (std::uint32_t p : table.primes)
    prod *= 1.0L - std::pow(static_cast<long double>(p), static_cast<long double>(-s));
  return static_cast<double>(prod);
}

namespace {

// Inner factor sum_{j=0..inner_terms} p^-sj phi(p^j), with a divergence
// guard: three successive terms growing in absolute value aborts.
long double inner_series(const MultiplicativeSpec& spec, double s, std::uint64_t p,
                         std::uint32_t inner_terms) {
  long double acc = 1.0L;  // j = 0 term, phi(1) = 1
  const long double step = std::pow(static_cast<long double>(p), static_cast<long double>(-s));
  long double weight = 1.0L;
  long double prev1 = 1.0L, prev2 = HUGE_VALL;
  for (std::uint32_t j = 1; j <= inner_terms; ++j) {
    weight *= step;
    const long double term =
        weight * static_cast<long double>(spec.value_at_prime_power(p, j));
    const long double mag = std::fabs(term);
    if (mag > prev1 && prev1 > prev2)
      throw std::runtime_error("euler_product_multiplicative: inner series diverges at p=" +
                               std::to_string(p));
    acc += term;
    prev2 = prev1;
    prev1 = mag;
  }
  return acc;
}

}  // namespace

double euler_product_multiplicative(const MultiplicativeSpec& spec, double s,
                                    const PrimeTable& table, std::uint32_t inner_terms) {
  if (s < kMinProductS)
    throw std::invalid_argument("euler_product_multiplicative: s below 1.01 refused");
  if (inner_terms < 1)
    throw std::invalid_argument("euler_product_multiplicative: inner_terms >= 1");

  long double prod = 1.0L;
  for (std::uint32_t p : table.primes) {
    if (spec.completely_multiplicative) {
      const long double r = std::pow(static_cast<long double>(p), static_cast<long double>(-s)) *
                            static_cast<long double>(spec.value_at_prime_power(p, 1));
      if (std::fabs(r) >= 1.0L)
        throw std::runtime_error("euler_product_multiplicative: inner series diverges at p=" +
                                 std::to_string(p));
      prod *= 1.0L / (1.0L - r);
    } else {
      prod *= inner_series(spec, s, p, inner_terms);
    }
  }
  return static_cast<double>(prod);
}

double expected_multiplicative(const MultiplicativeSpec& spec, const ZetaLaw& law,
                               const PrimeTable& table, std::uint32_t inner_terms) {
  if (law.s < kMinProductS)
    throw std::invalid_argument("expected_multiplicative: s below 1.01 refused");
  if (inner_terms < 1)
    throw std::invalid_argument("expected_multiplicative: inner_terms >= 1");

  // E[phi(X)] = prod_p E[phi(p^(nu_p))] = prod_p (1 - p^-s) sum_j p^-sj phi(p^j).
  long double prod = 1.0L;
  for (std::uint32_t p : table.primes) {
    const long double q = std::pow(static_cast<long double>(p), static_cast<long double>(-law.s));
    long double factor;
    if (spec.completely_multiplicative) {
      const long double r = q * static_cast<long double>(spec.value_at_prime_power(p, 1));
      if (std::fabs(r) >= 1.0L)
        throw std::runtime_error("expected_multiplicative: inner series diverges at p=" +
                                 std::to_string(p));
      factor = (1.0L - q) / (1.0L - r);
    } else {
      factor = (1.0L - q) * inner_series(spec, law.s, p, inner_terms);
    }
    prod *= factor;
  }
  return static_cast<double>(prod);
}

SparsePmf<std::uint64_t> truncated_pmf(const ZetaLaw& law, std::uint64_t support_limit) {
  if (support_limit < 1) throw std::invalid_argument("truncated_pmf: support_limit >= 1");
  SparsePmf<std::uint64_t> out;
  long double total = 0.0L;
  for (std::uint64_t n = 1; n <= support_limit; ++n) {
    const double m = pmf(law, n);
    out.mass[n] = m;
    total += m;
  }
  out.deficiency = static_cast<double>(std::max(0.0L, 1.0L - total));
  return out;
}

}  // namespace zetalaw
