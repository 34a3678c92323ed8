#include "zetalaw/gauss.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace zetalaw {

namespace {

constexpr std::int64_t kComponentBound = std::int64_t{1} << 31;

void check_component_range(const GaussInt& z, const char* who) {
  if (z.re > kComponentBound || z.re < -kComponentBound || z.im > kComponentBound ||
      z.im < -kComponentBound)
    throw std::overflow_error(std::string(who) + ": component beyond 2^31");
}

// Round num/den to the nearest integer, ties to the even quotient. den > 0.
std::int64_t round_half_even(__int128 num, __int128 den) {
  __int128 q = num / den;
  __int128 r = num % den;
  if (r < 0) { q -= 1; r += den; }  // floor division
  const __int128 twice = 2 * r;
  if (twice > den || (twice == den && (q & 1))) q += 1;
  return static_cast<std::int64_t>(q);
}

}  // namespace

std::uint64_t gauss_norm(const GaussInt& z) {
  const unsigned __int128 n =
      static_cast<unsigned __int128>(static_cast<__int128>(z.re) * z.re) +
      static_cast<unsigned __int128>(static_cast<__int128>(z.im) * z.im);
  if (n > UINT64_MAX) throw std::overflow_error("gauss_norm: norm out of 64-bit range");
  return static_cast<std::uint64_t>(n);
}

GaussInt gauss_mul(const GaussInt& a, const GaussInt& b) {
  const __int128 re = static_cast<__int128>(a.re) * b.re - static_cast<__int128>(a.im) * b.im;
  const __int128 im = static_cast<__int128>(a.re) * b.im + static_cast<__int128>(a.im) * b.re;
  if (re > INT64_MAX || re < INT64_MIN || im > INT64_MAX || im < INT64_MIN)
    throw std::overflow_error("gauss_mul: product out of 64-bit range");
  return GaussInt{static_cast<std::int64_t>(re), static_cast<std::int64_t>(im)};
}

GaussClass canonicalize(const GaussInt& z) {
  if (z.is_zero()) throw std::invalid_argument("canonicalize: zero has no class");
  GaussInt w = z;
  for (int k = 0; k < 4; ++k) {
    if (w.re >= 0 && w.im >= 1) return GaussClass{w.re, w.im};
    w = GaussInt{-w.im, w.re};  // multiply by i
  }
  throw std::logic_error("canonicalize: no rotation found");  // unreachable
}

bool gauss_divides(const GaussInt& d, const GaussInt& x) {
  if (d.is_zero()) throw std::invalid_argument("gauss_divides: zero divisor");
  // d | x iff N(d) divides both components of x * conj(d).
  const __int128 n = static_cast<__int128>(gauss_norm(d));
  const __int128 re = static_cast<__int128>(x.re) * d.re + static_cast<__int128>(x.im) * d.im;
  const __int128 im = static_cast<__int128>(x.im) * d.re - static_cast<__int128>(x.re) * d.im;
  return re % n == 0 && im % n == 0;
}

GaussClass gauss_gcd(const GaussInt& z, const GaussInt& w) {
  if (z.is_zero() && w.is_zero())
    throw std::invalid_argument("gauss_gcd: gcd(0, 0) undefined");
  // With inputs bounded by 2^31 every intermediate below stays in range:
  // norms never grow along the Euclidean descent.
  check_component_range(z, "gauss_gcd");
  check_component_range(w, "gauss_gcd");
  GaussInt u = z, v = w;
  while (!v.is_zero()) {
    // Euclidean step: u mod v with the rounded quotient, N(r) <= N(v)/2.
    const __int128 n = static_cast<__int128>(gauss_norm(v));
    const __int128 num_re =
        static_cast<__int128>(u.re) * v.re + static_cast<__int128>(u.im) * v.im;
    const __int128 num_im =
        static_cast<__int128>(u.im) * v.re - static_cast<__int128>(u.re) * v.im;
    const GaussInt q{round_half_even(num_re, n), round_half_even(num_im, n)};
    const GaussInt qv = gauss_mul(q, v);
    const GaussInt r{u.re - qv.re, u.im - qv.im};
    u = v;
    v = r;
  }
  return canonicalize(u);
}

std::uint64_t sum_two_squares_count(std::uint64_t n, const PrimeTable& table) {
  const Factorization f = factorize(n, table);
  std::uint64_t s = 1;
  for (const PrimePower& pp : f.factors) {
    if (pp.prime == 2) continue;                       // factor 1
    if (pp.prime % 4 == 1) s *= pp.exponent + 1;
    else if (pp.exponent % 2 == 1) return 0;           // p = 3 mod 4, odd power
  }
  return s;
}

MultiplicativeSpec sum_two_squares_spec() {
  MultiplicativeSpec spec;
  spec.name = "sum-two-squares";
  spec.value_at_prime_power = [](std::uint64_t p, std::uint32_t e) -> double {
    if (p == 2) return 1.0;
    if (p % 4 == 1) return static_cast<double>(e + 1);
    return e % 2 == 0 ? 1.0 : 0.0;
  };
  spec.completely_multiplicative = false;
  return spec;
}

std::vector<GaussClass> classes_of_norm(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("classes_of_norm: n >= 1");
  std::vector<GaussClass> out;
  for (std::uint64_t a = 0; a * a <= n; ++a) {
    const std::uint64_t bb = n - a * a;
    if (bb == 0) break;
    std::uint64_t b = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(bb)));
    while (b * b > bb) --b;
    while ((b + 1) * (b + 1) <= bb) ++b;
    if (b >= 1 && b * b == bb)
      out.push_back(GaussClass{static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)});
  }
  return out;
}

bool unique_coprime_splitting_check(const GaussClass& cls, std::uint64_t a, std::uint64_t b) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("unique_coprime_splitting_check: norms >= 1");
  if (std::gcd(a, b) != 1)
    throw std::invalid_argument("unique_coprime_splitting_check: norms not coprime");
  if (cls.norm() != checked_mul(a, b))
    throw std::invalid_argument("unique_coprime_splitting_check: norm mismatch");

  std::uint64_t found = 0;
  for (const GaussClass& x : classes_of_norm(a))
    for (const GaussClass& y : classes_of_norm(b))
      if (canonicalize(gauss_mul(x.rep(), y.rep())) == cls) ++found;
  return found == 1;
}

std::vector<GaussClass> ball_classes(double r) {
  if (!(r >= 1.0)) throw std::invalid_argument("ball_classes: r >= 1");
  // ~0.79 r^2 classes; the cap keeps the materialized ball desk-scale.
  if (r > 4096.0) throw std::invalid_argument("ball_classes: radius beyond 4096");
  const long double r2 = static_cast<long double>(r) * static_cast<long double>(r);
  std::vector<GaussClass> out;
  for (std::uint64_t a = 0; static_cast<long double>(a) * a <= r2; ++a) {
    for (std::uint64_t b = 1;; ++b) {
      const std::uint64_t norm = a * a + b * b;
      if (static_cast<long double>(norm) > r2) break;
      out.push_back(GaussClass{static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)});
    }
  }
  return out;
}

double zeta_prime_pmf(double s, const GaussClass& cls, double normalizer) {
  if (!(s > 1.0)) throw std::invalid_argument("zeta_prime_pmf: requires s > 1");
  if (!(normalizer > 0.0)) throw std::invalid_argument("zeta_prime_pmf: bad normalizer");
  return std::pow(static_cast<double>(cls.norm()), -s) / normalizer;
}

const std::vector<GaussClass>& gauss_profile_classes() {
  static const std::vector<GaussClass> classes = {
      GaussClass{1, 1}, GaussClass{0, 2}, GaussClass{1, 2},
      GaussClass{2, 1}, GaussClass{0, 3},
  };
  return classes;
}

GaussCoprimeCounts gauss_coprime_counts(const std::vector<GaussClass>& ball,
                                        std::uint64_t samples, Rng& rng) {
  if (ball.empty()) throw std::invalid_argument("gauss_coprime_counts: empty ball");
  if (samples < 1) throw std::invalid_argument("gauss_coprime_counts: samples >= 1");
  const auto& profile = gauss_profile_classes();
  GaussCoprimeCounts counts;
  counts.divisible.assign(profile.size(), 0);
  counts.samples = samples;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const GaussClass& x = ball[uniform_u64_below(rng, ball.size())];
    const GaussClass& y = ball[uniform_u64_below(rng, ball.size())];
    const GaussClass g = gauss_gcd(x.rep(), y.rep());
    if (g == kUnitClass) ++counts.unit;
    for (std::size_t k = 0; k < profile.size(); ++k)
      if (class_divides(profile[k], g)) ++counts.divisible[k];
  }
  return counts;
}

GaussCoprimeResult gauss_coprime_experiment(std::uint64_t n, std::uint64_t samples,
                                            Rng& rng) {
  if (n < 2) throw std::invalid_argument("gauss_coprime_experiment: n >= 2");
  const std::vector<GaussClass> ball = ball_classes(static_cast<double>(n));
  const GaussCoprimeCounts counts = gauss_coprime_counts(ball, samples, rng);

  GaussCoprimeResult result;
  result.ball_size = ball.size();
  result.unit_frequency = binomial_estimate(counts.unit, samples);
  const auto& profile = gauss_profile_classes();
  for (std::size_t k = 0; k < profile.size(); ++k)
    result.divisor_profile.emplace_back(profile[k],
                                        binomial_estimate(counts.divisible[k], samples));
  return result;
}

}  // namespace zetalaw
