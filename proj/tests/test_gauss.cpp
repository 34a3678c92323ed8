#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "zetalaw/core.hpp"
#include "zetalaw/gauss.hpp"
#include "zetalaw/rng.hpp"
#include "zetalaw/zeta.hpp"

using namespace zetalaw;

TEST_CASE("norm and multiplication") {
  CHECK(gauss_norm(GaussInt{3, 4}) == 25);
  CHECK(gauss_norm(GaussInt{0, 0}) == 0);
  CHECK(gauss_mul(GaussInt{1, 1}, GaussInt{1, -1}) == GaussInt{2, 0});
  CHECK(gauss_mul(GaussInt{0, 1}, GaussInt{0, 1}) == GaussInt{-1, 0});

  Rng rng = make_rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const GaussInt a{static_cast<std::int64_t>(uniform_int(rng, 0, 2000)) - 1000,
                     static_cast<std::int64_t>(uniform_int(rng, 0, 2000)) - 1000};
    const GaussInt b{static_cast<std::int64_t>(uniform_int(rng, 0, 2000)) - 1000,
                     static_cast<std::int64_t>(uniform_int(rng, 0, 2000)) - 1000};
    REQUIRE(gauss_norm(gauss_mul(a, b)) == gauss_norm(a) * gauss_norm(b));
  }

  const std::int64_t big = std::int64_t{1} << 62;
  CHECK_THROWS_AS(gauss_mul(GaussInt{big, big}, GaussInt{big, big}), std::overflow_error);
}

TEST_CASE("canonical associate classes") {
  CHECK(canonicalize(GaussInt{1, 0}) == GaussClass{0, 1});
  CHECK(canonicalize(GaussInt{1, 0}) == kUnitClass);
  CHECK(canonicalize(GaussInt{1, 1}) == GaussClass{1, 1});
  CHECK(canonicalize(GaussInt{2, 0}) == GaussClass{0, 2});
  CHECK(canonicalize(GaussInt{0, -3}) == GaussClass{0, 3});

  Rng rng = make_rng(13);
  for (int trial = 0; trial < 2000; ++trial) {
    GaussInt z{static_cast<std::int64_t>(uniform_int(rng, 0, 200)) - 100,
               static_cast<std::int64_t>(uniform_int(rng, 0, 200)) - 100};
    if (z.is_zero()) z.re = 1;
    const GaussClass c = canonicalize(z);
    CHECK(c.a >= 0);
    CHECK(c.b >= 1);
    CHECK(c.norm() == gauss_norm(z));
    // all four associates share the class, and rep() round-trips
    GaussInt w = z;
    for (int k = 0; k < 4; ++k) {
      REQUIRE(canonicalize(w) == c);
      w = GaussInt{-w.im, w.re};
    }
    REQUIRE(canonicalize(c.rep()) == c);
  }

  CHECK_THROWS_AS(canonicalize(GaussInt{0, 0}), std::invalid_argument);
}

TEST_CASE("exact divisibility") {
  CHECK(gauss_divides(GaussInt{1, 1}, GaussInt{2, 0}));
  CHECK(gauss_divides(GaussInt{0, 2}, GaussInt{4, 0}));
  CHECK(gauss_divides(GaussInt{1, 2}, GaussInt{5, 0}));
  CHECK_FALSE(gauss_divides(GaussInt{1, 2}, GaussInt{1, 3}));
  CHECK(gauss_divides(GaussInt{1, 2}, GaussInt{0, 0}));
  CHECK_THROWS_AS(gauss_divides(GaussInt{0, 0}, GaussInt{1, 0}), std::invalid_argument);
}

TEST_CASE("gcd, small known values") {
  CHECK(gauss_gcd(GaussInt{5, 0}, GaussInt{1, 2}) == GaussClass{1, 2});
  CHECK(gauss_gcd(GaussInt{3, 0}, GaussInt{7, 0}) == kUnitClass);
  CHECK(gauss_gcd(GaussInt{4, 2}, GaussInt{0, 0}) == canonicalize(GaussInt{4, 2}));
  CHECK(gauss_gcd(GaussInt{0, 0}, GaussInt{4, 2}) == canonicalize(GaussInt{4, 2}));
  CHECK(gauss_gcd(GaussInt{-7, 3}, GaussInt{-7, 3}) == canonicalize(GaussInt{-7, 3}));
  CHECK_THROWS_AS(gauss_gcd(GaussInt{0, 0}, GaussInt{0, 0}), std::invalid_argument);
  const std::int64_t big = (std::int64_t{1} << 31) + 1;
  CHECK_THROWS_AS(gauss_gcd(GaussInt{big, 0}, GaussInt{1, 0}), std::overflow_error);
}

TEST_CASE("gcd against a brute-force maximal common divisor") {
  for (std::int64_t zr = -5; zr <= 5; ++zr)
    for (std::int64_t zi = -5; zi <= 5; ++zi)
      for (std::int64_t wr = -5; wr <= 5; ++wr)
        for (std::int64_t wi = -5; wi <= 5; ++wi) {
          const GaussInt z{zr, zi}, w{wr, wi};
          if (z.is_zero() && w.is_zero()) continue;
          const GaussClass g = gauss_gcd(z, w);
          REQUIRE(gauss_divides(g.rep(), z));
          REQUIRE(gauss_divides(g.rep(), w));
          std::uint64_t best = 0;
          for (std::int64_t dr = -7; dr <= 7; ++dr)
            for (std::int64_t di = -7; di <= 7; ++di) {
              const GaussInt d{dr, di};
              if (d.is_zero()) continue;
              if (gauss_divides(d, z) && gauss_divides(d, w))
                best = std::max(best, gauss_norm(d));
            }
          REQUIRE(g.norm() == best);
        }
}

TEST_CASE("sum of two squares counts") {
  const PrimeTable table = sieve(250000);
  const std::uint64_t expected[12] = {1, 1, 0, 1, 2, 0, 0, 1, 1, 2, 0, 0};
  for (std::uint64_t n = 1; n <= 12; ++n)
    CHECK(sum_two_squares_count(n, table) == expected[n - 1]);
  CHECK(sum_two_squares_count(25, table) == 3);

  // the multiplicative rule against the literal lattice enumeration
  for (std::uint64_t n = 1; n <= 2000; ++n)
    REQUIRE(sum_two_squares_count(n, table) == classes_of_norm(n).size());

  // multiplicative on coprime pairs
  for (std::uint64_t m = 1; m <= 500; ++m)
    for (std::uint64_t n = m + 1; n <= 500; ++n) {
      if (std::gcd(m, n) != 1) continue;
      REQUIRE(sum_two_squares_count(m * n, table) ==
              sum_two_squares_count(m, table) * sum_two_squares_count(n, table));
    }
}

TEST_CASE("sum_two_squares_spec matches the direct count") {
  const PrimeTable table = sieve(5000);
  const MultiplicativeSpec spec = sum_two_squares_spec();
  CHECK(spec.value_at_prime_power(2, 5) == 1.0);
  CHECK(spec.value_at_prime_power(5, 2) == 3.0);
  CHECK(spec.value_at_prime_power(3, 2) == 1.0);
  CHECK(spec.value_at_prime_power(3, 1) == 0.0);
  CHECK_FALSE(spec.completely_multiplicative);
  for (std::uint64_t n = 1; n <= 5000; ++n)
    REQUIRE(eval_multiplicative(spec, factorize(n, table)) ==
            doctest::Approx(static_cast<double>(sum_two_squares_count(n, table)))
                .epsilon(1e-12));
}

TEST_CASE("partial sums of S'(n)/n^2 approach zeta(2)*beta(2) from below") {
  const PrimeTable table = sieve(100000);
  long double acc = 0.0L;
  for (std::uint64_t n = 1; n <= 100000; ++n)
    acc += static_cast<long double>(sum_two_squares_count(n, table)) /
           (static_cast<long double>(n) * static_cast<long double>(n));
  const double partial = static_cast<double>(acc);
  const double limit = zeta_value(2, 1e-12) * dirichlet_beta(2, 1e-12);
  CHECK(partial < limit);
  CHECK(partial > limit - 2e-4);
}

TEST_CASE("unique coprime splitting of classes") {
  for (const GaussClass& cls : classes_of_norm(10)) {
    CHECK(unique_coprime_splitting_check(cls, 2, 5));
    CHECK(unique_coprime_splitting_check(cls, 5, 2));
  }
  CHECK(unique_coprime_splitting_check(GaussClass{1, 2}, 1, 5));
  CHECK(unique_coprime_splitting_check(GaussClass{1, 2}, 5, 1));

  // every class of every representable n <= 500 splits uniquely along every
  // coprime factorization of its norm
  for (std::uint64_t n = 1; n <= 500; ++n)
    for (const GaussClass& cls : classes_of_norm(n))
      for (std::uint64_t a = 1; a <= n; ++a) {
        if (n % a != 0 || std::gcd(a, n / a) != 1) continue;
        REQUIRE(unique_coprime_splitting_check(cls, a, n / a));
      }

  CHECK_THROWS_AS(unique_coprime_splitting_check(GaussClass{0, 2}, 2, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(unique_coprime_splitting_check(GaussClass{1, 2}, 2, 5),
                  std::invalid_argument);
}

TEST_CASE("ball of canonical classes") {
  const auto b1 = ball_classes(1.0);
  REQUIRE(b1.size() == 1);
  CHECK(b1[0] == kUnitClass);

  const auto b2 = ball_classes(2.0);
  REQUIRE(b2.size() == 3);
  CHECK(b2[0] == GaussClass{0, 1});
  CHECK(b2[1] == GaussClass{0, 2});
  CHECK(b2[2] == GaussClass{1, 1});

  const auto b20 = ball_classes(20.0);
  for (std::size_t i = 0; i < b20.size(); ++i) {
    CHECK(b20[i].a >= 0);
    CHECK(b20[i].b >= 1);
    CHECK(b20[i].norm() <= 400);
    if (i > 0) CHECK(b20[i - 1] < b20[i]);
  }

  // 4 * |ball| counts the nonzero lattice points of the disk of radius r
  const double r = 500.0;
  const double ratio = 4.0 * static_cast<double>(ball_classes(r).size()) /
                       (std::acos(-1.0) * r * r);
  CHECK(std::fabs(ratio - 1.0) < 0.02);

  CHECK_THROWS_AS(ball_classes(0.5), std::invalid_argument);
  CHECK_THROWS_AS(ball_classes(5000.0), std::invalid_argument);
}

TEST_CASE("zeta-prime law masses") {
  const double normalizer = zeta_value(2, 1e-12) * dirichlet_beta(2, 1e-12);
  CHECK(zeta_prime_pmf(2, kUnitClass, normalizer) ==
        doctest::Approx(0.6637008046138535).epsilon(1e-10));
  CHECK(zeta_prime_pmf(2, GaussClass{1, 1}, normalizer) ==
        doctest::Approx(0.25 * 0.6637008046138535).epsilon(1e-10));

  // regrouping by norm recovers the S'(n) n^-s profile
  const PrimeTable table = sieve(100);
  for (std::uint64_t n = 1; n <= 50; ++n) {
    double by_class = 0.0;
    for (const GaussClass& cls : classes_of_norm(n))
      by_class += zeta_prime_pmf(2, cls, normalizer);
    const double direct = static_cast<double>(sum_two_squares_count(n, table)) /
                          (static_cast<double>(n) * static_cast<double>(n)) / normalizer;
    REQUIRE(by_class == doctest::Approx(direct).epsilon(1e-12));
  }

  CHECK_THROWS_AS(zeta_prime_pmf(1.0, kUnitClass, normalizer), std::invalid_argument);
  CHECK_THROWS_AS(zeta_prime_pmf(2.0, kUnitClass, 0.0), std::invalid_argument);
}

TEST_CASE("coprimality experiment on the radius-2 ball") {
  // exhaustively: 5 of the 9 ordered class pairs have unit gcd
  const auto ball = ball_classes(2.0);
  int unit_pairs = 0;
  for (const GaussClass& x : ball)
    for (const GaussClass& y : ball)
      if (gauss_gcd(x.rep(), y.rep()) == kUnitClass) ++unit_pairs;
  CHECK(unit_pairs == 5);

  Rng rng = make_rng(1234);
  const std::uint64_t samples = 300000;
  const GaussCoprimeResult res = gauss_coprime_experiment(2, samples, rng);
  CHECK(res.ball_size == 3);
  const double p_unit = 5.0 / 9.0;
  CHECK(std::fabs(res.unit_frequency.value - p_unit) < 4 * res.unit_frequency.std_error);

  // divisor profile: (1,1) divides the gcd for 4/9 of pairs, 2 for 1/9,
  // norm-5 and norm-9 classes never
  const auto& profile = res.divisor_profile;
  REQUIRE(profile.size() == gauss_profile_classes().size());
  REQUIRE(profile[0].first == GaussClass{1, 1});
  CHECK(std::fabs(profile[0].second.value - 4.0 / 9.0) < 4 * profile[0].second.std_error);
  REQUIRE(profile[1].first == GaussClass{0, 2});
  CHECK(std::fabs(profile[1].second.value - 1.0 / 9.0) < 4 * profile[1].second.std_error);
  CHECK(profile[2].second.value == 0.0);
  CHECK(profile[3].second.value == 0.0);
  CHECK(profile[4].second.value == 0.0);

  CHECK_THROWS_AS(gauss_coprime_experiment(1, 10, rng), std::invalid_argument);
}
