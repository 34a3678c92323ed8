// Acceptance gate: every criterion prints one PASS/FAIL line; the exit
// status is the number of failures. Statistical checks run at the fixed CI
// seed below.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "zetalaw/core.hpp"
#include "zetalaw/densities.hpp"
#include "zetalaw/gauss.hpp"
#include "zetalaw/pmf.hpp"
#include "zetalaw/rng.hpp"
#include "zetalaw/zeta.hpp"

using namespace zetalaw;

namespace {

constexpr std::uint64_t kCiSeed = 42;
constexpr double kChiSquare50Dof999 = 86.66081519;

int g_failures = 0;

void report(int idx, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", idx, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

template <class Body>
void criterion(int idx, Body body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(idx, false, std::string("exception: ") + e.what());
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), pattern, a, b, c);
  return buf;
}

SparsePmf<std::uint64_t> random_small_pmf(Rng& rng) {
  SparsePmf<std::uint64_t> p;
  double total = 0.0;
  for (std::uint64_t k = 1; k <= 8; ++k) {
    if (uniform_double(rng) < 0.3) continue;
    const double w = uniform_double(rng) + 1e-3;
    p.mass[k] = w;
    total += w;
  }
  if (p.mass.empty()) {
    p.mass[1] = 1.0;
    return p;
  }
  for (auto& [k, v] : p.mass) v /= total;
  return p;
}

}  // namespace

int main() {
  const PrimeTable table = sieve(1000000);
  const double kTargetDensity = 0.6079271019;

  criterion(1, [&] {
    const auto t0 = std::chrono::steady_clock::now();
    const double density = coprime_density_exact(1000000, 2, table);
    const double elapsed = seconds_since(t0);

    std::uint64_t brute = 0, mismatches = 0;
    for (std::uint64_t n = 1; n <= 300; ++n) {
      // extend the (n-1)-square to the n-square: a border of 2(n-1)+1 cells
      for (std::uint64_t k = 1; k < n; ++k)
        if (std::gcd(k, n) == 1) brute += 2;
      brute += n == 1 ? 1 : 0;
      if (coprime_pair_count(n, table) != brute) ++mismatches;
    }

    const bool ok = std::fabs(density - kTargetDensity) < 5e-3 && elapsed < 2.0 &&
                    mismatches == 0;
    report(1, ok,
           fmt("coprime_density_exact(1e6,2) = %.10f (|diff| = %.2e), %.3f s, ", density,
               std::fabs(density - kTargetDensity), elapsed) +
               std::to_string(mismatches) + " brute-force mismatches <= 300");
  });

  criterion(2, [&] {
    const double density = mfree_density_exact(1000000, 2, table);
    std::uint64_t running = 0, mismatches = 0;
    for (std::uint64_t n = 1; n <= 100000; ++n) {
      bool squarefree = true;
      for (const PrimePower& pp : factorize(n, table).factors)
        if (pp.exponent >= 2) squarefree = false;
      if (squarefree) ++running;
      if (mfree_count(n, 2, table) != running) ++mismatches;
    }
    const bool ok = std::fabs(density - kTargetDensity) < 2e-3 && mismatches == 0;
    report(2, ok,
           fmt("mfree_density_exact(1e6,2) = %.10f (|diff| = %.2e), ", density,
               std::fabs(density - kTargetDensity)) +
               std::to_string(mismatches) + " classification mismatches <= 1e5");
  });

  criterion(3, [&] {
    double worst = 0.0;
    for (double s : {2.0, 3.0, 4.0}) {
      const double product = euler_product_inv_zeta(s, table);
      worst = std::max(worst, std::fabs(product * zeta_value(s, 1e-13) - 1.0));
    }
    report(3, worst < 2e-6,
           fmt("max |product(limit 1e6) * zeta(s) - 1| = %.2e over s in {2,3,4}", worst));
  });

  criterion(4, [&] {
    const std::vector<std::int8_t> mu = moebius_upto(1000000, table);
    long double direct_one = 0.0L, direct_mu = 0.0L, direct_chi = 0.0L;
    for (std::uint64_t n = 1; n <= 1000000; ++n) {
      const long double w =
          1.0L / (static_cast<long double>(n) * static_cast<long double>(n));
      direct_one += w;
      direct_mu += mu[n] * w;
      if (n % 2 == 1) direct_chi += (n % 4 == 1 ? w : -w);
    }
    const double p_one = euler_product_multiplicative(specs::one(), 2, table, 64);
    const double p_mu = euler_product_multiplicative(specs::moebius(), 2, table, 64);
    const double p_chi = euler_product_multiplicative(specs::chi4(), 2, table, 64);
    const double worst = std::max({std::fabs(p_one - static_cast<double>(direct_one)),
                                   std::fabs(p_mu - static_cast<double>(direct_mu)),
                                   std::fabs(p_chi - static_cast<double>(direct_chi))});
    const double catalan_gap = std::fabs(p_chi - 0.9159655942);
    report(4, worst < 1e-4 && catalan_gap < 1e-4,
           fmt("max |product - series(1e6 terms)| = %.2e; |chi4 product - beta(2)| = %.2e",
               worst, catalan_gap));
  });

  criterion(5, [&] {
    const auto t0 = std::chrono::steady_clock::now();
    std::uint64_t mismatches = 0;
    for (std::uint64_t n = 1; n <= 20000; ++n)
      if (sum_two_squares_count(n, table) != classes_of_norm(n).size()) ++mismatches;
    const double elapsed = seconds_since(t0);
    report(5, mismatches == 0 && elapsed < 5.0,
           std::to_string(mismatches) + " mismatches vs lattice count, n <= 20000, " +
               fmt("%.3f s", elapsed));
  });

  criterion(6, [&] {
    const MultiplicativeSpec spec = sum_two_squares_spec();
    double worst = 0.0;
    for (double s : {2.0, 3.0}) {
      const ZetaLaw law(s, 1e-13);
      const double expectation = expected_multiplicative(spec, law, table, 64);
      worst = std::max(worst, std::fabs(expectation - dirichlet_beta(s, 1e-13)));
    }
    report(6, worst < 1e-4,
           fmt("max |E[S'(X)] - beta(s)| = %.2e over s in {2,3}", worst));
  });

  criterion(7, [&] {
    const ZetaLaw law(2.0);
    const SparsePmf<std::uint64_t> zeta_trunc = truncated_pmf(law, 100000);
    std::vector<double> tvs;
    for (std::uint64_t n : {10ULL, 100ULL, 1000ULL, 10000ULL})
      tvs.push_back(tv_distance(gcd_law_exact(n, 2, table), zeta_trunc).upper);
    bool decreasing = true;
    for (std::size_t i = 1; i < tvs.size(); ++i)
      if (tvs[i] >= tvs[i - 1]) decreasing = false;
    report(7, decreasing && tvs.back() < 0.02,
           fmt("tv grid %.6f > %.6f > ...", tvs[0], tvs[1]) +
               fmt(" %.6f > %.6f; final < 0.02", tvs[2], tvs[3]));
  });

  criterion(8, [&] {
    bool ok = true;
    std::string detail;
    for (std::uint32_t m : {2u, 3u}) {
      std::vector<double> gaps;
      for (std::uint64_t n : {10ULL, 100ULL, 1000ULL, 10000ULL})
        gaps.push_back(cesaro_gap(n, m, table));
      for (std::size_t i = 1; i < gaps.size(); ++i)
        if (gaps[i] >= gaps[i - 1]) ok = false;
      if (gaps.back() >= 0.05) ok = false;
      detail += fmt("m=%.0f: gap(1e4) = %.6f; ", static_cast<double>(m), gaps.back());
    }
    report(8, ok, detail + "grids decreasing");
  });

  criterion(9, [&] {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<GaussClass> ball = ball_classes(1000.0);
    Rng rng = make_rng(kCiSeed);
    const GaussCoprimeCounts counts = gauss_coprime_counts(ball, 1000000, rng);
    const MonteCarloEstimate est = binomial_estimate(counts.unit, counts.samples);
    const double elapsed = seconds_since(t0);
    const double target = 1.0 / (zeta_value(2.0, 1e-13) * dirichlet_beta(2.0, 1e-13));
    const double gap = std::fabs(est.value - target);
    report(9, gap < 4 * est.std_error && elapsed < 30.0,
           fmt("unit-gcd freq = %.6f vs 1/(zeta(2)beta(2)) = %.6f, ", est.value, target) +
               fmt("|diff| = %.2e = %.2f sigma, ", gap, gap / est.std_error) +
               fmt("%.1f s", elapsed));
  });

  criterion(10, [&] {
    bool ok = true;
    std::string detail;

    {  // tv metric axioms on seeded random pairs and triples
      Rng rng = make_rng(kCiSeed);
      bool axioms = true;
      for (int trial = 0; trial < 1000; ++trial) {
        const auto p = random_small_pmf(rng);
        const auto q = random_small_pmf(rng);
        const auto r = random_small_pmf(rng);
        const double pq = tv_distance(p, q).scalar();
        const double qr = tv_distance(q, r).scalar();
        const double pr = tv_distance(p, r).scalar();
        if (pq < 0.0 || pq > 1.0) axioms = false;
        if (tv_distance(p, p).scalar() != 0.0) axioms = false;
        if (std::fabs(pq - tv_distance(q, p).scalar()) > 1e-15) axioms = false;
        if (pr > pq + qr + 1e-12) axioms = false;
      }
      ok = ok && axioms;
      detail += std::string("tv-axioms ") + (axioms ? "ok" : "VIOLATED") + ", ";
    }

    {  // divisibility independence across coprime pairs
      const ZetaLaw law(2.0);
      bool independence = true;
      for (std::uint64_t a = 1; a <= 100; ++a)
        for (std::uint64_t b = 1; b <= 100; ++b) {
          if (std::gcd(a, b) != 1) continue;
          if (std::fabs(divisibility_prob(law, a * b) -
                        divisibility_prob(law, a) * divisibility_prob(law, b)) > 1e-12)
            independence = false;
        }
      ok = ok && independence;
      detail += std::string("coprime product identity ") + (independence ? "ok" : "VIOLATED") + ", ";
    }

    double chi_stat = 0.0;
    {  // sampler chi-square, cells {1..50, tail}, significance 1e-3
      const ZetaLaw law(2.0);
      Rng rng = make_rng(kCiSeed);
      const std::uint64_t n_draws = 1000000;
      std::vector<std::uint64_t> cells(51, 0);
      for (std::uint64_t i = 0; i < n_draws; ++i) {
        const std::uint64_t x = sample(law, rng);
        ++cells[x <= 50 ? x : 0];
      }
      long double stat = 0.0L, head = 0.0L;
      for (std::uint64_t k = 1; k <= 50; ++k) {
        const long double expected = static_cast<long double>(n_draws) * pmf(law, k);
        head += pmf(law, k);
        const long double diff = static_cast<long double>(cells[k]) - expected;
        stat += diff * diff / expected;
      }
      const long double tail_expected = static_cast<long double>(n_draws) * (1.0L - head);
      const long double tail_diff = static_cast<long double>(cells[0]) - tail_expected;
      stat += tail_diff * tail_diff / tail_expected;
      chi_stat = static_cast<double>(stat);
      ok = ok && chi_stat < kChiSquare50Dof999;
      detail += fmt("chi-square = %.2f < %.2f, ", chi_stat, kChiSquare50Dof999);
    }

    {  // Moebius inversion to 1e4
      const std::uint64_t N = 10000;
      const std::vector<std::int8_t> mu8 = moebius_upto(N, table);
      std::vector<double> mu_vals(N + 1, 0.0), ones(N + 1, 1.0);
      for (std::uint64_t n = 1; n <= N; ++n) mu_vals[n] = mu8[n];
      const std::vector<double> delta = dirichlet_convolve(mu_vals, ones);
      bool inversion = delta[1] == 1.0;
      for (std::uint64_t n = 2; n <= N; ++n)
        if (delta[n] != 0.0) inversion = false;
      ok = ok && inversion;
      detail += std::string("mobius inversion to 1e4 ") + (inversion ? "ok" : "VIOLATED");
    }

    report(10, ok, detail);
  });

  if (g_failures == 0) std::printf("acceptance: all 10 criteria passed\n");
  else std::printf("acceptance: %d criteria failed\n", g_failures);
  return g_failures;
}
