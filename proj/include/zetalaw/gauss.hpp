#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zetalaw/core.hpp"
#include "zetalaw/montecarlo.hpp"
#include "zetalaw/pmf.hpp"
#include "zetalaw/rng.hpp"

namespace zetalaw {

// Gaussian integer a + ib. Components are bounded by 2^31 in absolute value
// for products and norms to stay exact, as in the rational-integer kernels.
struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  bool operator==(const GaussInt&) const = default;
  bool is_zero() const { return re == 0 && im == 0; }
};

std::uint64_t gauss_norm(const GaussInt& z);
GaussInt gauss_mul(const GaussInt& a, const GaussInt& b);

// Canonical associate class: the unique rotation i^k z with Re >= 0 and
// Im >= 1. The unit class is (0, 1).
struct GaussClass {
  std::int64_t a = 0;  // >= 0
  std::int64_t b = 1;  // >= 1

  bool operator==(const GaussClass&) const = default;
  bool operator<(const GaussClass& o) const {
    return a != o.a ? a < o.a : b < o.b;
  }
  GaussInt rep() const { return GaussInt{a, b}; }
  std::uint64_t norm() const {
    return static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(a) +
           static_cast<std::uint64_t>(b) * static_cast<std::uint64_t>(b);
  }
};

inline const GaussClass kUnitClass{0, 1};

/// Canonical class of a nonzero Gaussian integer.
GaussClass canonicalize(const GaussInt& z);

/// True when d divides x exactly in Z[i] (associate-invariant). d != 0.
bool gauss_divides(const GaussInt& d, const GaussInt& x);

inline bool class_divides(const GaussClass& d, const GaussClass& x) {
  return gauss_divides(d.rep(), x.rep());
}

// Gcd by Euclidean division with round-to-nearest quotients (ties to even),
// which keeps N(remainder) <= N(divisor)/2. Result as a canonical class.
GaussClass gauss_gcd(const GaussInt& z, const GaussInt& w);

/// S'(n) = #{(a,b), a >= 0, b >= 1, a^2 + b^2 = n} by the multiplicative
/// prime-power rule: 1 at p=2; e+1 at p = 1 mod 4; parity of e at p = 3 mod 4.
std::uint64_t sum_two_squares_count(std::uint64_t n, const PrimeTable& table);

/// S' as a MultiplicativeSpec, pluggable into Euler products.
MultiplicativeSpec sum_two_squares_spec();

/// All canonical classes of norm exactly n, in lexicographic order.
std::vector<GaussClass> classes_of_norm(std::uint64_t n);

/// Checks that cls splits uniquely as x*y with N(x)=a, N(y)=b, gcd(a,b)=1.
bool unique_coprime_splitting_check(const GaussClass& cls, std::uint64_t a, std::uint64_t b);

/// All canonical classes with norm <= r^2, in lexicographic order.
std::vector<GaussClass> ball_classes(double r);

/// Mass of cls under the zeta'_s law: N(cls)^-s / normalizer, where the
/// normalizer is zeta(s) * beta(s).
double zeta_prime_pmf(double s, const GaussClass& cls, double normalizer);

// The small classes whose divisibility of the gcd the experiment tracks.
const std::vector<GaussClass>& gauss_profile_classes();

struct GaussCoprimeCounts {
  std::uint64_t unit = 0;                // draws with gcd in the unit class
  std::vector<std::uint64_t> divisible;  // parallel to gauss_profile_classes()
  std::uint64_t samples = 0;
};

/// Core sampling loop over uniform ordered pairs from a precomputed ball.
GaussCoprimeCounts gauss_coprime_counts(const std::vector<GaussClass>& ball,
                                        std::uint64_t samples, Rng& rng);

struct GaussCoprimeResult {
  MonteCarloEstimate unit_frequency;
  std::vector<std::pair<GaussClass, MonteCarloEstimate>> divisor_profile;
  std::uint64_t ball_size = 0;
};

/// The coprimality experiment on {N(z) <= n^2}: unit-gcd frequency plus the
/// empirical divisibility profile of the gcd.
GaussCoprimeResult gauss_coprime_experiment(std::uint64_t n, std::uint64_t samples, Rng& rng);

inline nlohmann::json key_to_json(const GaussClass& c) {
  return nlohmann::json::array({c.a, c.b});
}
inline std::string key_to_csv(const GaussClass& c) {
  return std::to_string(c.a) + "+" + std::to_string(c.b) + "i";
}

}  // namespace zetalaw
