#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace zetalaw {

// A pmf must satisfy |sum(mass) + deficiency - 1| <= this slack.
inline constexpr double kPmfNormalizationSlack = 1e-12;

// tv_distance collapses its interval to a scalar only when both
// deficiencies are below this cutoff.
inline constexpr double kDeficiencyScalarCutoff = 1e-9;

// Finitely supported probability law. `deficiency` is the mass assigned to
// points outside the tracked support (nonzero for truncations of infinite
// laws such as the Zeta pmf). Key is an integer type or GaussClass.
template <class Key>
struct SparsePmf {
  std::map<Key, double> mass;
  double deficiency = 0.0;

  double total_tracked() const {
    long double t = 0.0L;
    for (const auto& [k, v] : mass) t += v;
    return static_cast<double>(t);
  }

  double at(const Key& k) const {
    auto it = mass.find(k);
    return it == mass.end() ? 0.0 : it->second;
  }
};

template <class Key>
void validate_pmf(const SparsePmf<Key>& p, const char* who) {
  if (p.deficiency < 0.0)
    throw std::invalid_argument(std::string(who) + ": negative deficiency");
  long double total = p.deficiency;
  for (const auto& [k, v] : p.mass) {
    if (v < 0.0) throw std::invalid_argument(std::string(who) + ": negative mass");
    total += v;
  }
  if (std::fabs(static_cast<double>(total - 1.0L)) > kPmfNormalizationSlack)
    throw std::invalid_argument(std::string(who) + ": pmf not normalized");
}

// Total variation distance between two pmfs over the same key space.
// The untracked (deficiency) mass of each side is treated as worst-case
// disjoint, so the result is an interval: `upper` assumes the hidden masses
// never overlap, `lower` that they overlap as much as possible. When both
// deficiencies are below kDeficiencyScalarCutoff the interval collapses and
// scalar() is available.
struct TvBounds {
  double lower = 0.0;
  double upper = 0.0;
  bool collapsed = false;

  double scalar() const {
    if (!collapsed)
      throw std::logic_error("TvBounds: interval result, no scalar value");
    return upper;
  }
};

template <class Key>
TvBounds tv_distance(const SparsePmf<Key>& p, const SparsePmf<Key>& q) {
  validate_pmf(p, "tv_distance");
  validate_pmf(q, "tv_distance");

  // One pass over the union of supports, accumulating both closed forms:
  // the half-sum of |p - q| and the positive part sum(p - min(p, q)).
  long double abs_sum = 0.0L;
  long double pos_part = 0.0L;
  long double neg_part = 0.0L;
  auto ip = p.mass.begin();
  auto iq = q.mass.begin();
  while (ip != p.mass.end() || iq != q.mass.end()) {
    double pv = 0.0, qv = 0.0;
    if (iq == q.mass.end() || (ip != p.mass.end() && ip->first < iq->first)) {
      pv = (ip++)->second;
    } else if (ip == p.mass.end() || iq->first < ip->first) {
      qv = (iq++)->second;
    } else {
      pv = (ip++)->second;
      qv = (iq++)->second;
    }
    const double d = pv - qv;
    abs_sum += std::fabs(d);
    if (d > 0) pos_part += d; else neg_part -= d;
  }

  // Exact identity: pos - neg = sum(p) - sum(q) = q.deficiency - p.deficiency.
  // For zero-deficiency pairs this is the textbook agreement of the two forms.
  const long double skew = q.deficiency - p.deficiency;
  if (std::fabs(static_cast<double>(pos_part - neg_part - skew)) > 1e-12)
    throw std::logic_error("tv_distance: closed forms disagree beyond tolerance");

  TvBounds b;
  const double base = static_cast<double>(abs_sum) / 2.0;
  b.lower = std::min(1.0, base + std::fabs(p.deficiency - q.deficiency) / 2.0);
  b.upper = std::min(1.0, base + (p.deficiency + q.deficiency) / 2.0);
  b.collapsed =
      p.deficiency < kDeficiencyScalarCutoff && q.deficiency < kDeficiencyScalarCutoff;
  if (b.collapsed) b.lower = b.upper;
  return b;
}

/// Empirical law of a sample: mass(x) = count(x)/N, zero deficiency.
template <class Key>
SparsePmf<Key> empirical_pmf(const std::vector<Key>& samples) {
  if (samples.empty()) throw std::invalid_argument("empirical_pmf: empty sample");
  std::map<Key, std::uint64_t> counts;
  for (const Key& k : samples) ++counts[k];
  SparsePmf<Key> out;
  const double n = static_cast<double>(samples.size());
  for (const auto& [k, c] : counts) out.mass[k] = static_cast<double>(c) / n;
  return out;
}

// Smallest prefix-by-mass set F with p(F) >= 1 - epsilon (ties broken by
// key order). Returns nullopt when the deficiency alone exceeds epsilon,
// in which case no finite certificate exists.
template <class Key>
std::optional<std::vector<Key>> tension_certificate(const SparsePmf<Key>& p,
                                                    double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("tension_certificate: epsilon must be in (0,1)");
  validate_pmf(p, "tension_certificate");
  if (p.deficiency > epsilon) return std::nullopt;

  std::vector<std::pair<Key, double>> by_mass(p.mass.begin(), p.mass.end());
  std::stable_sort(by_mass.begin(), by_mass.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<Key> f;
  long double covered = 0.0L;
  for (const auto& [k, v] : by_mass) {
    if (covered >= 1.0L - static_cast<long double>(epsilon)) break;
    f.push_back(k);
    covered += v;
  }
  if (covered < 1.0L - static_cast<long double>(epsilon) - kPmfNormalizationSlack)
    return std::nullopt;  // deficiency + rounding leave the target unreachable
  return f;
}

/// For each n <= n_max, the probability that n divides the support point.
inline std::map<std::uint64_t, double> divisibility_profile(
    const SparsePmf<std::uint64_t>& p, std::uint64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("divisibility_profile: n_max >= 1");
  std::map<std::uint64_t, double> profile;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    long double acc = 0.0L;
    for (const auto& [k, v] : p.mass)
      if (k % n == 0) acc += v;
    profile[n] = static_cast<double>(acc);
  }
  return profile;
}

// Restriction to keys <= key_limit; the trimmed mass moves into the
// deficiency so the result stays normalized.
template <class Key>
SparsePmf<Key> restrict_support(const SparsePmf<Key>& p, const Key& key_limit) {
  SparsePmf<Key> out;
  long double trimmed = p.deficiency;
  for (const auto& [k, v] : p.mass) {
    if (key_limit < k)
      trimmed += v;
    else
      out.mass[k] = v;
  }
  out.deficiency = static_cast<double>(trimmed);
  return out;
}

inline nlohmann::json key_to_json(std::uint64_t k) { return k; }
inline std::string key_to_csv(std::uint64_t k) { return std::to_string(k); }

template <class Key>
nlohmann::json pmf_to_json(const SparsePmf<Key>& p) {
  nlohmann::json support = nlohmann::json::array();
  for (const auto& [k, v] : p.mass) support.push_back({key_to_json(k), v});
  return {{"support", support}, {"deficiency", p.deficiency}};
}

template <class Key>
std::string pmf_to_csv(const SparsePmf<Key>& p) {
  std::string out = "key,mass\n";
  char buf[64];
  for (const auto& [k, v] : p.mass) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += key_to_csv(k);
    out += ',';
    out += buf;
    out += '\n';
  }
  return out;
}

}  // namespace zetalaw
