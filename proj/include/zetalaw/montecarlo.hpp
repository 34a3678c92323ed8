#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace zetalaw {

struct MonteCarloEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};

/// Estimate of a probability from a count of successes, with the usual
/// binomial standard error sqrt(p(1-p)/n).
inline MonteCarloEstimate binomial_estimate(std::uint64_t successes, std::uint64_t samples) {
  if (samples == 0) throw std::invalid_argument("binomial_estimate: zero samples");
  if (successes > samples) throw std::invalid_argument("binomial_estimate: successes > samples");
  const double p = static_cast<double>(successes) / static_cast<double>(samples);
  MonteCarloEstimate est;
  est.value = p;
  est.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  est.samples = samples;
  return est;
}

}  // namespace zetalaw
