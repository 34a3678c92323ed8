#pragma once

#include <cstdint>
#include <random>

namespace zetalaw {

// Random streams are always passed explicitly; there is no global RNG.
// Distribution helpers are hand-rolled (std::uniform_int_distribution is
// not reproducible across standard libraries, and reports must be
// byte-identical for a fixed seed).
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Per-worker substream: seed expanded through splitmix64 at an offset
// derived from the worker index. Reproducible for a fixed worker count.
inline std::uint64_t worker_seed(std::uint64_t seed, std::uint64_t worker_index) {
  std::uint64_t state = seed + (worker_index + 1) * 0x9e3779b97f4a7c15ULL;
  return splitmix64(state);
}

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

inline Rng worker_rng(std::uint64_t seed, std::uint64_t worker_index) {
  return Rng(worker_seed(seed, worker_index));
}

/// Unbiased uniform draw from {0, ..., n-1}.
inline std::uint64_t uniform_u64_below(Rng& rng, std::uint64_t n) {
  // Rejection from the bottom of the 64-bit range: accept r >= 2^64 mod n,
  // so exactly a multiple of n values remain.
  const std::uint64_t threshold = (-n) % n;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

/// Uniform draw from {lo, ..., hi}.
inline std::uint64_t uniform_int(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + uniform_u64_below(rng, hi - lo + 1);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_double(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace zetalaw
