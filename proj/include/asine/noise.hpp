#pragma once

// Reproducible Gaussian perturbations. Each sample is a pure function of
// (seed, index): two SplitMix64 outputs feed one Box-Muller transform.

#include <asine/error.hpp>
#include <asine/grid.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace asine {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Standard normal deviate keyed by (seed, index).
inline double gaussian_at(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t base = splitmix64(seed);
  const std::uint64_t a = splitmix64(base ^ (2 * index));
  const std::uint64_t b = splitmix64(base ^ (2 * index + 1));
  // Uniforms in (0, 1] and [0, 1) with 53 random bits.
  const double u1 = static_cast<double>((a >> 11) + 1) * 0x1.0p-53;
  const double u2 = static_cast<double>(b >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

/// values[i] + sigma * gaussian_at(seed, i).
inline SampledFunction<> add_gaussian_noise(const SampledFunction<>& s, double sigma, std::uint64_t seed) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw DomainError("noise sigma must be >= 0");
  std::vector<double> v = s.values();
  if (sigma == 0.0) return {s.grid(), std::move(v)};
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += sigma * gaussian_at(seed, i);
  return {s.grid(), std::move(v)};
}

}  // namespace asine
