#pragma once

#include <cstdint>

namespace pgd::rng {

/// Counter-based generator built on the SplitMix64 finalizer. Every draw is
/// a pure function of (seed, stream, counter):
///   value = mix(mix(mix(seed) xor stream) xor counter)
/// Stream assignment:
///   0            initial-position jitter
///   1            Gaussian terminal kick
///   16 + k       Euler-Maruyama kick of step k
///   256 + b      bootstrap replicate b
/// Shards of a particle range draw identical numbers regardless of how the
/// range is split, which is what makes parallel runs reproducible.
std::uint64_t mix64(std::uint64_t z);
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                           std::uint64_t counter);

/// Uniform double strictly inside (0, 1).
double uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

/// Standard normal via the inverse CDF of uniform01.
double normal(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

/// Poisson(1) by CDF inversion of a single uniform (bootstrap weights).
int poisson1(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

/// Inverse standard normal CDF (used by `normal`; exposed for tests).
double normal_icdf(double u);

} // namespace pgd::rng
