#include "pgd/rng.hpp"

#include <boost/math/distributions/normal.hpp>

#include <cmath>

namespace pgd::rng {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                           std::uint64_t counter) {
    return mix64(mix64(mix64(seed) ^ stream) ^ counter);
}

double uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    const std::uint64_t bits = counter_hash(seed, stream, counter) >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double normal_icdf(double u) {
    static const boost::math::normal_distribution<double> dist(0.0, 1.0);
    return boost::math::quantile(dist, u);
}

double normal(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return normal_icdf(uniform01(seed, stream, counter));
}

int poisson1(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    double u = uniform01(seed, stream, counter);
    double pmf = std::exp(-1.0); // P(0)
    int k = 0;
    while (u > pmf && k < 64) {
        u -= pmf;
        ++k;
        pmf /= k; // P(k) = e^{-1} / k!
    }
    return k;
}

} // namespace pgd::rng
