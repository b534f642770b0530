#pragma once

#include "pgd/model.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace pgd::montecarlo {

/// Particle ensemble at time t: initial positions s (sampled proportional
/// to f0 by stratified inverse-CDF draws), carried velocities u = u0(s),
/// terminal positions X = s + u t + sigma sqrt(t) xi, and uniform mass
/// weights w = total_mass / n. Identical seeds give bit-identical arrays.
struct ParticleEnsemble {
    std::vector<double> s;
    std::vector<double> u;
    std::vector<double> X;
    std::vector<double> w;
    std::uint64_t seed = 0;
    double sigma = 0.0;
    double t = 0.0;
    double total_mass = 0.0;
};

/// Exact sampling of the particle SDE: the velocity is constant along each
/// path, so the terminal position is Gaussian with no time-stepping error.
/// sigma = 0 gives deterministic characteristics.
ParticleEnsemble simulate(const SampledProfile& profile, double sigma, double t,
                          std::size_t n, std::uint64_t seed);

/// Euler-Maruyama variant with `steps` increments. Statistically identical
/// to `simulate` for this SDE (the drift is constant along paths); exists
/// to demonstrate step-size independence.
ParticleEnsemble simulate_euler_maruyama(const SampledProfile& profile,
                                         double sigma, double t, std::size_t n,
                                         std::uint64_t seed, int steps);

/// Gaussian-kernel regression of velocity on position at x. Throws
/// VacuumError if no particle carries kernel weight there.
double estimate_uhat(const ParticleEnsemble& ens, double x, double bandwidth);

/// Poisson-bootstrap standard error of estimate_uhat (replicate weights are
/// drawn from the ensemble's own counter stream, so the value is
/// deterministic for a given ensemble).
double estimate_uhat_se(const ParticleEnsemble& ens, double x, double bandwidth,
                        int replicates = 64);

/// Gaussian kernel-density estimate scaled so its window integral matches
/// the given total mass.
double estimate_rho(const ParticleEnsemble& ens, double x, double bandwidth,
                    double total_mass);
double estimate_rho(const ParticleEnsemble& ens, double x, double bandwidth);

double estimate_rho_se(const ParticleEnsemble& ens, double x, double bandwidth,
                       int replicates = 64);

/// Columnar text export: "s u X w" per particle.
void export_columns(const ParticleEnsemble& ens, std::ostream& os);

} // namespace pgd::montecarlo
