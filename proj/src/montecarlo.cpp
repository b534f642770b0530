#include "pgd/montecarlo.hpp"

#include "pgd/errors.hpp"
#include "pgd/format.hpp"
#include "pgd/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace pgd::montecarlo {

namespace {

constexpr double kVacuumFloor = 1e-300;
// exp(-z^2/2) is exactly 0.0 in double beyond this; cutting there keeps
// subset loops bit-identical to full loops
constexpr double kKernelCut = 39.0;

struct Kahan {
    double sum = 0.0;
    double carry = 0.0;
    void add(double v) {
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

struct MassCdf {
    std::vector<double> nodes;
    std::vector<double> cdf; // same length; cdf.front() = 0
    double total = 0.0;
};

MassCdf build_cdf(const SampledProfile& profile) {
    constexpr int m = 8192;
    MassCdf c;
    c.nodes.resize(m + 1);
    c.cdf.resize(m + 1);
    const double step = (profile.window_hi - profile.window_lo) / m;
    double prev_f = profile.f0(profile.window_lo);
    c.nodes[0] = profile.window_lo;
    c.cdf[0] = 0.0;
    for (int j = 1; j <= m; ++j) {
        const double s = profile.window_lo + j * step;
        const double f = profile.f0(s);
        c.nodes[j] = s;
        c.cdf[j] = c.cdf[j - 1] + 0.5 * (prev_f + f) * step;
        prev_f = f;
    }
    c.total = c.cdf.back();
    if (!(c.total > 0.0))
        throw std::invalid_argument("simulate: profile carries no mass");
    return c;
}

double invert_cdf(const MassCdf& c, double v) {
    const auto it = std::upper_bound(c.cdf.begin(), c.cdf.end(), v);
    std::size_t j = it == c.cdf.begin()
                        ? 0
                        : static_cast<std::size_t>(it - c.cdf.begin()) - 1;
    if (j >= c.cdf.size() - 1) j = c.cdf.size() - 2;
    const double cell = c.cdf[j + 1] - c.cdf[j];
    const double frac = cell > 0.0 ? (v - c.cdf[j]) / cell : 0.5;
    return c.nodes[j] + frac * (c.nodes[j + 1] - c.nodes[j]);
}

ParticleEnsemble init_positions(const SampledProfile& profile, double sigma,
                                double t, std::size_t n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("simulate: n must be >= 1");
    if (!(sigma >= 0.0) || !(t >= 0.0))
        throw std::invalid_argument("simulate: sigma and t must be >= 0");
    const MassCdf cdf = build_cdf(profile);
    ParticleEnsemble ens;
    ens.seed = seed;
    ens.sigma = sigma;
    ens.t = t;
    ens.total_mass = cdf.total;
    ens.s.resize(n);
    ens.u.resize(n);
    ens.X.resize(n);
    ens.w.assign(n, cdf.total / static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const double jitter = rng::uniform01(seed, 0, i);
        const double v = (static_cast<double>(i) + jitter) /
                         static_cast<double>(n) * cdf.total;
        ens.s[i] = invert_cdf(cdf, v);
        ens.u[i] = profile.u0(ens.s[i]);
    }
    return ens;
}

} // namespace

ParticleEnsemble simulate(const SampledProfile& profile, double sigma, double t,
                          std::size_t n, std::uint64_t seed) {
    ParticleEnsemble ens = init_positions(profile, sigma, t, n, seed);
    const double kick = sigma * std::sqrt(t);
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = kick > 0.0 ? rng::normal(seed, 1, i) : 0.0;
        ens.X[i] = ens.s[i] + ens.u[i] * t + kick * xi;
    }
    return ens;
}

ParticleEnsemble simulate_euler_maruyama(const SampledProfile& profile,
                                         double sigma, double t, std::size_t n,
                                         std::uint64_t seed, int steps) {
    if (steps < 1)
        throw std::invalid_argument("simulate_euler_maruyama: steps must be >= 1");
    ParticleEnsemble ens = init_positions(profile, sigma, t, n, seed);
    const double dt = t / steps;
    const double kick = sigma * std::sqrt(dt);
    for (std::size_t i = 0; i < n; ++i) {
        double x = ens.s[i];
        for (int k = 0; k < steps; ++k)
            x += ens.u[i] * dt + (kick > 0.0 ? kick * rng::normal(seed, 16 + k, i) : 0.0);
        ens.X[i] = x;
    }
    return ens;
}

namespace {

struct KernelPoint {
    std::size_t index;
    double weight; // w_i * exp(-z^2/2)
    double u;
};

std::vector<KernelPoint> kernel_points(const ParticleEnsemble& ens, double x,
                                       double h) {
    if (!(h > 0.0)) throw std::invalid_argument("bandwidth must be > 0");
    std::vector<KernelPoint> pts;
    for (std::size_t i = 0; i < ens.X.size(); ++i) {
        const double z = (ens.X[i] - x) / h;
        if (std::abs(z) >= kKernelCut) continue;
        pts.push_back({i, ens.w[i] * std::exp(-0.5 * z * z), ens.u[i]});
    }
    return pts;
}

} // namespace

double estimate_uhat(const ParticleEnsemble& ens, double x, double bandwidth) {
    Kahan num, den;
    for (const KernelPoint& p : kernel_points(ens, x, bandwidth)) {
        num.add(p.weight * p.u);
        den.add(p.weight);
    }
    if (!(den.sum > kVacuumFloor)) throw VacuumError(ens.t, x);
    return num.sum / den.sum;
}

double estimate_uhat_se(const ParticleEnsemble& ens, double x, double bandwidth,
                        int replicates) {
    if (replicates < 2)
        throw std::invalid_argument("estimate_uhat_se: need >= 2 replicates");
    const std::vector<KernelPoint> pts = kernel_points(ens, x, bandwidth);
    std::vector<double> values;
    values.reserve(replicates);
    for (int b = 0; b < replicates; ++b) {
        Kahan num, den;
        for (const KernelPoint& p : pts) {
            const int k = rng::poisson1(ens.seed, 256 + b, p.index);
            if (k == 0) continue;
            num.add(k * p.weight * p.u);
            den.add(k * p.weight);
        }
        if (den.sum > kVacuumFloor) values.push_back(num.sum / den.sum);
    }
    if (values.size() < 2) throw VacuumError(ens.t, x);
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(values.size() - 1);
    return std::sqrt(var);
}

namespace {

double kde_scale(const ParticleEnsemble& ens, double bandwidth,
                 double total_mass) {
    const double ens_mass =
        ens.w.empty() ? 0.0
                      : ens.w.front() * static_cast<double>(ens.w.size());
    const double rescale = ens_mass > 0.0 ? total_mass / ens_mass : 0.0;
    return rescale / (std::sqrt(2.0 * std::numbers::pi) * bandwidth);
}

} // namespace

double estimate_rho(const ParticleEnsemble& ens, double x, double bandwidth,
                    double total_mass) {
    Kahan den;
    for (const KernelPoint& p : kernel_points(ens, x, bandwidth)) den.add(p.weight);
    return kde_scale(ens, bandwidth, total_mass) * den.sum;
}

double estimate_rho(const ParticleEnsemble& ens, double x, double bandwidth) {
    return estimate_rho(ens, x, bandwidth, ens.total_mass);
}

double estimate_rho_se(const ParticleEnsemble& ens, double x, double bandwidth,
                       int replicates) {
    if (replicates < 2)
        throw std::invalid_argument("estimate_rho_se: need >= 2 replicates");
    const std::vector<KernelPoint> pts = kernel_points(ens, x, bandwidth);
    const double scale = kde_scale(ens, bandwidth, ens.total_mass);
    std::vector<double> values;
    values.reserve(replicates);
    for (int b = 0; b < replicates; ++b) {
        Kahan den;
        for (const KernelPoint& p : pts) {
            const int k = rng::poisson1(ens.seed, 256 + b, p.index);
            if (k > 0) den.add(k * p.weight);
        }
        values.push_back(scale * den.sum);
    }
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(values.size() - 1);
    return std::sqrt(var);
}

void export_columns(const ParticleEnsemble& ens, std::ostream& os) {
    os << "s u X w\n";
    for (std::size_t i = 0; i < ens.X.size(); ++i) {
        os << format::shortest(ens.s[i]) << ' ' << format::shortest(ens.u[i])
           << ' ' << format::shortest(ens.X[i]) << ' '
           << format::shortest(ens.w[i]) << '\n';
    }
}

} // namespace pgd::montecarlo
