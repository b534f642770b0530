#include "pgd/exact_fields.hpp"

#include "pgd/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace pgd::exact_fields {

namespace {

using quadrature::Segment;

constexpr double kVacuumFloor = 1e-300;

// Everything needed to evaluate the kernel integrand at one (t, x):
// the contributing s-intervals, the log shift, and the scale factors.
struct KernelContext {
    std::vector<Segment> segments;
    double inv2var = 0.0;   // 1 / (2 sigma^2 t)
    double prefactor = 0.0; // 1 / (sqrt(2 pi t) sigma)
    double shift = 0.0;     // max of log f0 - p^2/(2 sigma^2 t) over the scan
};

// p(s) = u0(s) t + s - x: the kernel argument. Its roots are the kernel
// ridge; the integrand is negligible where |p| > truncation_radius*sigma*sqrt(t).
double kernel_arg(const SampledProfile& pr, double t, double x, double s) {
    return pr.u0(s) * t + s - x;
}

double bisect_root(const SampledProfile& pr, double t, double x, double a,
                   double b, double pa) {
    for (int i = 0; i < 200 && b - a > 1e-15 * (1.0 + std::abs(a)); ++i) {
        const double m = 0.5 * (a + b);
        const double pm = kernel_arg(pr, t, x, m);
        if (pm == 0.0) return m;
        if ((pm > 0.0) == (pa > 0.0)) {
            a = m;
            pa = pm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

KernelContext prepare_kernel(const SampledProfile& pr, double sigma, double t,
                             double x, const QuadratureSpec& spec, double lo,
                             double hi) {
    spec.validate();
    if (!(sigma > 0.0)) throw std::invalid_argument("kernel: sigma must be > 0");
    if (!(t > 0.0)) throw std::invalid_argument("kernel: t must be > 0");

    KernelContext ctx;
    ctx.inv2var = 1.0 / (2.0 * sigma * sigma * t);
    ctx.prefactor = 1.0 / (std::sqrt(2.0 * std::numbers::pi * t) * sigma);
    const double sd = sigma * std::sqrt(t); // kernel std in p-space
    const double ridge_width = spec.truncation_radius * sd;

    // sub-segments between declared breakpoints
    std::vector<double> bounds{lo};
    for (double b : pr.breakpoints)
        if (b > lo && b < hi) bounds.push_back(b);
    bounds.push_back(hi);

    double max_log = -std::numeric_limits<double>::infinity();
    auto note_log = [&](double s, double p) {
        const double f = pr.f0(s);
        if (f <= 0.0) return;
        max_log = std::max(max_log, std::log(f) - p * p * ctx.inv2var);
    };

    std::vector<Segment> intervals; // contributing s-intervals, possibly overlapping
    std::vector<double> cuts;       // mandatory panel boundaries inside them

    // A ridge center contributes a bump of width ~ sd/|p'|. Panels seeded by
    // a geometric ladder of that width keep the bump visible to the
    // quadrature nodes no matter how narrow it is.
    auto add_center = [&](double c, double seg_a, double seg_b, double cell) {
        note_log(c, kernel_arg(pr, t, x, c));
        const double h = std::max(cell * 0.125, 1e-12 * (1.0 + std::abs(c)));
        double slope = std::abs(kernel_arg(pr, t, x, c + h) -
                                kernel_arg(pr, t, x, c - h)) /
                       (2.0 * h);
        slope = std::max(slope, 1e-12);
        const double w = sd / slope;                          // one std in s
        const double half = std::max(ridge_width / slope, cell); // truncation
        intervals.push_back({std::max(seg_a, c - half - cell),
                             std::min(seg_b, c + half + cell)});
        cuts.push_back(c);
        for (double m = w; m < 1.01 * half; m *= 2.0) {
            cuts.push_back(c - m);
            cuts.push_back(c + m);
        }
    };

    const double total = hi - lo;
    for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
        const double a = bounds[k];
        const double b = bounds[k + 1];
        if (!(b > a)) continue;

        // narrow segments between breakpoints (smoothing ramps) are kept
        // whole so their sigma->0 mass is never stepped over
        if (b - a <= 0.05 * total && k > 0 && k + 1 < bounds.size() - 1)
            intervals.push_back({a, b});

        const int n = std::clamp(static_cast<int>(4096.0 * (b - a) / total), 64, 4096);
        const double step = (b - a) / n;
        double prev_p = kernel_arg(pr, t, x, a);
        note_log(a, prev_p);
        int run_start = (std::abs(prev_p) <= ridge_width) ? 0 : -1;
        double run_best = std::abs(prev_p);
        double run_best_s = a;
        auto close_run = [&](int end_index) {
            intervals.push_back({std::max(a, a + (run_start - 1) * step),
                                 std::min(b, a + end_index * step)});
            add_center(run_best_s, a, b, step);
            run_start = -1;
        };
        for (int i = 1; i <= n; ++i) {
            const double s = (i == n) ? b : a + i * step;
            const double p = kernel_arg(pr, t, x, s);
            note_log(s, p);
            const bool hit = std::abs(p) <= ridge_width;
            if (hit) {
                if (run_start < 0) {
                    run_start = i;
                    run_best = std::abs(p);
                    run_best_s = s;
                } else if (std::abs(p) < run_best) {
                    run_best = std::abs(p);
                    run_best_s = s;
                }
            }
            if (!hit && run_start >= 0) close_run(i);
            if (!hit && prev_p * p < 0.0 && std::abs(prev_p) > ridge_width) {
                // unsampled ridge crossing between two dead scan points
                const double root = bisect_root(pr, t, x, s - step, s, prev_p);
                add_center(root, a, b, step);
            }
            prev_p = p;
        }
        if (run_start >= 0) close_run(n);
    }

    // merge the inclusion intervals, then partition them at the cut points
    std::sort(intervals.begin(), intervals.end(),
              [](const Segment& u, const Segment& v) { return u.lo < v.lo; });
    std::vector<Segment> merged;
    for (const Segment& seg : intervals) {
        if (!(seg.hi > seg.lo)) continue;
        if (!merged.empty() && seg.lo <= merged.back().hi)
            merged.back().hi = std::max(merged.back().hi, seg.hi);
        else
            merged.push_back(seg);
    }
    std::sort(cuts.begin(), cuts.end());
    std::size_t ci = 0;
    for (const Segment& seg : merged) {
        double left = seg.lo;
        while (ci < cuts.size() && cuts[ci] <= left) ++ci;
        for (; ci < cuts.size() && cuts[ci] < seg.hi; ++ci) {
            if (cuts[ci] - left > 1e-14 * (1.0 + std::abs(left))) {
                ctx.segments.push_back({left, cuts[ci]});
                left = cuts[ci];
            }
        }
        ctx.segments.push_back({left, seg.hi});
    }

    ctx.shift = std::isfinite(max_log) ? max_log : 0.0;
    return ctx;
}

// shifted kernel weight: exp(log f0 - p^2/(2 sigma^2 t) - shift)
double shifted_weight(const SampledProfile& pr, const KernelContext& ctx,
                      double t, double x, double s) {
    const double f = pr.f0(s);
    if (f <= 0.0) return 0.0;
    const double p = kernel_arg(pr, t, x, s);
    return f * std::exp(-p * p * ctx.inv2var - ctx.shift);
}

struct PairResult {
    double den = 0.0; // shifted integral of f0 K
    double num = 0.0; // shifted integral of u0 f0 K
    KernelContext ctx;
};

PairResult integrate_pair(const SampledProfile& pr, double sigma, double t,
                          double x, const QuadratureSpec& spec, double lo,
                          double hi) {
    PairResult r;
    r.ctx = prepare_kernel(pr, sigma, t, x, spec, lo, hi);
    if (r.ctx.segments.empty()) return r;
    auto f = [&](double s) -> std::array<double, 2> {
        const double w = shifted_weight(pr, r.ctx, t, x, s);
        return {w, pr.u0(s) * w};
    };
    auto res = quadrature::integrate<2>(
        f, std::span<const Segment>(r.ctx.segments), spec.rel_tol, spec.abs_tol,
        spec.max_subdivisions);
    r.den = res.value[0];
    r.num = res.value[1];
    return r;
}

double unshift_density(const PairResult& r) {
    return r.ctx.prefactor * std::exp(r.ctx.shift) * r.den;
}

} // namespace

double density_rho(const SampledProfile& profile, double sigma, double t,
                   double x, const QuadratureSpec& spec) {
    const PairResult r = integrate_pair(profile, sigma, t, x, spec,
                                        profile.window_lo, profile.window_hi);
    return std::max(0.0, unshift_density(r));
}

namespace {

double uhat_impl(const SampledProfile& profile, double sigma, double t, double x,
                 const QuadratureSpec& spec, double lo, double hi) {
    if (t == 0.0) return profile.u0(x); // kernel degenerates; continuity fixes t=0
    const PairResult r = integrate_pair(profile, sigma, t, x, spec, lo, hi);
    if (!(r.den > kVacuumFloor)) throw VacuumError(t, x);
    return r.num / r.den;
}

} // namespace

double velocity_uhat(const SampledProfile& profile, double sigma, double t,
                     double x, const QuadratureSpec& spec) {
    return uhat_impl(profile, sigma, t, x, spec, profile.window_lo,
                     profile.window_hi);
}

double velocity_uhat_bounded(const SampledProfile& profile, double sigma,
                             double t, double x, double L,
                             const QuadratureSpec& spec) {
    if (!(L > 0.0)) throw std::invalid_argument("velocity_uhat_bounded: L must be > 0");
    const double lo = std::max(profile.window_lo, -L);
    const double hi = std::min(profile.window_hi, L);
    if (!(lo < hi))
        throw std::invalid_argument("velocity_uhat_bounded: [-L, L] misses the window");
    return uhat_impl(profile, sigma, t, x, spec, lo, hi);
}

double second_moment_R(const SampledProfile& profile, double sigma, double t,
                       double x, const QuadratureSpec& spec) {
    const PairResult r = integrate_pair(profile, sigma, t, x, spec,
                                        profile.window_lo, profile.window_hi);
    if (!(r.den > kVacuumFloor)) return 0.0;
    const double uhat = r.num / r.den;
    auto f = [&](double s) -> std::array<double, 1> {
        const double w = shifted_weight(profile, r.ctx, t, x, s);
        const double du = profile.u0(s) - uhat;
        return {du * du * w};
    };
    auto res = quadrature::integrate<1>(
        f, std::span<const Segment>(r.ctx.segments), spec.rel_tol, spec.abs_tol,
        spec.max_subdivisions);
    return std::max(0.0, r.ctx.prefactor * std::exp(r.ctx.shift) * res.value[0]);
}

namespace {

// (rho, rho*uhat, rho*E[u0^2]) in one pass; the third component is the
// total momentum flux rho*uhat^2 + R, which is what the balance law needs.
std::array<double, 3> conserved_fields(const SampledProfile& pr, double sigma,
                                       double t, double x,
                                       const QuadratureSpec& spec) {
    const KernelContext ctx =
        prepare_kernel(pr, sigma, t, x, spec, pr.window_lo, pr.window_hi);
    if (ctx.segments.empty()) return {0.0, 0.0, 0.0};
    auto f = [&](double s) -> std::array<double, 3> {
        const double w = shifted_weight(pr, ctx, t, x, s);
        const double u = pr.u0(s);
        return {w, u * w, u * u * w};
    };
    auto res = quadrature::integrate<3>(f, std::span<const Segment>(ctx.segments),
                                        spec.rel_tol, spec.abs_tol,
                                        spec.max_subdivisions);
    const double scale = ctx.prefactor * std::exp(ctx.shift);
    return {scale * res.value[0], scale * res.value[1], scale * res.value[2]};
}

} // namespace

std::pair<double, double> moment_residuals(const SampledProfile& profile,
                                           double sigma, double t, double x,
                                           const QuadratureSpec& spec, double h) {
    if (!(t > h && h > 0.0))
        throw std::invalid_argument("moment_residuals: need t > h > 0");

    const auto c = conserved_fields(profile, sigma, t, x, spec);
    const auto tp = conserved_fields(profile, sigma, t + h, x, spec);
    const auto tm = conserved_fields(profile, sigma, t - h, x, spec);
    const auto xp = conserved_fields(profile, sigma, t, x + h, spec);
    const auto xm = conserved_fields(profile, sigma, t, x - h, spec);

    const double half_diff = 0.5 * sigma * sigma;
    const double cont = (tp[0] - tm[0]) / (2.0 * h) + (xp[1] - xm[1]) / (2.0 * h) -
                        half_diff * (xp[0] - 2.0 * c[0] + xm[0]) / (h * h);
    const double mom = (tp[1] - tm[1]) / (2.0 * h) + (xp[2] - xm[2]) / (2.0 * h) -
                       half_diff * (xp[1] - 2.0 * c[1] + xm[1]) / (h * h);
    return {std::abs(cont), std::abs(mom)};
}

std::pair<double, double> moment_residuals(const SampledProfile& profile,
                                           double sigma, double t, double x,
                                           const QuadratureSpec& spec) {
    return moment_residuals(profile, sigma, t, x, spec, sigma / 10.0);
}

FieldSample field_sample(const SampledProfile& profile, double sigma, double t,
                         double x, const QuadratureSpec& spec) {
    const PairResult r = integrate_pair(profile, sigma, t, x, spec,
                                        profile.window_lo, profile.window_hi);
    FieldSample s;
    s.t = t;
    s.x = x;
    s.provenance = Provenance::quadrature;
    s.rho = std::max(0.0, unshift_density(r));
    if (!(r.den > kVacuumFloor)) throw VacuumError(t, x);
    s.u = r.num / r.den;
    s.p = 0.0;
    return s;
}

} // namespace pgd::exact_fields
