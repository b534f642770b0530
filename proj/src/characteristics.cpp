#include "pgd/characteristics.hpp"

#include "pgd/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pgd::characteristics {

namespace {

double slope(const SampledProfile& profile, double s, double h) {
    return (profile.u0(s + h) - profile.u0(s - h)) / (2.0 * h);
}

} // namespace

double breakdown_time(const SampledProfile& profile, int samples) {
    if (samples < 8) throw std::invalid_argument("breakdown_time: too few samples");
    const double h = (profile.window_hi - profile.window_lo) / samples;
    double min_slope = 0.0;
    for (int i = 1; i < samples; ++i) {
        const double s = profile.window_lo + i * h;
        min_slope = std::min(min_slope, slope(profile, s, h));
    }
    if (min_slope >= 0.0) return std::numeric_limits<double>::infinity();
    return -1.0 / min_slope;
}

CharacteristicSolve solve_implicit_s0(const SampledProfile& profile, double t,
                                      double x, double tol) {
    if (!(t >= 0.0)) throw std::invalid_argument("solve_implicit_s0: t must be >= 0");
    if (!(tol > 0.0)) throw std::invalid_argument("solve_implicit_s0: tol must be > 0");

    const double t_star = breakdown_time(profile);
    if (t >= t_star) throw BreakdownError(t, t_star);

    const double dh =
        (profile.window_hi - profile.window_lo) / 4096.0;

    if (t == 0.0) return {x, 1.0, 0};

    auto g = [&](double s) { return profile.u0(s) * t + s - x; };

    // g is strictly increasing before breakdown, so a velocity-bound
    // bracket plus bisection safeguards Newton completely
    double lo = x - t * profile.u0_max - dh;
    double hi = x - t * profile.u0_min + dh;
    double glo = g(lo);
    double ghi = g(hi);
    for (int grow = 0; (glo > 0.0 || ghi < 0.0) && grow < 64; ++grow) {
        const double w = hi - lo;
        if (glo > 0.0) { lo -= w; glo = g(lo); }
        if (ghi < 0.0) { hi += w; ghi = g(hi); }
    }
    if (glo > 0.0 || ghi < 0.0)
        throw std::logic_error("solve_implicit_s0: failed to bracket the root");

    double s = x - t * profile.u0(x); // one fixed-point step as the start
    s = std::clamp(s, lo, hi);
    int iterations = 0;
    double gs = g(s);
    while (std::abs(gs) > tol && iterations < 200) {
        ++iterations;
        if (gs > 0.0) hi = s; else lo = s;
        const double deriv = 1.0 + t * slope(profile, s, dh);
        double next = deriv > 0.0 ? s - gs / deriv : lo - 1.0;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        s = next;
        gs = g(s);
    }
    if (std::abs(gs) > tol)
        throw std::logic_error("solve_implicit_s0: did not converge");
    return {s, 1.0 + t * slope(profile, s, dh), iterations};
}

double classical_solution(const SampledProfile& profile, double t, double x,
                          double tol) {
    if (t == 0.0) return profile.u0(x);
    return profile.u0(solve_implicit_s0(profile, t, x, tol).s0);
}

} // namespace pgd::characteristics
