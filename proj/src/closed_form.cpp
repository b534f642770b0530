#include "pgd/closed_form.hpp"

#include "pgd/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace pgd::closed_form {

namespace {

constexpr double kVacuumFloor = 1e-300;

struct RampIntegrals {
    double I1 = 0.0;
    double I2 = 0.0;
};

// Kernel integrals over the ramp s in [-eps, eps], in coordinates relative
// to x0. I1 carries f0; I2 carries (u0 - u1) f0, so that the full kernel
// numerator is u1 rho + u2 (f1+f2) Phi(-C+/...) + I2.
RampIntegrals ramp_integrals(const SmoothedRiemannData& data, double sigma,
                             double t, double x_rel, const QuadratureSpec& spec) {
    const RiemannData& b = data.base;
    const double eps = data.eps;
    const double inv2var = 1.0 / (2.0 * sigma * sigma * t);
    const double prefactor = 1.0 / (std::sqrt(2.0 * std::numbers::pi * t) * sigma);

    auto u0 = [&](double s) { return b.u2 / (2.0 * eps) * s + b.u1 + 0.5 * b.u2; };
    auto f0 = [&](double s) { return b.f2 / (2.0 * eps) * s + b.f1 + 0.5 * b.f2; };
    auto parg = [&](double s) { return u0(s) * t + s - x_rel; };

    // log shift from a scan of the ramp
    double shift = -std::numeric_limits<double>::infinity();
    const int n = 128;
    for (int i = 0; i <= n; ++i) {
        const double s = -eps + 2.0 * eps * i / n;
        const double p = parg(s);
        const double f = f0(s);
        if (f > 0.0) shift = std::max(shift, std::log(f) - p * p * inv2var);
    }
    if (!std::isfinite(shift)) return {};

    // p is affine on the ramp, so the kernel ridge location and width are
    // explicit; seed panel boundaries on a geometric ladder of the bump
    // width so a ridge far narrower than the ramp stays visible
    const double slope = 1.0 + t * b.u2 / (2.0 * eps);
    const double bump_w =
        std::abs(slope) > 0.0 ? sigma * std::sqrt(t) / std::abs(slope)
                              : std::numeric_limits<double>::infinity();
    std::vector<double> cut_points{-eps, eps};
    auto add_ladder = [&](double c) {
        if (f0(c) > 0.0) shift = std::max(shift, std::log(f0(c)) -
                                                     parg(c) * parg(c) * inv2var);
        for (double m = bump_w; m < 2.0 * eps; m *= 2.0) {
            cut_points.push_back(c - m);
            cut_points.push_back(c + m);
        }
        cut_points.push_back(c);
    };
    if (std::isfinite(bump_w) && bump_w < eps) {
        if (std::abs(slope) > 0.0) {
            const double root = (x_rel - (b.u1 + 0.5 * b.u2) * t) / slope;
            if (std::abs(root) < eps) add_ladder(root);
        }
        add_ladder(-eps);
        add_ladder(eps);
    }
    std::sort(cut_points.begin(), cut_points.end());
    std::vector<quadrature::Segment> segs;
    double left = -eps;
    for (double c : cut_points) {
        if (c <= -eps || c >= eps) continue;
        if (c - left > 1e-16 * eps) {
            segs.push_back({left, c});
            left = c;
        }
    }
    segs.push_back({left, eps});

    auto f = [&](double s) -> std::array<double, 2> {
        const double fv = f0(s);
        if (fv <= 0.0) return {0.0, 0.0};
        const double p = parg(s);
        const double w = fv * std::exp(-p * p * inv2var - shift);
        return {w, (u0(s) - b.u1) * w};
    };
    auto res = quadrature::integrate<2>(f, std::span<const quadrature::Segment>(segs),
                                        spec.rel_tol, spec.abs_tol,
                                        spec.max_subdivisions);
    const double scale = prefactor * std::exp(shift);
    return {scale * res.value[0], scale * res.value[1]};
}

struct PhiTerms {
    double left = 0.0;  // f1 Phi(C-/(sigma sqrt t))
    double right = 0.0; // (f1+f2) Phi(-C+/(sigma sqrt t))
};

PhiTerms phi_terms(const SmoothedRiemannData& data, double sigma, double t,
                   double x_rel) {
    const RiemannData& b = data.base;
    const double st = sigma * std::sqrt(t);
    const double c_minus = b.u1 * t - x_rel - data.eps;
    const double c_plus = (b.u1 + b.u2) * t - x_rel + data.eps;
    return {b.f1 * gauss_cdf(c_minus / st),
            (b.f1 + b.f2) * gauss_cdf(-c_plus / st)};
}

void check_args(const SmoothedRiemannData& data, double sigma, double t) {
    data.validate();
    if (!(sigma > 0.0)) throw std::invalid_argument("closed_form: sigma must be > 0");
    if (!(t > 0.0)) throw std::invalid_argument("closed_form: t must be > 0");
}

} // namespace

RampCorrection ramp_correction(const SmoothedRiemannData& data, double sigma,
                               double t, double x, const QuadratureSpec& spec) {
    check_args(data, sigma, t);
    spec.validate();
    const RiemannData& b = data.base;
    const double x_rel = x - b.x0;
    const RampIntegrals ri = ramp_integrals(data, sigma, t, x_rel, spec);
    RampCorrection rc;
    rc.I1 = ri.I1;
    rc.I2 = ri.I2;
    rc.ratio_N_over_F =
        0.5 * b.u2 +
        b.u2 / (b.u2 * t + 2.0 * data.eps) * (x_rel - (b.u1 + 0.5 * b.u2) * t);
    return rc;
}

double rho_eps(const SmoothedRiemannData& data, double sigma, double t,
               double x, const QuadratureSpec& spec) {
    check_args(data, sigma, t);
    spec.validate();
    const double x_rel = x - data.base.x0;
    const PhiTerms pt = phi_terms(data, sigma, t, x_rel);
    const RampIntegrals ri = ramp_integrals(data, sigma, t, x_rel, spec);
    return pt.left + pt.right + ri.I1;
}

double uhat_eps(const SmoothedRiemannData& data, double sigma, double t,
                double x, const QuadratureSpec& spec) {
    check_args(data, sigma, t);
    spec.validate();
    const RiemannData& b = data.base;
    const double x_rel = x - b.x0;
    const PhiTerms pt = phi_terms(data, sigma, t, x_rel);
    const RampIntegrals ri = ramp_integrals(data, sigma, t, x_rel, spec);
    const double den = pt.left + pt.right + ri.I1;
    if (!(den > kVacuumFloor)) throw VacuumError(t, x);
    return b.u1 + (b.u2 * pt.right + ri.I2) / den;
}

std::pair<double, double> limit_sigma_fields(const SmoothedRiemannData& data,
                                             double t, double x) {
    data.validate();
    if (!(t > 0.0)) throw std::invalid_argument("limit_sigma_fields: t must be > 0");
    const RiemannData& b = data.base;
    const double eps = data.eps;
    const double x_rel = x - b.x0;

    double mass = 0.0;
    double mom = 0.0;
    auto add_stream = [&](double rho, double u) {
        mass += rho;
        mom += rho * u;
    };

    // left stream: constant state transported at u1
    const double s_left = x_rel - b.u1 * t;
    if (s_left <= -eps) add_stream(b.f1, b.u1);

    // right stream: constant state transported at u1 + u2
    const double s_right = x_rel - (b.u1 + b.u2) * t;
    if (s_right >= eps) add_stream(b.f1 + b.f2, b.u1 + b.u2);

    // ramp stream: the linearly interpolating piece; its Jacobian is
    // (2 eps + u2 t)/(2 eps), which vanishes at the focusing time
    const double denom = 2.0 * eps + b.u2 * t;
    if (denom == 0.0) {
        if (x_rel == (b.u1 + 0.5 * b.u2) * t)
            return {std::numeric_limits<double>::infinity(),
                    b.u1 + 0.5 * b.u2};
    } else {
        const double s_ramp = 2.0 * eps * (x_rel - (b.u1 + 0.5 * b.u2) * t) / denom;
        if (std::abs(s_ramp) < eps) {
            const double f = b.f2 / (2.0 * eps) * s_ramp + b.f1 + 0.5 * b.f2;
            const double u = b.u2 / (2.0 * eps) * s_ramp + b.u1 + 0.5 * b.u2;
            add_stream(f * std::abs(2.0 * eps / denom), u);
        }
    }

    if (!(mass > 0.0)) return {0.0, b.u1};
    return {mass, mom / mass};
}

} // namespace pgd::closed_form
