#include "pgd/model.hpp"

#include "pgd/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pgd {

void RiemannData::validate() const {
    if (!(f1 > 0.0))
        throw std::invalid_argument("RiemannData: f1 must be > 0");
    if (!(f1 + f2 > 0.0))
        throw std::invalid_argument("RiemannData: f1 + f2 must be > 0");
    if (!std::isfinite(x0))
        throw std::invalid_argument("RiemannData: x0 must be finite");
}

void SmoothedRiemannData::validate() const {
    base.validate();
    if (!(eps > 0.0))
        throw std::invalid_argument("SmoothedRiemannData: eps must be > 0");
}

SampledProfile make_profile(std::function<double(double)> u0,
                            std::function<double(double)> f0,
                            double window_lo, double window_hi,
                            bool f0_integrable,
                            std::vector<double> breakpoints) {
    if (!(window_lo < window_hi))
        throw std::invalid_argument("SampledProfile: empty window");
    SampledProfile p;
    p.u0 = std::move(u0);
    p.f0 = std::move(f0);
    p.window_lo = window_lo;
    p.window_hi = window_hi;
    p.f0_integrable = f0_integrable;
    std::sort(breakpoints.begin(), breakpoints.end());
    std::erase_if(breakpoints,
                  [&](double b) { return b <= window_lo || b >= window_hi; });
    p.breakpoints = std::move(breakpoints);

    constexpr int n = 4096;
    double umin = std::numeric_limits<double>::infinity();
    double umax = -umin;
    const double step = (window_hi - window_lo) / n;
    for (int i = 0; i <= n; ++i) {
        const double s = window_lo + i * step;
        const double u = p.u0(s);
        const double f = p.f0(s);
        if (!std::isfinite(u) || !std::isfinite(f))
            throw std::invalid_argument("SampledProfile: u0/f0 not finite on window");
        if (f < 0.0)
            throw std::invalid_argument("SampledProfile: f0 < 0 on window");
        umin = std::min(umin, u);
        umax = std::max(umax, u);
    }
    p.u0_min = umin;
    p.u0_max = umax;
    return p;
}

SampledProfile make_riemann_profile(const RiemannData& data, double half_width) {
    data.validate();
    return make_profile(
        [data](double s) { return eval_riemann_initial(data, s).second; },
        [data](double s) { return eval_riemann_initial(data, s).first; },
        data.x0 - half_width, data.x0 + half_width,
        /*f0_integrable=*/true, {data.x0});
}

SampledProfile make_smoothed_profile(const SmoothedRiemannData& data,
                                     double half_width) {
    data.validate();
    const double x0 = data.base.x0;
    return make_profile(
        [data](double s) { return eval_smoothed_initial(data, s).second; },
        [data](double s) { return eval_smoothed_initial(data, s).first; },
        x0 - half_width, x0 + half_width,
        /*f0_integrable=*/true, {x0 - data.eps, x0 + data.eps});
}

SampledProfile make_tanh_profile(const RiemannData& data, double eps,
                                 double half_width) {
    data.validate();
    if (!(eps > 0.0))
        throw std::invalid_argument("make_tanh_profile: eps must be > 0");
    const double x0 = data.x0;
    auto ramp = [x0, eps](double s) { return 0.5 * (1.0 + std::tanh((s - x0) / eps)); };
    // tanh is flat to double precision beyond ~25 widths; mark that zone so
    // the quadrature scanner resolves it regardless of window size
    return make_profile(
        [data, ramp](double s) { return data.u1 + data.u2 * ramp(s); },
        [data, ramp](double s) { return data.f1 + data.f2 * ramp(s); },
        x0 - half_width, x0 + half_width,
        /*f0_integrable=*/true, {x0 - 25.0 * eps, x0, x0 + 25.0 * eps});
}

const char* to_string(Provenance p) {
    switch (p) {
    case Provenance::quadrature: return "quadrature";
    case Provenance::closed_form: return "closed_form";
    case Provenance::limit: return "limit";
    case Provenance::monte_carlo: return "monte_carlo";
    }
    return "unknown";
}

std::pair<double, double> eval_riemann_initial(const RiemannData& data, double x) {
    if (x < data.x0) return {data.f1, data.u1};
    if (x > data.x0) return {data.f1 + data.f2, data.u1 + data.u2};
    return {data.f1 + 0.5 * data.f2, data.u1 + 0.5 * data.u2};
}

std::pair<double, double> eval_smoothed_initial(const SmoothedRiemannData& data,
                                                double x) {
    data.validate();
    const RiemannData& b = data.base;
    const double z = x - b.x0;
    if (z <= -data.eps) return {b.f1, b.u1};
    if (z >= data.eps) return {b.f1 + b.f2, b.u1 + b.u2};
    const double r = z / (2.0 * data.eps);
    return {b.f2 * r + b.f1 + 0.5 * b.f2, b.u2 * r + b.u1 + 0.5 * b.u2};
}

double gauss_cdf(double alpha) {
    return 0.5 * std::erfc(-alpha / std::sqrt(2.0));
}

std::map<std::string, double> to_kv(const RiemannData& data) {
    return {{"f1", data.f1}, {"f2", data.f2}, {"u1", data.u1},
            {"u2", data.u2}, {"x0", data.x0}};
}

std::map<std::string, double> to_kv(const SmoothedRiemannData& data) {
    auto kv = to_kv(data.base);
    kv["eps"] = data.eps;
    return kv;
}

namespace {
double require_key(const std::map<std::string, double>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end())
        throw ConfigError("missing key '" + key + "'", 0, key);
    return it->second;
}
} // namespace

RiemannData riemann_from_kv(const std::map<std::string, double>& kv) {
    RiemannData d;
    d.f1 = require_key(kv, "f1");
    d.f2 = require_key(kv, "f2");
    d.u1 = require_key(kv, "u1");
    d.u2 = require_key(kv, "u2");
    if (auto it = kv.find("x0"); it != kv.end()) d.x0 = it->second;
    d.validate();
    return d;
}

SmoothedRiemannData smoothed_from_kv(const std::map<std::string, double>& kv) {
    SmoothedRiemannData d;
    d.base = riemann_from_kv(kv);
    d.eps = require_key(kv, "eps");
    d.validate();
    return d;
}

} // namespace pgd
