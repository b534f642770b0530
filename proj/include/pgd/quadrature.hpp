#pragma once

#include "pgd/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace pgd::quadrature {

/// Tolerances and budget for the adaptive kernel quadrature.
/// `truncation_radius` is measured in multiples of sigma*sqrt(t): the
/// Gaussian kernel is dropped beyond that distance from its ridge.
struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double truncation_radius = 10.0;
    int max_subdivisions = 4000;

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
            throw std::invalid_argument("QuadratureSpec: tolerances must be > 0");
        if (!(truncation_radius >= 6.0))
            throw std::invalid_argument("QuadratureSpec: truncation_radius >= 6 required");
        if (max_subdivisions < 64)
            throw std::invalid_argument("QuadratureSpec: max_subdivisions >= 64 required");
    }
};

struct Segment {
    double lo = 0.0;
    double hi = 0.0;
};

template <std::size_t N>
struct Result {
    std::array<double, N> value{};
    double error_estimate = 0.0;
    int panels = 0;
};

namespace detail {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 constants)
inline constexpr std::array<double, 8> kXgk = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr std::array<double, 8> kWgk = {
    0.02293532201052922, 0.06309209262997855, 0.10479001032225018,
    0.14065325971552592, 0.16900472663926790, 0.19035057806478540,
    0.20443294007529889, 0.20948214108472782};
inline constexpr std::array<double, 4> kWg = {
    0.12948496616886969, 0.27970539148927667, 0.38183005050511894,
    0.41795918367346938};

template <std::size_t N, class F>
void gk15(F& f, double a, double b, std::array<double, N>& kronrod, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    std::array<double, N> resk{};
    std::array<double, N> resg{};
    for (int j = 0; j < 8; ++j) {
        const double dx = h * kXgk[j];
        std::array<double, N> fsum = f(c - dx);
        if (j < 7) {
            const std::array<double, N> fr = f(c + dx);
            for (std::size_t i = 0; i < N; ++i) fsum[i] += fr[i];
        }
        for (std::size_t i = 0; i < N; ++i) resk[i] += kWgk[j] * fsum[i];
        // odd Kronrod indices coincide with the embedded Gauss nodes
        if (j % 2 == 1)
            for (std::size_t i = 0; i < N; ++i) resg[i] += kWg[j / 2] * fsum[i];
    }
    err = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        kronrod[i] = resk[i] * h;
        err = std::max(err, std::abs((resk[i] - resg[i]) * h));
    }
}

} // namespace detail

/// Adaptive GK7-15 over a union of segments for a small vector integrand
/// (components share panels, so ratios of components stay consistent).
/// Throws AccuracyError when the panel budget runs out before the
/// tolerance is met.
template <std::size_t N, class F>
Result<N> integrate(F&& f, std::span<const Segment> segments, double rel_tol,
                    double abs_tol, int max_panels) {
    struct Panel {
        double a, b, err;
        std::array<double, N> val;
        bool operator<(const Panel& o) const { return err < o.err; }
    };

    std::vector<Panel> heap;
    std::array<double, N> total{};
    double total_err = 0.0;

    auto push = [&](Panel p) {
        for (std::size_t i = 0; i < N; ++i) total[i] += p.val[i];
        total_err += p.err;
        heap.push_back(p);
        std::push_heap(heap.begin(), heap.end());
    };
    auto pop = [&]() {
        std::pop_heap(heap.begin(), heap.end());
        Panel p = heap.back();
        heap.pop_back();
        for (std::size_t i = 0; i < N; ++i) total[i] -= p.val[i];
        total_err -= p.err;
        return p;
    };

    for (const Segment& seg : segments) {
        if (!(seg.hi > seg.lo)) continue;
        Panel p{seg.lo, seg.hi, 0.0, {}};
        detail::gk15<N>(f, p.a, p.b, p.val, p.err);
        push(p);
    }

    auto finalize = [&]() {
        Result<N> r;
        r.panels = static_cast<int>(heap.size());
        double err = 0.0;
        for (const Panel& p : heap) {
            for (std::size_t i = 0; i < N; ++i) r.value[i] += p.val[i];
            err += p.err;
        }
        r.error_estimate = err;
        return r;
    };

    while (true) {
        double scale = abs_tol;
        for (std::size_t i = 0; i < N; ++i)
            scale = std::max(scale, rel_tol * std::abs(total[i]));
        if (total_err <= scale || heap.empty())
            return finalize();
        if (static_cast<int>(heap.size()) >= max_panels) {
            Result<N> r = finalize();
            throw AccuracyError("quadrature: panel budget exhausted",
                                r.error_estimate, r.panels);
        }

        Panel worst = pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // interval at rounding resolution; accept as converged
            worst.err = 0.0;
            push(worst);
            continue;
        }
        Panel left{worst.a, mid, 0.0, {}};
        Panel right{mid, worst.b, 0.0, {}};
        detail::gk15<N>(f, left.a, left.b, left.val, left.err);
        detail::gk15<N>(f, right.a, right.b, right.val, right.err);
        push(left);
        push(right);
    }
}

template <std::size_t N, class F>
Result<N> integrate(F&& f, Segment segment, double rel_tol, double abs_tol,
                    int max_panels) {
    const std::array<Segment, 1> segs{segment};
    return integrate<N>(std::forward<F>(f), std::span<const Segment>(segs),
                        rel_tol, abs_tol, max_panels);
}

} // namespace pgd::quadrature
