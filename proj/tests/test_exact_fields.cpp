#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgd/errors.hpp"
#include "pgd/exact_fields.hpp"
#include "pgd/quadrature.hpp"

#include <cmath>
#include <random>

using namespace pgd;
using exact_fields::QuadratureSpec;

namespace {

SampledProfile constant_profile(double f, double v, double half = 50.0) {
    return make_profile([v](double) { return v; }, [f](double) { return f; },
                        -half, half, false);
}

SampledProfile affine_profile(double half = 100.0) {
    return make_profile([](double s) { return -s; }, [](double) { return 1.0; },
                        -half, half, false);
}

// brute-force trapezoid oracle for the kernel integrals, independent of the
// adaptive quadrature path
struct BruteFields {
    double rho, uhat, R;
};

BruteFields brute_force(const SampledProfile& pr, double sigma, double t,
                        double x, double lo, double hi, int n) {
    const double pref = 1.0 / (std::sqrt(2.0 * std::acos(-1.0) * t) * sigma);
    const double h = (hi - lo) / n;
    double den = 0.0, num = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double s = lo + i * h;
        const double p = pr.u0(s) * t + s - x;
        const double w = pr.f0(s) * std::exp(-p * p / (2.0 * sigma * sigma * t)) *
                         (i == 0 || i == n ? 0.5 : 1.0);
        den += w;
        num += pr.u0(s) * w;
    }
    const double uhat = num / den;
    double mom2 = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double s = lo + i * h;
        const double p = pr.u0(s) * t + s - x;
        const double du = pr.u0(s) - uhat;
        mom2 += pr.f0(s) * du * du *
                std::exp(-p * p / (2.0 * sigma * sigma * t)) *
                (i == 0 || i == n ? 0.5 : 1.0);
    }
    return {pref * den * h, uhat, pref * mom2 * h};
}

} // namespace

TEST_CASE("constant data: the kernel is a probability kernel") {
    const auto pr = constant_profile(1.7, 0.4);
    for (double sigma : {0.05, 0.5}) {
        for (double t : {0.2, 1.0, 3.0}) {
            CHECK(exact_fields::density_rho(pr, sigma, t, 0.3) ==
                  doctest::Approx(1.7).epsilon(1e-9));
            CHECK(exact_fields::velocity_uhat(pr, sigma, t, -1.2) ==
                  doctest::Approx(0.4).epsilon(1e-12));
        }
    }
}

TEST_CASE("affine data has sigma-independent closed forms") {
    const auto pr = affine_profile();
    // rho = 1/(1-t), uhat = -x/(1-t)
    for (double sigma : {0.3, 0.05}) {
        CHECK(exact_fields::density_rho(pr, sigma, 0.5, 0.7) ==
              doctest::Approx(2.0).epsilon(1e-9));
        CHECK(exact_fields::velocity_uhat(pr, sigma, 0.5, 1.0) ==
              doctest::Approx(-2.0).epsilon(1e-9));
    }
    CHECK(exact_fields::velocity_uhat_bounded(pr, 0.3, 0.5, 1.0, 50.0) ==
          doctest::Approx(-2.0).epsilon(1e-9));
    // constant u0 under the bounded definition
    const auto cpr = constant_profile(1.0, 0.9);
    CHECK(exact_fields::velocity_uhat_bounded(cpr, 0.2, 1.0, 0.0, 10.0) ==
          doctest::Approx(0.9).epsilon(1e-12));
}

TEST_CASE("symmetric smoothed step pins the midpoint density") {
    const auto pr = make_smoothed_profile({{1.0, 1.0, 1.0, 0.0, 0.0}, 1e-6});
    CHECK(exact_fields::density_rho(pr, 0.1, 1.0, 1.0) ==
          doctest::Approx(1.5).epsilon(1e-4));
}

TEST_CASE("kernel fields match a frozen high-precision oracle") {
    // independent oracle values (40-digit quadrature) for
    // data (1,1,1,-1,0), eps = 0.1, sigma = 0.25, t = 0.8, x = 0.3
    const auto pr = make_smoothed_profile({{1.0, 1.0, 1.0, -1.0, 0.0}, 0.1});
    QuadratureSpec spec;
    spec.rel_tol = 1e-12;
    spec.abs_tol = 1e-14;
    CHECK(exact_fields::density_rho(pr, 0.25, 0.8, 0.3, spec) ==
          doctest::Approx(3.0008918812676709).epsilon(1e-10));
    CHECK(exact_fields::velocity_uhat(pr, 0.25, 0.8, 0.3, spec) ==
          doctest::Approx(0.37318319083516081).epsilon(1e-10));
    CHECK(exact_fields::second_moment_R(pr, 0.25, 0.8, 0.3, spec) ==
          doctest::Approx(0.62904124109410550).epsilon(1e-9));
}

TEST_CASE("kernel fields match an in-test trapezoid oracle") {
    const auto pr = make_smoothed_profile({{1.2, 0.6, -0.3, 0.9, 0.0}, 0.15});
    const double sigma = 0.2, t = 0.6, x = -0.4;
    const auto ref = brute_force(pr, sigma, t, x, -8.0, 8.0, 400000);
    CHECK(exact_fields::density_rho(pr, sigma, t, x) ==
          doctest::Approx(ref.rho).epsilon(1e-7));
    CHECK(exact_fields::velocity_uhat(pr, sigma, t, x) ==
          doctest::Approx(ref.uhat).epsilon(1e-7));
    CHECK(exact_fields::second_moment_R(pr, sigma, t, x) ==
          doctest::Approx(ref.R).epsilon(1e-6));
}

TEST_CASE("overlap plateau values at small sigma") {
    const auto pr = make_smoothed_profile({{1.0, 1.0, 1.0, -1.0, 0.0}, 1e-4});
    // case-2 plateau: u1 + (f1+f2) u2/(2 f1+f2) = 1/3 at x inside (0, 1)
    CHECK(exact_fields::velocity_uhat(pr, 1e-3, 1.0, 0.5) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-2));
    // R converges to the spurious pressure 2/3 on the plateau
    CHECK(exact_fields::second_moment_R(pr, 1e-3, 1.0, 0.5) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-2));
    // single-stream region: variance vanishes
    CHECK(exact_fields::second_moment_R(pr, 1e-3, 1.0, -5.0) < 1e-6);
    // u0 constant => R identically zero
    CHECK(exact_fields::second_moment_R(constant_profile(2.0, 1.0), 0.3, 1.0, 0.7) ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("uhat is a convex combination of initial velocities") {
    const auto smooth = make_smoothed_profile({{1.0, 1.0, 0.2, -1.4, 0.0}, 0.05});
    const auto sine = make_profile([](double s) { return std::sin(s); },
                                   [](double) { return 1.0; }, -40.0, 40.0, false);
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> usig(0.01, 0.5);
    std::uniform_real_distribution<double> ut(0.05, 2.0);
    std::uniform_real_distribution<double> ux(-3.0, 3.0);
    for (int k = 0; k < 500; ++k) {
        const double sigma = usig(gen), t = ut(gen), x = ux(gen);
        const double u1 = exact_fields::velocity_uhat(smooth, sigma, t, x);
        CHECK(u1 >= smooth.u0_min - 1e-9);
        CHECK(u1 <= smooth.u0_max + 1e-9);
        const double u2 = exact_fields::velocity_uhat_bounded(sine, sigma, t, x, 30.0);
        CHECK(u2 >= sine.u0_min - 1e-9);
        CHECK(u2 <= sine.u0_max + 1e-9);
    }
}

TEST_CASE("deep vacuum raises VacuumError; density reports zero") {
    // raw Heaviside data, u2 > 0: the fan interior is a true vacuum
    const auto pr = make_riemann_profile({1.0, 1.0, 1.0, 1.0, 0.0});
    CHECK(exact_fields::density_rho(pr, 1e-3, 1.0, 1.5) == 0.0);
    CHECK_THROWS_AS(exact_fields::velocity_uhat(pr, 1e-3, 1.0, 1.5), VacuumError);
}

TEST_CASE("uhat at t = 0 degenerates to the initial velocity") {
    const auto pr = make_smoothed_profile({{1.0, 1.0, 1.0, -1.0, 0.0}, 0.1});
    CHECK(exact_fields::velocity_uhat(pr, 0.1, 0.0, 0.04) == pr.u0(0.04));
}

TEST_CASE("bounded and unbounded mean velocity agree for integrable f0") {
    const auto pr = make_smoothed_profile({{1.0, 1.0, 1.0, -1.0, 0.0}, 0.1}, 15.0);
    const double a = exact_fields::velocity_uhat(pr, 0.2, 0.8, 0.3);
    const double b = exact_fields::velocity_uhat_bounded(pr, 0.2, 0.8, 0.3, 20.0);
    CHECK(a == doctest::Approx(b).epsilon(1e-10));
}

TEST_CASE("mass over a wide window changes only by the boundary fluxes") {
    const RiemannData data{1.0, 1.0, 0.3, -0.8, 0.0};
    const auto pr = make_smoothed_profile({data, 0.1});
    const double sigma = 0.4;
    const double influx =
        (data.f1 + data.f2) * (data.u1 + data.u2) - data.f1 * data.u1;
    auto window_mass = [&](double t) {
        auto f = [&](double x) {
            return std::array<double, 1>{exact_fields::density_rho(pr, sigma, t, x)};
        };
        return quadrature::integrate<1>(f, quadrature::Segment{-8.0, 8.0}, 1e-9,
                                        1e-9, 3000)
            .value[0];
    };
    const double c1 = window_mass(0.4) + 0.4 * influx;
    const double c2 = window_mass(1.0) + 1.0 * influx;
    CHECK(c1 == doctest::Approx(c2).epsilon(1e-6));
}

TEST_CASE("moment residuals vanish for constant data and are O(h^2)") {
    QuadratureSpec tight;
    tight.rel_tol = 1e-12;
    tight.abs_tol = 1e-14;

    const auto cpr = constant_profile(2.0, 0.5);
    const auto res0 = exact_fields::moment_residuals(cpr, 0.4, 1.0, 0.2, tight, 0.01);
    CHECK(res0.first < 1e-8);
    CHECK(res0.second < 1e-8);

    // Richardson ratio on smoothed Riemann data: halving h divides both
    // residuals by about four
    const auto pr = make_smoothed_profile({{1.0, 1.0, 1.0, -1.0, 0.0}, 0.1});
    const auto coarse = exact_fields::moment_residuals(pr, 0.5, 1.0, 0.3, tight, 0.02);
    const auto fine = exact_fields::moment_residuals(pr, 0.5, 1.0, 0.3, tight, 0.01);
    CHECK(coarse.first / fine.first == doctest::Approx(4.0).epsilon(0.15));
    CHECK(coarse.second / fine.second == doctest::Approx(4.0).epsilon(0.15));

    // analytic affine case: residual is pure truncation noise
    const auto apr = affine_profile();
    const auto ares = exact_fields::moment_residuals(apr, 0.3, 0.5, 1.0, tight, 2e-4);
    CHECK(ares.first < 1e-6);

    CHECK_THROWS_AS(
        exact_fields::moment_residuals(pr, 0.5, 0.01, 0.3, tight, 0.02),
        std::invalid_argument);
}

TEST_CASE("preconditions are rejected") {
    const auto pr = constant_profile(1.0, 0.0);
    CHECK_THROWS_AS(exact_fields::density_rho(pr, 0.0, 1.0, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(exact_fields::density_rho(pr, 0.1, 0.0, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(exact_fields::velocity_uhat_bounded(pr, 0.1, 1.0, 0.0, -1.0),
                    std::invalid_argument);
}
