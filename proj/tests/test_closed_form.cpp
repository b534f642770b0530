#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgd/closed_form.hpp"
#include "pgd/exact_fields.hpp"

#include <cmath>
#include <random>

using namespace pgd;
using closed_form::QuadratureSpec;

TEST_CASE("deep one-sided states are exact") {
    const SmoothedRiemannData d{{1.0, 1.0, 1.0, -1.0, 0.0}, 0.1};
    // sigma sqrt(t) = 0.05, distances ~4: Phi arguments are huge
    CHECK(closed_form::rho_eps(d, 0.05, 1.0, -4.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(closed_form::uhat_eps(d, 0.05, 1.0, -4.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(closed_form::rho_eps(d, 0.05, 1.0, 5.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(closed_form::uhat_eps(d, 0.05, 1.0, 5.0)) < 1e-12);
}

TEST_CASE("symmetric contact midpoint for u2 = 0") {
    const SmoothedRiemannData d{{1.0, 1.0, 1.0, 0.0, 0.0}, 1e-6};
    CHECK(closed_form::rho_eps(d, 0.1, 1.0, 1.0) == doctest::Approx(1.5).epsilon(1e-4));
}

TEST_CASE("closed form equals kernel quadrature pointwise") {
    const SmoothedRiemannData d{{1.0, 1.0, 1.0, -1.0, 0.0}, 0.1};
    const auto pr = make_smoothed_profile(d);
    QuadratureSpec spec;
    spec.rel_tol = 1e-11;
    spec.abs_tol = 1e-14;
    const double rho_cf = closed_form::rho_eps(d, 0.05, 1.0, 0.5, spec);
    const double rho_q = exact_fields::density_rho(pr, 0.05, 1.0, 0.5, spec);
    CHECK(rho_cf == doctest::Approx(rho_q).epsilon(1e-8));
    const double u_cf = closed_form::uhat_eps(d, 0.05, 1.0, 0.5, spec);
    const double u_q = exact_fields::velocity_uhat(pr, 0.05, 1.0, 0.5, spec);
    CHECK(u_cf == doctest::Approx(u_q).epsilon(1e-8));
}

TEST_CASE("closed form equals quadrature on a random grid") {
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> uf1(0.5, 2.0);
    std::uniform_real_distribution<double> uu(-1.0, 1.0);
    std::uniform_real_distribution<double> ueps(0.05, 0.2);
    std::uniform_real_distribution<double> usig(0.05, 0.3);

    RiemannData base;
    base.f1 = uf1(gen);
    base.f2 = 0.8;
    base.u1 = uu(gen);
    base.u2 = -1.1;
    const SmoothedRiemannData d{base, ueps(gen)};
    const double sigma = usig(gen);
    const auto pr = make_smoothed_profile(d);

    double worst = 0.0;
    for (int it = 0; it < 10; ++it) {
        const double t = 0.2 + 0.13 * it;
        for (int ix = 0; ix < 10; ++ix) {
            const double x = -3.0 + 6.0 * ix / 9.0;
            worst = std::max(worst,
                             std::abs(closed_form::rho_eps(d, sigma, t, x) -
                                      exact_fields::density_rho(pr, sigma, t, x)));
            worst = std::max(worst,
                             std::abs(closed_form::uhat_eps(d, sigma, t, x) -
                                      exact_fields::velocity_uhat(pr, sigma, t, x)));
        }
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("a shifted jump location translates the fields") {
    const SmoothedRiemannData centered{{1.0, 1.0, 0.0, -1.0, 0.0}, 0.1};
    const SmoothedRiemannData shifted{{1.0, 1.0, 0.0, -1.0, 2.0}, 0.1};
    for (double x : {-1.3, -0.4, 0.7}) {
        CHECK(closed_form::rho_eps(shifted, 0.05, 1.0, x + 2.0) ==
              doctest::Approx(closed_form::rho_eps(centered, 0.05, 1.0, x))
                  .epsilon(1e-12));
        CHECK(closed_form::uhat_eps(shifted, 0.05, 1.0, x + 2.0) ==
              doctest::Approx(closed_form::uhat_eps(centered, 0.05, 1.0, x))
                  .epsilon(1e-12));
    }
}

TEST_CASE("ramp corrections vanish as eps -> 0 at fixed (t, x, sigma)") {
    const RiemannData base{1.0, 1.0, 1.0, -1.0, 0.0};
    double prev = 1e300;
    for (double eps : {0.1, 0.01, 0.001}) {
        const auto rc = closed_form::ramp_correction({base, eps}, 0.2, 1.0, 0.5);
        const double size = std::abs(rc.I1) + std::abs(rc.I2);
        CHECK(size < prev);
        prev = size;
    }
    CHECK(prev < 1e-2);
}

TEST_CASE("the printed N/F ratio reaches x/t - u1 as eps -> 0") {
    const RiemannData base{1.0, 1.0, 1.0, 1.0, 0.0};
    const double t = 1.0, x = 1.3;
    double err = 1e300;
    for (double eps : {0.1, 0.01, 1e-4}) {
        const auto rc = closed_form::ramp_correction({base, eps}, 0.1, t, x);
        const double next = std::abs(rc.ratio_N_over_F - (x / t - base.u1));
        CHECK(next <= err + 1e-15);
        err = next;
    }
    CHECK(err < 1e-3);
}

TEST_CASE("sigma -> 0 limit fields inside the fan image (u2 > 0)") {
    const SmoothedRiemannData d{{1.0, 1.0, 1.0, 1.0, 0.0}, 0.1};
    // ramp-image velocity from the closed-form ratio, eps = 0.1, t = 1
    auto [rho_a, u_a] = closed_form::limit_sigma_fields(d, 1.0, 1.45);
    CHECK(u_a == doctest::Approx(1.4583333333333333).epsilon(1e-12));
    CHECK(rho_a == doctest::Approx(0.24305555555555556).epsilon(1e-12));
    // at the fan midpoint the value is eps-independent and equals x/t
    auto [rho_b, u_b] = closed_form::limit_sigma_fields(d, 1.0, 1.5);
    CHECK(u_b == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(rho_b > 0.0);
    // outside the transition zone: untouched one-sided states
    CHECK(closed_form::limit_sigma_fields(d, 1.0, 0.5).first == 1.0);
    CHECK(closed_form::limit_sigma_fields(d, 1.0, 0.5).second == 1.0);
    CHECK(closed_form::limit_sigma_fields(d, 1.0, 2.5).first == 2.0);
    CHECK(closed_form::limit_sigma_fields(d, 1.0, 2.5).second == 2.0);
}

TEST_CASE("sigma -> 0 limit uses the eps -> 0 fan velocity") {
    const RiemannData base{1.0, 1.0, 1.0, 1.0, 0.0};
    double err = 1e300;
    for (double eps : {0.1, 0.01, 1e-4}) {
        const auto [rho, u] = closed_form::limit_sigma_fields({base, eps}, 1.0, 1.3);
        err = std::abs(u - 1.3);
    }
    CHECK(err < 1e-3);
}

TEST_CASE("sigma -> 0 limit superposes three streams for u2 < 0") {
    const SmoothedRiemannData d{{1.0, 1.0, 0.0, -1.0, 0.0}, 0.05};
    const auto [rho, u] = closed_form::limit_sigma_fields(d, 1.0, -0.5);
    // left f1 + right (f1+f2) + ramp (f1+f2/2) * 2eps/|2eps + u2 t|
    CHECK(rho == doctest::Approx(19.0 / 6.0).epsilon(1e-13));
    CHECK(u == doctest::Approx(-25.0 / 38.0).epsilon(1e-13));
}

TEST_CASE("limit fields agree with a small-sigma closed-form sweep") {
    const SmoothedRiemannData d{{1.0, 1.0, 0.0, -1.0, 0.0}, 0.1};
    for (double x : {-1.6, -0.5, 0.6}) {
        const auto [rho_lim, u_lim] = closed_form::limit_sigma_fields(d, 1.0, x);
        const double rho_s = closed_form::rho_eps(d, 1e-4, 1.0, x);
        const double u_s = closed_form::uhat_eps(d, 1e-4, 1.0, x);
        CHECK(rho_s == doctest::Approx(rho_lim).epsilon(1e-3));
        CHECK(std::abs(u_s - u_lim) < 1e-3);
    }
}
