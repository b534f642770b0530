#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgd/hugoniot.hpp"
#include "pgd/riemann_sticky.hpp"
#include "pgd/serialize.hpp"

#include <array>
#include <cmath>
#include <random>

using namespace pgd;
using namespace pgd::riemann_sticky;

namespace {

RiemannData random_overlap_data(std::mt19937_64& gen) {
    std::uniform_real_distribution<double> uf1(0.1, 3.0);
    std::uniform_real_distribution<double> uu(-2.0, 2.0);
    std::uniform_real_distribution<double> uneg(-2.0, -0.01);
    RiemannData d;
    d.f1 = uf1(gen);
    std::uniform_real_distribution<double> uf2(-0.9 * d.f1, 3.0);
    d.f2 = uf2(gen);
    d.u1 = uu(gen);
    d.u2 = uneg(gen);
    return d;
}

} // namespace

TEST_CASE("reference delta shock: speed, branch, mass") {
    const auto sol = solve_sticky({1.0, 1.0, 0.0, -1.0, 0.0});
    CHECK(sol.speed == doctest::Approx(-2.0 + std::sqrt(2.0)).epsilon(1e-15));
    CHECK(sol.sign_choice == RootSign::plus);
    CHECK(shock_mass(sol, 1.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(shock_mass(sol, 0.0) == 0.0);
    CHECK(sol.mass_rate > 0.0);
}

TEST_CASE("[f] = 0 degenerates to the Burgers shock speed (u-+u+)/2") {
    const auto sol = solve_sticky({1.0, 0.0, 1.0, -1.0, 0.0});
    CHECK(sol.speed == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(sol.sign_choice == RootSign::degenerate);
    // [uf] = f1 u2 = -1, so m(2) = 2
    CHECK(shock_mass(sol, 2.0) == doctest::Approx(2.0).epsilon(1e-15));
    // symmetric data gives a standing shock
    CHECK(solve_sticky({1.0, 0.0, 0.7, -1.4, 0.0}).speed ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
}

TEST_CASE("jump ODE residual vanishes for the selected branch") {
    const auto sol = solve_sticky({1.0, 1.0, 0.0, -1.0, 0.0});
    const std::array<double, 4> grid{0.25, 0.5, 1.0, 3.0};
    CHECK(verify_jump_ode(sol, grid) < 1e-12);

    // the rejected branch also solves the ODE but fails admissibility
    DeltaShockSolution wrong = sol;
    const auto j = jump_brackets(sol.data);
    wrong.speed = (j.uf - std::sqrt(j.uf * j.uf - j.f * j.u2f)) / j.f;
    CHECK(verify_jump_ode(wrong, grid) < 1e-12);
    CHECK(!check_lax(sol.data, wrong.speed));
}

TEST_CASE("check_lax is the strict overlap window") {
    const RiemannData d{1.0, 1.0, 0.0, -1.0, 0.0};
    CHECK(check_lax(d, -0.585786));
    CHECK(!check_lax(d, -2.0 - std::sqrt(2.0)));
    CHECK(!check_lax(d, 0.0));
    CHECK(check_lax({1.0, 0.0, 1.0, -1.0, 0.0}, 0.5));
    CHECK_THROWS_AS((check_lax({1, 1, 0, 1, 0}, 0.5)), std::invalid_argument);
    CHECK_THROWS_AS((solve_sticky({1, 1, 0, 1, 0})), std::invalid_argument);
}

TEST_CASE("exactly one quadratic root is admissible (random draws)") {
    std::mt19937_64 gen(77);
    for (int k = 0; k < 2000; ++k) {
        const RiemannData d = random_overlap_data(gen);
        const auto j = jump_brackets(d);
        if (j.f == 0.0) continue;
        const double disc = j.uf * j.uf - j.f * j.u2f;
        REQUIRE(disc >= 0.0);
        const double sq = std::sqrt(disc);
        const int admissible = (check_lax(d, (j.uf + sq) / j.f) ? 1 : 0) +
                               (check_lax(d, (j.uf - sq) / j.f) ? 1 : 0);
        CHECK(admissible == 1);
    }
}

TEST_CASE("mass and momentum balance over a comoving window") {
    // window endpoints ride the far-field characteristics, so the total
    // mass/momentum inside (including the point mass) is conserved
    std::mt19937_64 gen(123);
    for (int k = 0; k < 300; ++k) {
        const RiemannData d = random_overlap_data(gen);
        const auto sol = solve_sticky(d);
        const double t = 0.7, A = 50.0;
        const double x = sol.speed * t;
        const double lo = -A + d.u1 * t;
        const double hi = A + (d.u1 + d.u2) * t;
        const double mass =
            d.f1 * (x - lo) + (d.f1 + d.f2) * (hi - x) + shock_mass(sol, t);
        const double mass0 = d.f1 * A + (d.f1 + d.f2) * A;
        CHECK(mass == doctest::Approx(mass0).epsilon(1e-12));

        const double mom = d.f1 * d.u1 * (x - lo) +
                           (d.f1 + d.f2) * (d.u1 + d.u2) * (hi - x) +
                           sol.speed * shock_mass(sol, t);
        const double mom0 = d.f1 * d.u1 * A + (d.f1 + d.f2) * (d.u1 + d.u2) * A;
        CHECK(mom == doctest::Approx(mom0).epsilon(1e-11).scale(1.0 + std::abs(mom0)));
    }
}

TEST_CASE("generalized jump balances hold with no pressure") {
    // the raw two-state residuals equal the singular-term rates:
    //   [f]D - [fu]   = dm/dt
    //   [fu]D - [fu^2] = d(mD)/dt
    std::mt19937_64 gen(321);
    for (int k = 0; k < 300; ++k) {
        const RiemannData d = random_overlap_data(gen);
        const auto sol = solve_sticky(d);
        const hugoniot::JumpStates j{{d.f1, d.u1, 0.0},
                                     {d.f1 + d.f2, d.u1 + d.u2, 0.0},
                                     sol.speed};
        const auto res = hugoniot::rh_residuals(j);
        CHECK(res.mass == doctest::Approx(sol.mass_rate).epsilon(1e-11));
        CHECK(res.momentum_no_p ==
              doctest::Approx(sol.mass_rate * sol.speed).epsilon(1e-10).scale(1.0));
        // with p = 0 on both sides the two momentum residuals coincide
        CHECK(res.momentum_no_p == res.momentum_with_p);
    }
}

TEST_CASE("sticky speed lies inside the free-model plateau region") {
    std::mt19937_64 gen(55);
    for (int k = 0; k < 1000; ++k) {
        const RiemannData d = random_overlap_data(gen);
        const auto sol = solve_sticky(d);
        CHECK(sol.speed > d.u1 + d.u2);
        CHECK(sol.speed < d.u1);
    }
}

TEST_CASE("delta-shock solutions serialize to JSON") {
    const auto sol = solve_sticky({1.0, 1.0, 0.0, -1.0, 0.0});
    const nlohmann::json j = sol;
    CHECK(j.at("sign_choice") == "plus");
    const auto back = j.get<DeltaShockSolution>();
    CHECK(back.speed == sol.speed);
    CHECK(back.mass_rate == sol.mass_rate);
}
