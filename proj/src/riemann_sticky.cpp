#include "pgd/riemann_sticky.hpp"

#include <cmath>
#include <stdexcept>

namespace pgd::riemann_sticky {

const char* to_string(RootSign s) {
    switch (s) {
    case RootSign::plus: return "plus";
    case RootSign::minus: return "minus";
    case RootSign::degenerate: return "degenerate";
    }
    return "unknown";
}

JumpBrackets jump_brackets(const RiemannData& data) {
    const double fl = data.f1, fr = data.f1 + data.f2;
    const double ul = data.u1, ur = data.u1 + data.u2;
    return {fr - fl, fr * ur - fl * ul, fr * ur * ur - fl * ul * ul};
}

DeltaShockSolution solve_sticky(const RiemannData& data) {
    data.validate();
    if (!(data.u2 < 0.0))
        throw std::invalid_argument(
            "solve_sticky: u2 < 0 required (characteristics must overlap)");

    const JumpBrackets j = jump_brackets(data);
    DeltaShockSolution sol;
    sol.data = data;

    if (j.f == 0.0) {
        // [f] = 0: the ODE is linear; x(t) = [u^2 f]/(2 [uf]) t
        sol.speed = j.u2f / (2.0 * j.uf);
        sol.sign_choice = RootSign::degenerate;
    } else {
        const double disc = j.uf * j.uf - j.f * j.u2f;
        // disc = f1 (f1+f2) u2^2 >= 0 for valid data
        if (disc < 0.0)
            throw std::logic_error("solve_sticky: negative discriminant");
        const double sq = std::sqrt(disc);
        const double plus = (j.uf + sq) / j.f;
        const double minus = (j.uf - sq) / j.f;
        if (check_lax(data, plus)) {
            sol.speed = plus;
            sol.sign_choice = RootSign::plus;
        } else if (check_lax(data, minus)) {
            sol.speed = minus;
            sol.sign_choice = RootSign::minus;
        } else {
            throw std::logic_error("solve_sticky: no admissible root");
        }
    }
    sol.mass_rate = -j.uf + j.f * sol.speed;
    return sol;
}

double shock_mass(const DeltaShockSolution& sol, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("shock_mass: t must be >= 0");
    return sol.mass_rate * t;
}

double verify_jump_ode(const DeltaShockSolution& sol,
                       std::span<const double> t_grid) {
    const JumpBrackets j = jump_brackets(sol.data);
    double worst = 0.0;
    for (double t : t_grid) {
        const double x = sol.speed * t;
        const double res = (j.f * x - j.uf * t) * sol.speed - (j.uf * x - j.u2f * t);
        worst = std::max(worst, std::abs(res));
    }
    return worst;
}

bool check_lax(const RiemannData& data, double speed) {
    if (!(data.u2 < 0.0))
        throw std::invalid_argument("check_lax: u2 < 0 required");
    return data.u1 + data.u2 < speed && speed < data.u1;
}

} // namespace pgd::riemann_sticky
