#pragma once

#include "pgd/model.hpp"

#include <span>

namespace pgd::riemann_sticky {

enum class RootSign { plus, minus, degenerate };

const char* to_string(RootSign s);

/// Jump values [h] = h(right) - h(left) of the conserved quantities across
/// the Riemann discontinuity.
struct JumpBrackets {
    double f = 0.0;   ///< [f]
    double uf = 0.0;  ///< [u f]
    double u2f = 0.0; ///< [u^2 f]
};

JumpBrackets jump_brackets(const RiemannData& data);

/// Delta-shock solution of the sticky-particle Riemann problem (u2 < 0):
/// the singularity moves at constant speed from x0 and carries the mass
/// m(t) = mass_rate * t.
struct DeltaShockSolution {
    RiemannData data;
    double speed = 0.0;
    RootSign sign_choice = RootSign::plus;
    double mass_rate = 0.0;
};

/// Solves ([f]x - [uf]t) x' = [uf]x - [u^2 f]t with x(0) = 0. The quadratic
/// root satisfying the Lax window is selected by filtering, not by a sign
/// guess; for [f] = 0 the regular limit [u^2 f]/(2[uf]) applies.
DeltaShockSolution solve_sticky(const RiemannData& data);

/// m(t) = -[uf] t + [f] x(t); zero at t = 0 and strictly increasing.
double shock_mass(const DeltaShockSolution& sol, double t);

/// Max over the grid of |([f]x - [uf]t) speed - ([uf]x - [u^2 f]t)| with
/// x = speed * t. Zero up to rounding for either quadratic root.
double verify_jump_ode(const DeltaShockSolution& sol,
                       std::span<const double> t_grid);

/// Strict admissibility u1 + u2 < speed < u1 (requires u2 < 0).
bool check_lax(const RiemannData& data, double speed);

} // namespace pgd::riemann_sticky
