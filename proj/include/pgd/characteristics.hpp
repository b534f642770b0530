#pragma once

#include "pgd/model.hpp"

namespace pgd::characteristics {

/// Result of inverting the characteristic map u0(s0) t + s0 = x.
struct CharacteristicSolve {
    double s0 = 0.0;       ///< starting position of the characteristic
    double jacobian = 0.0; ///< 1 + t u0'(s0), positive before breakdown
    int iterations = 0;
};

/// Safeguarded Newton (bisection fallback) for the implicit equation
/// u0(s0) t + s0 - x = 0 on the bracket [x - t sup u0, x - t inf u0].
/// Throws BreakdownError for t >= breakdown_time(profile).
CharacteristicSolve solve_implicit_s0(const SampledProfile& profile, double t,
                                      double x, double tol = 1e-12);

/// Classical Burgers solution u0(s0(t, x)); returns u0(x) at t = 0.
double classical_solution(const SampledProfile& profile, double t, double x,
                          double tol = 1e-12);

/// First characteristic-crossing time: -1/min u0' over the sampled window
/// when the minimum slope is negative, +infinity otherwise. The slope is
/// taken by central differences on a uniform sample grid.
double breakdown_time(const SampledProfile& profile, int samples = 4096);

} // namespace pgd::characteristics
