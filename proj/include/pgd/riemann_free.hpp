#pragma once

#include "pgd/model.hpp"

#include <vector>

namespace pgd::riemann_free {

enum class FanCase { rarefaction, contact, overlap };

const char* to_string(FanCase c);

/// One constant (or self-similar) region of a wave fan. When
/// `self_similar_u` is set the velocity is x/t rather than the stored value
/// (rarefaction interior).
struct RegionState {
    double rho = 0.0;
    double u = 0.0;
    double p = 0.0;
    bool self_similar_u = false;
};

/// Self-similar free-particle Riemann solution: ordered edge/jump speeds
/// and the states between them. Evaluation depends on (t, x) only through
/// (x - x0)/t.
struct WaveFan {
    RiemannData data;
    FanCase kind = FanCase::contact;
    std::vector<double> loci;         ///< strictly increasing speeds
    std::vector<RegionState> states;  ///< loci.size() + 1 regions
};

/// Double limit (sigma -> 0 then eps -> 0) of the kernel fields:
///   u2 > 0: rarefaction fan with vacuum interior,
///   u2 = 0: contact discontinuity moving at u1,
///   u2 < 0: overlap plateau with density 2 f1 + f2, velocity
///           u1 + (f1+f2) u2 / (2 f1 + f2) and the spurious pressure.
WaveFan solve_free(const RiemannData& data);

/// Piecewise evaluation with the midpoint convention exactly at loci.
FieldSample eval_wavefan(const WaveFan& fan, double t, double x);

/// Effective pressure of the free-particle solution:
///   f1 (f1+f2) u2^2 / (2 f1 + f2) between the jumps for u2 < 0,
/// zero identically for u2 >= 0. Heaviside midpoint convention at the loci.
double spurious_pressure(const RiemannData& data, double t, double x);

/// Velocity obtained when the limits are taken in the opposite order
/// (eps -> 0 first): a single jump at speed u1 + u2/2. Unstable under
/// small perturbations; exposed for side-by-side comparison only, never
/// used by solve_free.
double unstable_single_jump_velocity(const RiemannData& data, double t, double x);

} // namespace pgd::riemann_free
