#pragma once

#include "pgd/model.hpp"
#include "pgd/quadrature.hpp"

#include <utility>

namespace pgd::closed_form {

using quadrature::QuadratureSpec;

/// Ramp contributions to the Gauss-CDF field expressions for smoothed
/// Riemann data. I1/I2 are the density/momentum corrections carried by the
/// ramp s in [-eps, eps]; ratio_N_over_F is the closed-form velocity
/// correction inside the ramp image,
///   u2/2 + (u2/(u2 t + 2 eps)) (x - (u1 + u2/2) t),
/// whose eps->0 limit is x/t - u1 inside the fan.
struct RampCorrection {
    double I1 = 0.0;
    double I2 = 0.0;
    double ratio_N_over_F = 0.0;
};

RampCorrection ramp_correction(const SmoothedRiemannData& data, double sigma,
                               double t, double x,
                               const QuadratureSpec& spec = {});

/// Density of the smoothed Riemann problem:
///   f1 Phi(C-/(sigma sqrt t)) + (f1+f2) Phi(-C+/(sigma sqrt t)) + I1,
/// with C- = u1 t - x - eps and C+ = (u1+u2) t - x + eps (x relative to x0).
double rho_eps(const SmoothedRiemannData& data, double sigma, double t,
               double x, const QuadratureSpec& spec = {});

/// Velocity of the smoothed Riemann problem:
///   u1 + [u2 (f1+f2) Phi(-C+/(sigma sqrt t)) + I2] / rho_eps.
double uhat_eps(const SmoothedRiemannData& data, double sigma, double t,
                double x, const QuadratureSpec& spec = {});

/// The sigma->0 limit of (rho_eps, uhat_eps) at fixed eps: superposition of
/// the left, ramp, and right characteristic streams of the piecewise-linear
/// data. Before ramp focusing exactly one stream is active at each x; after
/// focusing (u2 < 0) up to three overlap. Stream-validity boundaries keep
/// the outer streams closed and the ramp open.
std::pair<double, double> limit_sigma_fields(const SmoothedRiemannData& data,
                                             double t, double x);

} // namespace pgd::closed_form
