#pragma once

#include "pgd/model.hpp"
#include "pgd/quadrature.hpp"

#include <utility>

namespace pgd::exact_fields {

using quadrature::QuadratureSpec;

/// Kernel density: (1/(sqrt(2 pi t) sigma)) * integral of
/// f0(s) exp(-(u0(s) t + s - x)^2 / (2 sigma^2 t)) ds over the window.
/// Returns 0 when no part of the window contributes above the truncation
/// threshold (deep vacuum).
double density_rho(const SampledProfile& profile, double sigma, double t,
                   double x, const QuadratureSpec& spec = {});

/// Mean velocity at (t, x): ratio of the u0-weighted to unweighted kernel
/// integrals. Lies in [min u0, max u0]. At t = 0 the kernel degenerates and
/// u0(x) is returned directly. Throws VacuumError when the denominator is
/// below the underflow floor.
double velocity_uhat(const SampledProfile& profile, double sigma, double t,
                     double x, const QuadratureSpec& spec = {});

/// Same ratio restricted to [-L, L]; usable for non-integrable f0. Agrees
/// with velocity_uhat once L exceeds the truncation radius of the kernel.
double velocity_uhat_bounded(const SampledProfile& profile, double sigma,
                             double t, double x, double L,
                             const QuadratureSpec& spec = {});

/// Second central moment flux R(t,x) = integral of (u - uhat)^2 P du,
/// computed as the kernel integral of f0 (u0 - uhat)^2. Nonnegative; decays
/// to zero outside overlap regions as sigma -> 0 and to the spurious
/// pressure inside them. Returns 0 in deep vacuum.
double second_moment_R(const SampledProfile& profile, double sigma, double t,
                       double x, const QuadratureSpec& spec = {});

/// Central-difference residuals of the mass and momentum balance laws the
/// kernel fields satisfy, at step h (both O(h^2) consistent):
///   |d_t rho + d_x(rho u) - (sigma^2/2) d_xx rho|
///   |d_t(rho u) + d_x(rho u^2 + R) - (sigma^2/2) d_xx(rho u)|
std::pair<double, double> moment_residuals(const SampledProfile& profile,
                                           double sigma, double t, double x,
                                           const QuadratureSpec& spec, double h);

/// Default step h = sigma / 10 (resolves the diffusive layer).
std::pair<double, double> moment_residuals(const SampledProfile& profile,
                                           double sigma, double t, double x,
                                           const QuadratureSpec& spec = {});

/// One-stop evaluation for grid sweeps: density and velocity from a single
/// shared quadrature pass (p stays 0; pressure belongs to the limit
/// solutions). Propagates VacuumError from the velocity ratio.
FieldSample field_sample(const SampledProfile& profile, double sigma, double t,
                         double x, const QuadratureSpec& spec = {});

} // namespace pgd::exact_fields
