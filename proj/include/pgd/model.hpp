#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace pgd {

/// Heaviside Riemann initial data: density f1 + f2*H(x-x0), velocity
/// u1 + u2*H(x-x0). Both one-sided densities must be strictly positive.
struct RiemannData {
    double f1 = 1.0; ///< left density level (> 0)
    double f2 = 0.0; ///< density jump (f1 + f2 > 0)
    double u1 = 0.0; ///< left velocity level
    double u2 = 0.0; ///< velocity jump
    double x0 = 0.0; ///< jump position

    void validate() const;
};

/// Piecewise-linear smoothing of RiemannData with ramp half-width eps:
/// equals the left state for x <= x0-eps, the right state for x >= x0+eps,
/// and interpolates linearly in between.
struct SmoothedRiemannData {
    RiemannData base;
    double eps = 0.1; ///< ramp half-width (> 0)

    void validate() const;
};

/// General 1-D initial condition (u0, f0) as evaluable functions on a
/// bounded window. `f0_integrable` selects whether the velocity kernel is
/// taken over the whole window or needs the bounded [-L, L] definition.
/// `breakpoints` mark locations where u0/f0 change analytic form; the
/// quadrature scanner splits there so narrow ramps are never stepped over.
struct SampledProfile {
    std::function<double(double)> u0;
    std::function<double(double)> f0;
    double window_lo = -10.0;
    double window_hi = 10.0;
    bool f0_integrable = true;
    std::vector<double> breakpoints; ///< ascending, inside the window

    // velocity range over the window, cached at construction
    double u0_min = 0.0;
    double u0_max = 0.0;
};

/// Builds a profile and caches velocity bounds from a scan of the window.
/// Rejects profiles with f0 < 0 at any scanned point.
SampledProfile make_profile(std::function<double(double)> u0,
                            std::function<double(double)> f0,
                            double window_lo, double window_hi,
                            bool f0_integrable = true,
                            std::vector<double> breakpoints = {});

/// Raw Heaviside Riemann data as a profile (jump recorded as a breakpoint).
SampledProfile make_riemann_profile(const RiemannData& data,
                                    double half_width = 30.0);

/// Piecewise-linear smoothed Riemann data as a profile.
SampledProfile make_smoothed_profile(const SmoothedRiemannData& data,
                                     double half_width = 30.0);

/// Alternative C^1 smoothing of Riemann data built on tanh((x-x0)/eps).
/// Used to exercise smoothing independence of the double limit.
SampledProfile make_tanh_profile(const RiemannData& data, double eps,
                                 double half_width = 30.0);

enum class Provenance { quadrature, closed_form, limit, monte_carlo };

const char* to_string(Provenance p);

/// One field evaluation: (density, velocity, pressure) at a space-time
/// point plus how it was computed. Pressure is zero everywhere except
/// inside an overlap region.
struct FieldSample {
    double t = 0.0;
    double x = 0.0;
    double rho = 0.0;
    double u = 0.0;
    double p = 0.0;
    Provenance provenance = Provenance::limit;
};

/// Piecewise initial data at a point. Exactly at the jump the midpoint of
/// the one-sided limits is returned; this matches the Gaussian-smoothing
/// limit, so kernel quadrature and exact evaluators agree at jump loci.
std::pair<double, double> eval_riemann_initial(const RiemannData& data, double x);

/// Exact piecewise-linear evaluation of the smoothed data, continuous in x.
std::pair<double, double> eval_smoothed_initial(const SmoothedRiemannData& data,
                                                double x);

/// Standard normal CDF via the library erfc; absolute error well below
/// 1e-15, so the 1e-12 contract holds with margin.
double gauss_cdf(double alpha);

/// Flat key-value (de)serialization used by the CLI scenario files.
/// Keys: f1, f2, u1, u2, x0 and optionally eps.
std::map<std::string, double> to_kv(const RiemannData& data);
std::map<std::string, double> to_kv(const SmoothedRiemannData& data);
RiemannData riemann_from_kv(const std::map<std::string, double>& kv);
SmoothedRiemannData smoothed_from_kv(const std::map<std::string, double>& kv);

} // namespace pgd
