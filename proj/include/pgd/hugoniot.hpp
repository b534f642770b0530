#pragma once

#include "pgd/riemann_free.hpp"

#include <vector>

namespace pgd::hugoniot {

struct SideState {
    double rho = 0.0;
    double u = 0.0;
    double p = 0.0;
};

/// One-sided states and speed of a single discontinuity.
struct JumpStates {
    SideState left;
    SideState right;
    double speed = 0.0;
};

/// Raw jump-balance residuals, exact arithmetic on the given states:
///   mass           = [f] D - [f u]
///   momentum_no_p  = [f u] D - [f u^2]
///   momentum_with_p= [f u] D - [f u^2 + p]
struct Residuals {
    double mass = 0.0;
    double momentum_no_p = 0.0;
    double momentum_with_p = 0.0;
};

Residuals rh_residuals(const JumpStates& j);

/// Per-locus verdicts for a wave fan. Relative residuals are the raw ones
/// scaled by max(1, |[f u^2]|) so pass thresholds are scale-free.
struct ReportRow {
    double speed = 0.0;
    Residuals raw;
    double scale = 1.0;
    double mass_rel = 0.0;
    double momentum_no_p_rel = 0.0;
    double momentum_with_p_rel = 0.0;
    bool lax_ok = false; ///< u_left >= D >= u_right (non-strict)
};

struct HugoniotReport {
    std::vector<ReportRow> rows;
    bool pass = false; ///< every locus: mass and with-p residuals < 1e-12
};

/// Evaluates both one-sided limits at every locus of the fan and checks
/// the jump balances there, with and without the pressure contribution.
HugoniotReport check_fan(const riemann_free::WaveFan& fan);

} // namespace pgd::hugoniot
