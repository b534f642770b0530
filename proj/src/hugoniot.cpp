#include "pgd/hugoniot.hpp"

#include <cmath>

namespace pgd::hugoniot {

Residuals rh_residuals(const JumpStates& j) {
    const SideState& l = j.left;
    const SideState& r = j.right;
    const double df = r.rho - l.rho;
    const double dfu = r.rho * r.u - l.rho * l.u;
    const double dfu2 = r.rho * r.u * r.u - l.rho * l.u * l.u;
    const double dfu2p = (r.rho * r.u * r.u + r.p) - (l.rho * l.u * l.u + l.p);
    Residuals res;
    res.mass = df * j.speed - dfu;
    res.momentum_no_p = dfu * j.speed - dfu2;
    res.momentum_with_p = dfu * j.speed - dfu2p;
    return res;
}

HugoniotReport check_fan(const riemann_free::WaveFan& fan) {
    constexpr double kTol = 1e-12;
    HugoniotReport report;
    report.pass = true;

    for (std::size_t i = 0; i < fan.loci.size(); ++i) {
        const double speed = fan.loci[i];
        auto side = [&](const riemann_free::RegionState& st) {
            SideState s;
            s.rho = st.rho;
            s.u = st.self_similar_u ? speed : st.u;
            s.p = st.p;
            return s;
        };
        JumpStates j{side(fan.states[i]), side(fan.states[i + 1]), speed};

        ReportRow row;
        row.speed = speed;
        row.raw = rh_residuals(j);
        const double dfu2 =
            j.right.rho * j.right.u * j.right.u - j.left.rho * j.left.u * j.left.u;
        row.scale = std::max(1.0, std::abs(dfu2));
        row.mass_rel = std::abs(row.raw.mass) / row.scale;
        row.momentum_no_p_rel = std::abs(row.raw.momentum_no_p) / row.scale;
        row.momentum_with_p_rel = std::abs(row.raw.momentum_with_p) / row.scale;
        row.lax_ok = j.left.u >= speed && speed >= j.right.u;
        report.pass = report.pass && row.mass_rel < kTol && row.momentum_with_p_rel < kTol;
        report.rows.push_back(row);
    }
    return report;
}

} // namespace pgd::hugoniot
