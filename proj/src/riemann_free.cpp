#include "pgd/riemann_free.hpp"

#include <cmath>
#include <stdexcept>

namespace pgd::riemann_free {

const char* to_string(FanCase c) {
    switch (c) {
    case FanCase::rarefaction: return "rarefaction";
    case FanCase::contact: return "contact";
    case FanCase::overlap: return "overlap";
    }
    return "unknown";
}

WaveFan solve_free(const RiemannData& data) {
    data.validate();
    WaveFan fan;
    fan.data = data;
    const double f1 = data.f1, f2 = data.f2, u1 = data.u1, u2 = data.u2;

    if (u2 > 0.0) {
        fan.kind = FanCase::rarefaction;
        fan.loci = {u1, u1 + u2};
        fan.states = {{f1, u1, 0.0, false},
                      {0.0, 0.0, 0.0, true},
                      {f1 + f2, u1 + u2, 0.0, false}};
    } else if (u2 < 0.0) {
        fan.kind = FanCase::overlap;
        const double rho_mid = 2.0 * f1 + f2;
        const double u_mid = u1 + (f1 + f2) * u2 / rho_mid;
        const double p_mid = f1 * (f1 + f2) * u2 * u2 / rho_mid;
        fan.loci = {u1 + u2, u1};
        fan.states = {{f1, u1, 0.0, false},
                      {rho_mid, u_mid, p_mid, false},
                      {f1 + f2, u1 + u2, 0.0, false}};
    } else {
        fan.kind = FanCase::contact;
        fan.loci = {u1};
        fan.states = {{f1, u1, 0.0, false}, {f1 + f2, u1, 0.0, false}};
    }
    return fan;
}

namespace {

// one-sided region values with the self-similar velocity resolved at xi
void region_values(const RegionState& st, double xi, double& rho, double& u,
                   double& p) {
    rho = st.rho;
    u = st.self_similar_u ? xi : st.u;
    p = st.p;
}

} // namespace

FieldSample eval_wavefan(const WaveFan& fan, double t, double x) {
    if (!(t > 0.0)) throw std::invalid_argument("eval_wavefan: t must be > 0");
    const double xi = (x - fan.data.x0) / t;

    FieldSample s;
    s.t = t;
    s.x = x;
    s.provenance = Provenance::limit;

    std::size_t region = 0;
    while (region < fan.loci.size() && xi > fan.loci[region]) ++region;

    if (region < fan.loci.size() && xi == fan.loci[region]) {
        double rl, ul, pl, rr, ur, pr;
        region_values(fan.states[region], xi, rl, ul, pl);
        region_values(fan.states[region + 1], xi, rr, ur, pr);
        s.rho = 0.5 * (rl + rr);
        s.u = 0.5 * (ul + ur);
        s.p = 0.5 * (pl + pr);
    } else {
        region_values(fan.states[region], xi, s.rho, s.u, s.p);
    }
    return s;
}

double spurious_pressure(const RiemannData& data, double t, double x) {
    data.validate();
    if (!(t > 0.0)) throw std::invalid_argument("spurious_pressure: t must be > 0");
    if (data.u2 >= 0.0) return 0.0;
    const double coef = data.f1 * (data.f1 + data.f2) * data.u2 * data.u2 /
                        (2.0 * data.f1 + data.f2);
    auto heaviside = [](double z) { return z > 0.0 ? 1.0 : (z < 0.0 ? 0.0 : 0.5); };
    const double x_rel = x - data.x0;
    return coef * (heaviside(x_rel - (data.u1 + data.u2) * t) -
                   heaviside(x_rel - data.u1 * t));
}

double unstable_single_jump_velocity(const RiemannData& data, double t, double x) {
    data.validate();
    if (!(t > 0.0))
        throw std::invalid_argument("unstable_single_jump_velocity: t must be > 0");
    const double xi = (x - data.x0) / t;
    const double jump = data.u1 + 0.5 * data.u2;
    if (xi > jump) return data.u1 + data.u2;
    if (xi < jump) return data.u1;
    return data.u1 + 0.5 * data.u2;
}

} // namespace pgd::riemann_free
