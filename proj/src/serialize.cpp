#include "pgd/serialize.hpp"

#include <stdexcept>
#include <string>

namespace pgd {

void to_json(nlohmann::json& j, const RiemannData& d) {
    j = nlohmann::json{{"f1", d.f1}, {"f2", d.f2}, {"u1", d.u1},
                       {"u2", d.u2}, {"x0", d.x0}};
}

void from_json(const nlohmann::json& j, RiemannData& d) {
    j.at("f1").get_to(d.f1);
    j.at("f2").get_to(d.f2);
    j.at("u1").get_to(d.u1);
    j.at("u2").get_to(d.u2);
    d.x0 = j.value("x0", 0.0);
    d.validate();
}

namespace riemann_free {

void to_json(nlohmann::json& j, const RegionState& s) {
    j = nlohmann::json{{"rho", s.rho},
                       {"u", s.u},
                       {"p", s.p},
                       {"self_similar_u", s.self_similar_u}};
}

void from_json(const nlohmann::json& j, RegionState& s) {
    j.at("rho").get_to(s.rho);
    j.at("u").get_to(s.u);
    j.at("p").get_to(s.p);
    s.self_similar_u = j.value("self_similar_u", false);
}

void to_json(nlohmann::json& j, const WaveFan& fan) {
    j = nlohmann::json{{"case", to_string(fan.kind)},
                       {"data", fan.data},
                       {"loci", fan.loci},
                       {"states", fan.states}};
}

void from_json(const nlohmann::json& j, WaveFan& fan) {
    const std::string kind = j.at("case").get<std::string>();
    if (kind == "rarefaction") fan.kind = FanCase::rarefaction;
    else if (kind == "contact") fan.kind = FanCase::contact;
    else if (kind == "overlap") fan.kind = FanCase::overlap;
    else throw std::invalid_argument("WaveFan: unknown case '" + kind + "'");
    j.at("data").get_to(fan.data);
    j.at("loci").get_to(fan.loci);
    j.at("states").get_to(fan.states);
    if (fan.states.size() != fan.loci.size() + 1)
        throw std::invalid_argument("WaveFan: states/loci size mismatch");
}

} // namespace riemann_free

namespace riemann_sticky {

void to_json(nlohmann::json& j, const DeltaShockSolution& sol) {
    j = nlohmann::json{{"data", sol.data},
                       {"speed", sol.speed},
                       {"sign_choice", to_string(sol.sign_choice)},
                       {"mass_rate", sol.mass_rate}};
}

void from_json(const nlohmann::json& j, DeltaShockSolution& sol) {
    j.at("data").get_to(sol.data);
    j.at("speed").get_to(sol.speed);
    j.at("mass_rate").get_to(sol.mass_rate);
    const std::string sign = j.at("sign_choice").get<std::string>();
    if (sign == "plus") sol.sign_choice = RootSign::plus;
    else if (sign == "minus") sol.sign_choice = RootSign::minus;
    else if (sign == "degenerate") sol.sign_choice = RootSign::degenerate;
    else throw std::invalid_argument("DeltaShockSolution: unknown sign '" + sign + "'");
}

} // namespace riemann_sticky

namespace hugoniot {

void to_json(nlohmann::json& j, const ReportRow& row) {
    j = nlohmann::json{{"speed", row.speed},
                       {"mass", row.raw.mass},
                       {"momentum_no_p", row.raw.momentum_no_p},
                       {"momentum_with_p", row.raw.momentum_with_p},
                       {"scale", row.scale},
                       {"mass_rel", row.mass_rel},
                       {"momentum_no_p_rel", row.momentum_no_p_rel},
                       {"momentum_with_p_rel", row.momentum_with_p_rel},
                       {"lax_ok", row.lax_ok}};
}

void to_json(nlohmann::json& j, const HugoniotReport& report) {
    j = nlohmann::json{{"rows", report.rows}, {"pass", report.pass}};
}

} // namespace hugoniot

} // namespace pgd
