#pragma once

#include "pgd/hugoniot.hpp"
#include "pgd/riemann_free.hpp"
#include "pgd/riemann_sticky.hpp"

#include <json.hpp>

namespace pgd {

void to_json(nlohmann::json& j, const RiemannData& d);
void from_json(const nlohmann::json& j, RiemannData& d);

namespace riemann_free {
void to_json(nlohmann::json& j, const RegionState& s);
void from_json(const nlohmann::json& j, RegionState& s);
void to_json(nlohmann::json& j, const WaveFan& fan);
void from_json(const nlohmann::json& j, WaveFan& fan);
} // namespace riemann_free

namespace riemann_sticky {
void to_json(nlohmann::json& j, const DeltaShockSolution& sol);
void from_json(const nlohmann::json& j, DeltaShockSolution& sol);
} // namespace riemann_sticky

namespace hugoniot {
void to_json(nlohmann::json& j, const ReportRow& row);
void to_json(nlohmann::json& j, const HugoniotReport& report);
} // namespace hugoniot

} // namespace pgd
