/*
* Copyright (C) 2026 hetsleep developers
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#include "hetsleep/power_model.hpp"

#include "hetsleep/error.hpp"

#include <array>
#include <string>

namespace hetsleep
{

namespace
{

struct ProfileRow
{
    BsType type;
    std::string_view name;
    double eta;
    double pTx;
    double pOperational;
    double pSleep;
};

// EARTH reference values, W.
constexpr std::array<ProfileRow, 5> kProfiles{{
    {BsType::macro, "macro", 4.7, 20.0, 130.0, 75.0},
    {BsType::rrh, "rrh", 2.8, 20.0, 84.0, 56.0},
    {BsType::micro, "micro", 2.6, 6.3, 56.0, 39.0},
    {BsType::pico, "pico", 4.0, 0.13, 6.8, 4.3},
    {BsType::femto, "femto", 8.0, 0.05, 4.8, 2.9},
}};

} // namespace

std::string_view toString(BsType type)
{
    for (const auto& row : kProfiles)
    {
        if (row.type == type)
            return row.name;
    }
    return "unknown";
}

std::optional<BsType> parseBsType(std::string_view name)
{
    for (const auto& row : kProfiles)
    {
        if (row.name == name)
            return row.type;
    }
    return std::nullopt;
}

PowerProfile builtinProfile(BsType type)
{
    for (const auto& row : kProfiles)
    {
        if (row.type == type)
            return PowerProfile{row.eta, row.pTx, row.pOperational, row.pSleep, row.type};
    }
    throw ConfigError("unknown base-station type");
}

void PowerProfile::validate() const
{
    const std::string who = "power profile '" + std::string(toString(bsType)) + "': ";
    if (!(eta > 0.0))
        throw ConfigError(who + "eta must be positive");
    if (!(pTx > 0.0) || !(pOperational > 0.0) || !(pSleep > 0.0))
        throw ConfigError(who + "all powers must be positive");
    if (!(pSleep < pOperational))
        throw ConfigError(who + "p_sleep must be below p_operational");
}

double scPower(const PowerProfile& profile, double rho, bool on)
{
    if (!on)
        return profile.pSleep;
    if (rho < 0.0)
        throw DomainError("scPower: negative load");
    return profile.pOperational + profile.eta * rho * profile.pTx;
}

double mcPower(const PowerProfile& profile, double rhoMc)
{
    if (rhoMc < 0.0)
        throw DomainError("mcPower: negative load");
    return profile.pOperational + profile.eta * rhoMc * profile.pTx;
}

PowerReport networkPower(const NetworkProfiles& profiles, const LoadState& loads, const SleepConfig& sleep)
{
    PowerReport report;
    report.mcPower = mcPower(profiles.macro, loads.rhoMc);
    report.perScPower.reserve(sleep.numSc());
    report.totalPower = report.mcPower;
    for (std::size_t i = 0; i < sleep.numSc(); ++i)
    {
        const double p = scPower(profiles.sc, loads.rhoSc[i], sleep.isOn(i));
        report.perScPower.push_back(p);
        report.totalPower += p;
    }
    return report;
}

} // namespace hetsleep
