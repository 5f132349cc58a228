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
#ifndef HETSLEEP_POWER_MODEL_HPP
#define HETSLEEP_POWER_MODEL_HPP

#include "hetsleep/net_model.hpp"
#include "hetsleep/radio_load.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hetsleep
{

enum class BsType
{
    macro,
    rrh,
    micro,
    pico,
    femto,
};

std::string_view toString(BsType type);
std::optional<BsType> parseBsType(std::string_view name);

/// EARTH-style affine power profile: P_o + eta * rho * P_tx when on.
struct PowerProfile
{
    double eta = 0.0;
    double pTx = 0.0;
    double pOperational = 0.0;
    double pSleep = 0.0;
    BsType bsType = BsType::micro;

    /// Throws ConfigError naming the profile and the violated invariant.
    void validate() const;
};

/// Built-in EARTH reference profiles.
PowerProfile builtinProfile(BsType type);

struct PowerReport
{
    std::vector<double> perScPower;
    double mcPower = 0.0;
    double totalPower = 0.0;
};

/// Power of one small cell; a sleeping cell draws pSleep regardless of load.
double scPower(const PowerProfile& profile, double rho, bool on);

double mcPower(const PowerProfile& profile, double rhoMc);

struct NetworkProfiles
{
    PowerProfile macro = builtinProfile(BsType::macro);
    PowerProfile sc = builtinProfile(BsType::micro);
};

PowerReport networkPower(const NetworkProfiles& profiles, const LoadState& loads, const SleepConfig& sleep);

} // namespace hetsleep

#endif // HETSLEEP_POWER_MODEL_HPP
