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
#ifndef HETSLEEP_CONFIG_HPP
#define HETSLEEP_CONFIG_HPP

#include "hetsleep/cmab.hpp"
#include "hetsleep/cre_optimizer.hpp"
#include "hetsleep/net_model.hpp"
#include "hetsleep/power_model.hpp"
#include "hetsleep/radio_load.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hetsleep
{

enum class Strategy
{
    cucb,
    allOn,
    random,
    oracleStatic,
};

std::string_view toString(Strategy s);
std::optional<Strategy> parseStrategy(std::string_view name);

enum class SweepAxis
{
    none,
    ueCount,
    scCount,
};

std::string_view toString(SweepAxis a);

/// Full experiment description. Defaults reproduce the reference setup:
/// 500 m macro disk, 2 GHz, 20 MHz, alpha_p = 4, EARTH micro SCs,
/// alpha = 0.989, beta = 0.98, penalties 100.
struct ExperimentConfig
{
    // scenario
    double radius = 500.0;
    std::size_t numSc = 5;
    std::size_t numUe = 30;
    TrafficParams traffic{1.0, 2e5};
    double rMinBps = 1e6;

    // radio (transmit powers come from the power profiles)
    double carrierHz = 2e9;
    double bwMc = 20e6;
    double bwSc = 20e6;
    double alphaP = 4.0;
    double noiseDensity = 3.98e-21;
    double kMc = 0.0; ///< <= 0: free-space intercept at the carrier
    double kSc = 0.0;

    // power
    BsType scType = BsType::micro;
    std::array<PowerProfile, 5> profiles{builtinProfile(BsType::macro), builtinProfile(BsType::rrh),
                                         builtinProfile(BsType::micro), builtinProfile(BsType::pico),
                                         builtinProfile(BsType::femto)};

    // bandit
    double alpha = 0.989;
    double beta = 0.98;
    PenaltyWeights penalties;
    std::uint64_t horizon = 20000;
    std::size_t oracleCap = kDefaultOracleCap;
    LoadEstimate loadEstimate = LoadEstimate::meanTraffic;

    CreSettings cre;

    // run
    Strategy strategy = Strategy::cucb;
    std::size_t steadyRounds = 500;
    std::vector<std::uint64_t> seeds{1};

    // sweep
    SweepAxis axis = SweepAxis::none;
    std::vector<std::size_t> axisValues;
    std::vector<Strategy> sweepStrategies{Strategy::cucb, Strategy::allOn};

    const PowerProfile& profile(BsType type) const { return profiles[static_cast<std::size_t>(type)]; }
    PowerProfile& profile(BsType type) { return profiles[static_cast<std::size_t>(type)]; }
    NetworkProfiles networkProfiles() const { return {profile(BsType::macro), profile(scType)}; }
    RadioParams radio() const;
    DeploymentParams deployment() const;

    /// Throws ConfigError naming the offending field.
    void validate() const;
};

/// Sets one `key = value` pair. Throws ConfigError for unknown keys or
/// unparsable values.
void applyConfigValue(ExperimentConfig& config, std::string_view key, std::string_view value);

/// Parses `key = value` lines; '#' starts a comment. Keys mirror the field
/// names written by writeConfig.
ExperimentConfig parseConfig(std::istream& in);
ExperimentConfig loadConfig(const std::string& path);

/// Every key with its current value, readable by parseConfig.
void writeConfig(std::ostream& out, const ExperimentConfig& config);

} // namespace hetsleep

#endif // HETSLEEP_CONFIG_HPP
