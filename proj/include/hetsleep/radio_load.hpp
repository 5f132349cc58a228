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
#ifndef HETSLEEP_RADIO_LOAD_HPP
#define HETSLEEP_RADIO_LOAD_HPP

#include "hetsleep/net_model.hpp"
#include "hetsleep/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hetsleep
{

/// Per-UE Poisson request process: k ~ Poisson(meanRequestRate) requests of
/// requestSizeBits each per second.
struct TrafficParams
{
    double meanRequestRate = 1.0; ///< requests / s / UE
    double requestSizeBits = 1e5;

    double meanOfferedBps() const { return meanRequestRate * requestSizeBits; }
};

struct TrafficDraw
{
    std::vector<double> perUeOffered; ///< bits/s
    std::uint64_t roundIndex = 0;
};

TrafficDraw drawTraffic(const TrafficParams& params, std::size_t numUe, std::uint64_t roundIndex, Rng& rng);

/// Draw for `roundIndex` from the traffic stream of `seed`; the same
/// (seed, round) always gives the same draw.
TrafficDraw drawTraffic(const TrafficParams& params, std::size_t numUe, std::uint64_t seed,
                        std::uint64_t roundIndex);

/// Every UE offering exactly the expected load.
TrafficDraw meanTraffic(const TrafficParams& params, std::size_t numUe);

double noisePower(double density, double bandwidth);

/// SINR of macro-served UE `ue`; only ON small cells interfere.
double sinrMacroUe(std::size_t ue, const NetworkTopology& topology, const UeSet& ues, const SleepConfig& sleep,
                   const AssociationMap& assoc);

/// SINR of UE `ue` served by small cell `sc`. Throws StateError if that cell
/// sleeps or does not serve the UE.
double sinrScUe(std::size_t ue, std::size_t sc, const NetworkTopology& topology, const UeSet& ues,
                const SleepConfig& sleep, const AssociationMap& assoc);

/// Traffic-independent part of a load evaluation: SINR and equal-share rate
/// of every UE for one association.
struct LinkBudget
{
    std::vector<double> sinr;
    std::vector<double> rate; ///< bits/s
    double noisePowerMc = 0.0;
    double noisePowerSc = 0.0;
};

LinkBudget evaluateLinks(const NetworkTopology& topology, const UeSet& ues, const SleepConfig& sleep,
                         const AssociationMap& assoc);

struct LoadState
{
    std::vector<double> sinr;
    std::vector<double> rate;
    double rhoMc = 0.0;
    std::vector<double> rhoSc;
    double noisePower = 0.0;
    /// UEs whose rate is zero while they offer traffic; their cell load is +inf.
    std::vector<std::size_t> zeroRateUes;

    bool overloaded() const;
    double totalLoad() const;
};

/// Cell loads sum_j omega_j / R_j over the attached UEs. Loads above 1 are
/// reported as is.
LoadState applyTraffic(const LinkBudget& links, const AssociationMap& assoc, const TrafficDraw& traffic,
                       const SleepConfig& sleep);

LoadState computeLoads(const NetworkTopology& topology, const UeSet& ues, const AssociationMap& assoc,
                       const TrafficDraw& traffic, const SleepConfig& sleep);

} // namespace hetsleep

#endif // HETSLEEP_RADIO_LOAD_HPP
