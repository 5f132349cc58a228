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
#include "hetsleep/radio_load.hpp"

#include "hetsleep/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace hetsleep
{

namespace
{

// Unbiased received power; SINR never sees the CRE factors.
double rawPower(Point ue, Point cell, double pTx, double k, double alpha)
{
    const double d = std::max(distance(ue, cell), kMinDistanceM);
    return pTx * k * std::pow(d, -alpha);
}

} // namespace

TrafficDraw drawTraffic(const TrafficParams& params, std::size_t numUe, std::uint64_t roundIndex, Rng& rng)
{
    TrafficDraw draw;
    draw.roundIndex = roundIndex;
    draw.perUeOffered.assign(numUe, 0.0);
    if (params.meanRequestRate <= 0.0)
        return draw;
    std::poisson_distribution<long long> requests(params.meanRequestRate);
    for (auto& offered : draw.perUeOffered)
        offered = params.requestSizeBits * static_cast<double>(requests(rng));
    return draw;
}

TrafficDraw drawTraffic(const TrafficParams& params, std::size_t numUe, std::uint64_t seed,
                        std::uint64_t roundIndex)
{
    Rng rng = makeRng(seed, RngStream::traffic, roundIndex);
    return drawTraffic(params, numUe, roundIndex, rng);
}

TrafficDraw meanTraffic(const TrafficParams& params, std::size_t numUe)
{
    return TrafficDraw{std::vector<double>(numUe, params.meanOfferedBps()), 0};
}

double noisePower(double density, double bandwidth)
{
    return density * bandwidth;
}

double sinrMacroUe(std::size_t ue, const NetworkTopology& topology, const UeSet& ues, const SleepConfig& sleep,
                   const AssociationMap& assoc)
{
    if (!assoc.servingCell.at(ue).isMacro())
        throw StateError("sinrMacroUe: UE " + std::to_string(ue) + " is not served by the macro");
    const Point pos = ues.positions[ue];
    const double signal = rawPower(pos, topology.mcPosition, topology.pTxMc, topology.kMc, topology.alphaP);
    double denom = noisePower(topology.noiseDensity, topology.bwMc);
    for (std::size_t l = 0; l < topology.numSc(); ++l)
    {
        if (sleep.isOn(l))
            denom += rawPower(pos, topology.scPositions[l], topology.pTxSc, topology.kSc, topology.alphaP);
    }
    return signal / denom;
}

double sinrScUe(std::size_t ue, std::size_t sc, const NetworkTopology& topology, const UeSet& ues,
                const SleepConfig& sleep, const AssociationMap& assoc)
{
    if (sc >= topology.numSc() || !sleep.isOn(sc))
        throw StateError("sinrScUe: serving small cell " + std::to_string(sc) + " is asleep");
    if (assoc.servingCell.at(ue) != CellId::smallCell(sc))
        throw StateError("sinrScUe: UE " + std::to_string(ue) + " is not served by small cell " +
                         std::to_string(sc));
    const Point pos = ues.positions[ue];
    const double signal = rawPower(pos, topology.scPositions[sc], topology.pTxSc, topology.kSc, topology.alphaP);
    double denom = noisePower(topology.noiseDensity, topology.bwSc) +
                   rawPower(pos, topology.mcPosition, topology.pTxMc, topology.kMc, topology.alphaP);
    for (std::size_t l = 0; l < topology.numSc(); ++l)
    {
        if (l != sc && sleep.isOn(l))
            denom += rawPower(pos, topology.scPositions[l], topology.pTxSc, topology.kSc, topology.alphaP);
    }
    return signal / denom;
}

LinkBudget evaluateLinks(const NetworkTopology& topology, const UeSet& ues, const SleepConfig& sleep,
                         const AssociationMap& assoc)
{
    LinkBudget links;
    links.noisePowerMc = noisePower(topology.noiseDensity, topology.bwMc);
    links.noisePowerSc = noisePower(topology.noiseDensity, topology.bwSc);
    links.sinr.resize(ues.size());
    links.rate.resize(ues.size());
    for (std::size_t j = 0; j < ues.size(); ++j)
    {
        const CellId cell = assoc.servingCell[j];
        if (cell.isMacro())
        {
            links.sinr[j] = sinrMacroUe(j, topology, ues, sleep, assoc);
            links.rate[j] =
                topology.bwMc / static_cast<double>(assoc.macroCount) * std::log2(1.0 + links.sinr[j]);
        }
        else
        {
            const std::size_t i = cell.scIndex();
            links.sinr[j] = sinrScUe(j, i, topology, ues, sleep, assoc);
            links.rate[j] =
                topology.bwSc / static_cast<double>(assoc.scCounts[i]) * std::log2(1.0 + links.sinr[j]);
        }
    }
    return links;
}

bool LoadState::overloaded() const
{
    if (rhoMc > 1.0)
        return true;
    return std::any_of(rhoSc.begin(), rhoSc.end(), [](double r) { return r > 1.0; });
}

double LoadState::totalLoad() const
{
    double total = rhoMc;
    for (double r : rhoSc)
        total += r;
    return total;
}

LoadState applyTraffic(const LinkBudget& links, const AssociationMap& assoc, const TrafficDraw& traffic,
                       const SleepConfig& sleep)
{
    LoadState state;
    state.sinr = links.sinr;
    state.rate = links.rate;
    state.noisePower = links.noisePowerMc;
    state.rhoSc.assign(sleep.numSc(), 0.0);

    for (std::size_t j = 0; j < links.rate.size(); ++j)
    {
        const double offered = traffic.perUeOffered[j];
        double load = 0.0;
        if (!(links.rate[j] > 0.0))
        {
            state.zeroRateUes.push_back(j);
            if (offered > 0.0)
                load = std::numeric_limits<double>::infinity();
        }
        else
        {
            load = offered / links.rate[j];
        }
        const CellId cell = assoc.servingCell[j];
        if (cell.isMacro())
            state.rhoMc += load;
        else
            state.rhoSc[cell.scIndex()] += load;
    }
    return state;
}

LoadState computeLoads(const NetworkTopology& topology, const UeSet& ues, const AssociationMap& assoc,
                       const TrafficDraw& traffic, const SleepConfig& sleep)
{
    return applyTraffic(evaluateLinks(topology, ues, sleep, assoc), assoc, traffic, sleep);
}

} // namespace hetsleep
