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
#include "hetsleep/net_model.hpp"

#include "hetsleep/error.hpp"
#include "hetsleep/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hetsleep
{

namespace
{

constexpr double kSpeedOfLight = 299792458.0;

Point uniformInDisk(Point centre, double radius, Rng& rng)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = radius * std::sqrt(unit(rng));
    const double theta = 2.0 * std::numbers::pi * unit(rng);
    return {centre.x + r * std::cos(theta), centre.y + r * std::sin(theta)};
}

} // namespace

double distance(Point a, Point b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

double freeSpaceIntercept(double carrierHz)
{
    const double ratio = kSpeedOfLight / (4.0 * std::numbers::pi * carrierHz);
    return ratio * ratio;
}

double dbToLinear(double db)
{
    return std::pow(10.0, db / 10.0);
}

double linearToDb(double linear)
{
    return 10.0 * std::log10(linear);
}

void NetworkTopology::validate() const
{
    if (scPositions.empty())
        throw ConfigError("topology: at least one small cell is required");
    if (!(mcRadius > 0.0))
        throw ConfigError("topology: mcRadius must be positive");
    for (std::size_t i = 0; i < scPositions.size(); ++i)
    {
        // small slack for points generated exactly on the rim
        if (distance(scPositions[i], mcPosition) > mcRadius * (1.0 + 1e-12))
            throw ConfigError("topology: small cell " + std::to_string(i) + " lies outside the macro disk");
    }
    if (!(pTxMc > 0.0) || !(pTxSc > 0.0))
        throw ConfigError("topology: transmit powers must be positive");
    if (!(kMc > 0.0) || !(kSc > 0.0))
        throw ConfigError("topology: path-loss intercepts must be positive");
    if (!(bwMc > 0.0) || !(bwSc > 0.0))
        throw ConfigError("topology: bandwidths must be positive");
    if (!(noiseDensity > 0.0))
        throw ConfigError("topology: noise density must be positive");
    if (!(alphaP >= 2.0))
        throw ConfigError("topology: path-loss exponent must be >= 2");
}

CreVector CreVector::neutral(std::size_t numSc)
{
    return CreVector{std::vector<double>(numSc, 1.0), 1.0};
}

CreVector CreVector::fromDb(std::span<const double> scDb, double mcDb)
{
    CreVector cre;
    cre.phiSc.reserve(scDb.size());
    for (double db : scDb)
        cre.phiSc.push_back(dbToLinear(db));
    cre.phiMc = dbToLinear(mcDb);
    return cre;
}

std::vector<double> CreVector::scDb() const
{
    std::vector<double> out;
    out.reserve(phiSc.size());
    for (double phi : phiSc)
        out.push_back(linearToDb(phi));
    return out;
}

SleepConfig SleepConfig::allOn(std::size_t numSc)
{
    return SleepConfig{std::vector<std::uint8_t>(numSc, 1)};
}

SleepConfig SleepConfig::fromSleptMask(std::size_t numSc, std::uint64_t sleptMask)
{
    SleepConfig cfg = allOn(numSc);
    for (std::size_t l = 0; l < numSc; ++l)
    {
        if ((sleptMask >> l) & 1U)
            cfg.delta[l] = 0;
    }
    return cfg;
}

std::uint64_t SleepConfig::sleptMask() const
{
    std::uint64_t mask = 0;
    for (std::size_t l = 0; l < delta.size(); ++l)
    {
        if (delta[l] == 0)
            mask |= std::uint64_t{1} << l;
    }
    return mask;
}

std::size_t SleepConfig::numOn() const
{
    std::size_t n = 0;
    for (auto d : delta)
        n += d != 0 ? 1 : 0;
    return n;
}

std::size_t AssociationMap::totalCount() const
{
    std::size_t n = macroCount;
    for (auto c : scCounts)
        n += c;
    return n;
}

NetworkTopology makeTopology(const RadioParams& radio, double radius, std::vector<Point> scPositions)
{
    NetworkTopology topo;
    topo.mcPosition = {0.0, 0.0};
    topo.mcRadius = radius;
    topo.scPositions = std::move(scPositions);
    topo.pTxMc = radio.pTxMc;
    topo.pTxSc = radio.pTxSc;
    topo.kMc = radio.kMc > 0.0 ? radio.kMc : freeSpaceIntercept(radio.carrierHz);
    topo.kSc = radio.kSc > 0.0 ? radio.kSc : freeSpaceIntercept(radio.carrierHz);
    topo.alphaP = radio.alphaP;
    topo.bwMc = radio.bwMc;
    topo.bwSc = radio.bwSc;
    topo.noiseDensity = radio.noiseDensity;
    return topo;
}

Deployment deployNetwork(const DeploymentParams& params, const RadioParams& radio, std::uint64_t seed)
{
    if (params.numSc == 0)
        throw ConfigError("scenario: num_sc must be >= 1");
    if (params.numUe == 0)
        throw ConfigError("scenario: num_ue must be >= 1");
    if (!(params.radius > 0.0))
        throw ConfigError("scenario: radius must be positive");
    if (!(params.demandBps >= 0.0))
        throw ConfigError("scenario: per-UE demand must be >= 0");

    Rng rng = makeRng(seed, RngStream::deployment);
    const Point centre{0.0, 0.0};

    std::vector<Point> sc;
    sc.reserve(params.numSc);
    for (std::size_t i = 0; i < params.numSc; ++i)
        sc.push_back(uniformInDisk(centre, params.radius, rng));

    Deployment out{makeTopology(radio, params.radius, std::move(sc)), {}};
    out.ues.positions.reserve(params.numUe);
    for (std::size_t u = 0; u < params.numUe; ++u)
        out.ues.positions.push_back(uniformInDisk(centre, params.radius, rng));
    out.ues.demands.assign(params.numUe, params.demandBps);

    out.topology.validate();
    return out;
}

double receivedPower(Point uePos, CellId cell, const NetworkTopology& topology, const CreVector& cre)
{
    double phi, p, k;
    Point at;
    if (cell.isMacro())
    {
        phi = cre.phiMc;
        p = topology.pTxMc;
        k = topology.kMc;
        at = topology.mcPosition;
    }
    else
    {
        phi = cre.phiSc[cell.scIndex()];
        p = topology.pTxSc;
        k = topology.kSc;
        at = topology.scPositions[cell.scIndex()];
    }
    const double d = std::max(distance(uePos, at), kMinDistanceM);
    return phi * p * k * std::pow(d, -topology.alphaP);
}

AssociationMap associate(const NetworkTopology& topology, const UeSet& ues, const SleepConfig& sleep,
                         const CreVector& cre)
{
    const std::size_t numSc = topology.numSc();
    AssociationMap map;
    map.servingCell.reserve(ues.size());
    map.scCounts.assign(numSc, 0);

    for (const Point& ue : ues.positions)
    {
        bool haveSc = false;
        std::size_t bestSc = 0;
        double bestScPower = 0.0;
        for (std::size_t l = 0; l < numSc; ++l)
        {
            if (!sleep.isOn(l))
                continue;
            const double p = receivedPower(ue, CellId::smallCell(l), topology, cre);
            if (!haveSc || p > bestScPower)
            {
                haveSc = true;
                bestSc = l;
                bestScPower = p;
            }
        }
        const double macroPower = receivedPower(ue, CellId::macro(), topology, cre);
        if (haveSc && bestScPower >= macroPower)
        {
            map.servingCell.push_back(CellId::smallCell(bestSc));
            ++map.scCounts[bestSc];
        }
        else
        {
            map.servingCell.push_back(CellId::macro());
            ++map.macroCount;
        }
    }
    return map;
}

} // namespace hetsleep
