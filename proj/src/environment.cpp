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
#include "hetsleep/environment.hpp"

#include "hetsleep/error.hpp"

#include <algorithm>
#include <bit>

namespace hetsleep
{

SuperArm::SuperArm(std::size_t numSc, std::uint64_t sleptMask) : numSc_(numSc), mask_(sleptMask)
{
    if (numSc > 63)
        throw CapacityError("super-arm: at most 63 small cells are supported");
    if (numSc < 64 && (sleptMask >> numSc) != 0)
        throw DomainError("super-arm: mask references a small cell beyond L");
}

SuperArm SuperArm::singleton(std::size_t numSc, std::size_t arm)
{
    return SuperArm(numSc, std::uint64_t{1} << arm);
}

std::size_t SuperArm::size() const
{
    return static_cast<std::size_t>(std::popcount(mask_));
}

std::vector<std::size_t> SuperArm::members() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < numSc_; ++i)
    {
        if (contains(i))
            out.push_back(i);
    }
    return out;
}

Environment::Environment(NetworkTopology topology, UeSet ues, NetworkProfiles profiles, TrafficParams traffic,
                         PenaltyWeights penalties, std::uint64_t trafficSeed)
    : topology_(std::move(topology))
    , ues_(std::move(ues))
    , profiles_(profiles)
    , traffic_(traffic)
    , penalties_(penalties)
    , trafficSeed_(trafficSeed)
{
    topology_.validate();
    profiles_.macro.validate();
    profiles_.sc.validate();
    if (ues_.size() == 0)
        throw ConfigError("environment: at least one UE is required");
}

TrafficDraw Environment::drawRound(std::uint64_t round) const
{
    return drawTraffic(traffic_, ues_.size(), trafficSeed_, round);
}

TrafficDraw Environment::meanDraw() const
{
    return meanTraffic(traffic_, ues_.size());
}

const Environment::Links& Environment::links(const SuperArm& arm) const
{
    std::lock_guard lock(cacheMutex_);
    auto it = cache_.find(arm.mask());
    if (it != cache_.end())
        return *it->second;
    const SleepConfig sleep = arm.sleepConfig();
    auto entry = std::make_unique<Links>();
    entry->assoc = associate(topology_, ues_, sleep, CreVector::neutral(numSc()));
    entry->budget = evaluateLinks(topology_, ues_, sleep, entry->assoc);
    const Links& ref = *entry;
    cache_.emplace(arm.mask(), std::move(entry));
    return ref;
}

LoadState Environment::loads(const SuperArm& arm, const TrafficDraw& traffic) const
{
    const Links& l = links(arm);
    return applyTraffic(l.budget, l.assoc, traffic, arm.sleepConfig());
}

LoadState Environment::loads(const SleepConfig& sleep, const CreVector& cre, const TrafficDraw& traffic) const
{
    const AssociationMap assoc = associate(topology_, ues_, sleep, cre);
    return computeLoads(topology_, ues_, assoc, traffic, sleep);
}

double Environment::simpleArmSample(std::size_t arm, const LoadState& allOnLoads) const
{
    return scPower(profiles_.sc, allOnLoads.rhoSc[arm], true) - profiles_.sc.pSleep;
}

double Environment::simpleArmRewardSample(std::size_t arm, const TrafficDraw& traffic) const
{
    return simpleArmSample(arm, loads(SuperArm::allOn(numSc()), traffic));
}

RewardBreakdown Environment::reward(const SuperArm& arm, const LoadState& played, const LoadState& allOn) const
{
    const PowerProfile& mc = profiles_.macro;
    const PowerProfile& sc = profiles_.sc;

    RewardBreakdown r;
    r.termB = mc.eta * mc.pTx * (allOn.rhoMc - played.rhoMc);
    r.termD = penalties_.macro * std::max(0.0, played.rhoMc - 1.0);
    for (std::size_t i = 0; i < numSc(); ++i)
    {
        if (arm.contains(i))
        {
            r.termA += simpleArmSample(i, allOn);
        }
        else
        {
            r.termC += sc.eta * sc.pTx * (allOn.rhoSc[i] - played.rhoSc[i]);
            r.termD += penalties_.sc * std::max(0.0, played.rhoSc[i] - 1.0);
        }
    }
    r.total = r.termA + r.termB + r.termC - r.termD;
    return r;
}

RewardBreakdown Environment::superArmReward(const SuperArm& arm, const TrafficDraw& traffic) const
{
    const LoadState allOn = loads(SuperArm::allOn(numSc()), traffic);
    if (arm.empty())
        return reward(arm, allOn, allOn);
    return reward(arm, loads(arm, traffic), allOn);
}

std::vector<double> Environment::trueMeans() const
{
    const LoadState allOn = loads(SuperArm::allOn(numSc()), meanDraw());
    std::vector<double> mu(numSc());
    for (std::size_t i = 0; i < numSc(); ++i)
        mu[i] = simpleArmSample(i, allOn);
    return mu;
}

} // namespace hetsleep
