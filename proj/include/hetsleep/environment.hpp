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
#ifndef HETSLEEP_ENVIRONMENT_HPP
#define HETSLEEP_ENVIRONMENT_HPP

#include "hetsleep/net_model.hpp"
#include "hetsleep/power_model.hpp"
#include "hetsleep/radio_load.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace hetsleep
{

/// A set of small cells put to sleep. Bit i of the mask set means SC i sleeps;
/// the empty set is ALL-ON.
class SuperArm
{
public:
    SuperArm() = default;
    SuperArm(std::size_t numSc, std::uint64_t sleptMask);

    static SuperArm allOn(std::size_t numSc) { return SuperArm(numSc, 0); }
    static SuperArm singleton(std::size_t numSc, std::size_t arm);

    std::size_t numSc() const { return numSc_; }
    std::uint64_t mask() const { return mask_; }
    bool contains(std::size_t arm) const { return (mask_ >> arm) & 1U; }
    std::size_t size() const;
    bool empty() const { return mask_ == 0; }
    std::vector<std::size_t> members() const;
    SleepConfig sleepConfig() const { return SleepConfig::fromSleptMask(numSc_, mask_); }

    friend bool operator==(const SuperArm&, const SuperArm&) = default;

private:
    std::size_t numSc_ = 0;
    std::uint64_t mask_ = 0;
};

/// Overload penalty weights of the super-arm reward.
struct PenaltyWeights
{
    double macro = 100.0;
    double sc = 100.0;
};

struct RewardBreakdown
{
    double termA = 0.0; ///< sleep savings of the slept SCs
    double termB = 0.0; ///< macro power change
    double termC = 0.0; ///< power change of the SCs kept on
    double termD = 0.0; ///< overload penalty, >= 0
    double total = 0.0; ///< A + B + C - D
};

/// Frozen topology and UE layout plus the traffic process. Traffic for round t
/// is a pure function of (trafficSeed, t). Association and SINR per sleep mask
/// are cached since they do not depend on traffic.
class Environment
{
public:
    Environment(NetworkTopology topology, UeSet ues, NetworkProfiles profiles, TrafficParams traffic,
                PenaltyWeights penalties, std::uint64_t trafficSeed);

    const NetworkTopology& topology() const { return topology_; }
    const UeSet& ues() const { return ues_; }
    const NetworkProfiles& profiles() const { return profiles_; }
    const TrafficParams& trafficParams() const { return traffic_; }
    const PenaltyWeights& penalties() const { return penalties_; }
    std::size_t numSc() const { return topology_.numSc(); }
    std::size_t numUe() const { return ues_.size(); }

    TrafficDraw drawRound(std::uint64_t round) const;
    TrafficDraw meanDraw() const;

    struct Links
    {
        AssociationMap assoc;
        LinkBudget budget;
    };

    /// Association and link budget of `arm` at neutral CRE.
    const Links& links(const SuperArm& arm) const;

    LoadState loads(const SuperArm& arm, const TrafficDraw& traffic) const;
    LoadState loads(const SleepConfig& sleep, const CreVector& cre, const TrafficDraw& traffic) const;

    /// P_{l,all} - P_sleep for the ALL-ON loads of one draw.
    double simpleArmSample(std::size_t arm, const LoadState& allOnLoads) const;
    double simpleArmRewardSample(std::size_t arm, const TrafficDraw& traffic) const;

    /// Reward of playing `arm` given its loads and the paired ALL-ON loads.
    RewardBreakdown reward(const SuperArm& arm, const LoadState& played, const LoadState& allOn) const;
    RewardBreakdown superArmReward(const SuperArm& arm, const TrafficDraw& traffic) const;

    /// Exact expected simple-arm rewards. Loads are linear in traffic and the
    /// association does not depend on it, so mean traffic gives the expectation.
    std::vector<double> trueMeans() const;

private:
    NetworkTopology topology_;
    UeSet ues_;
    NetworkProfiles profiles_;
    TrafficParams traffic_;
    PenaltyWeights penalties_;
    std::uint64_t trafficSeed_;

    mutable std::mutex cacheMutex_;
    mutable std::unordered_map<std::uint64_t, std::unique_ptr<Links>> cache_;
};

} // namespace hetsleep

#endif // HETSLEEP_ENVIRONMENT_HPP
