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
#include "hetsleep/cmab.hpp"

#include "hetsleep/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace hetsleep
{

namespace
{

void checkCap(std::size_t numSc, std::size_t cap)
{
    if (numSc > cap)
        throw CapacityError("oracle: exhaustive enumeration over " + std::to_string(numSc) +
                            " small cells exceeds the cap of " + std::to_string(cap));
}

} // namespace

// ---------------------------------------------------------------------------
// RewardPlanner

RewardPlanner::RewardPlanner(const Environment& env, LoadEstimate mode, std::size_t cap)
    : env_(&env), mode_(mode), numSc_(env.numSc())
{
    checkCap(numSc_, cap);
    const TrafficDraw mean = env.meanDraw();
    const LoadState allOn = env.loads(SuperArm::allOn(numSc_), mean);
    allOnRhoMc_ = allOn.rhoMc;
    allOnRhoSc_ = allOn.rhoSc;

    const std::uint64_t count = std::uint64_t{1} << numSc_;
    loadTerm_.resize(count);
    // Planning tables bypass the environment's link cache; 2^L entries of
    // association state would dominate memory for large L.
    for (std::uint64_t mask = 0; mask < count; ++mask)
    {
        const SleepConfig sleep = SleepConfig::fromSleptMask(numSc_, mask);
        const LoadState s = env.loads(sleep, CreVector::neutral(numSc_), mean);
        loadTerm_[mask] = termsFromLoads(mask, s.rhoMc, s.rhoSc);
    }
    if (mode_ == LoadEstimate::empirical)
        observed_.resize(count);
}

double RewardPlanner::termsFromLoads(std::uint64_t mask, double rhoMc, std::span<const double> rhoSc) const
{
    const PowerProfile& mc = env_->profiles().macro;
    const PowerProfile& sc = env_->profiles().sc;
    const PenaltyWeights& pen = env_->penalties();

    double b = mc.eta * mc.pTx * (allOnRhoMc_ - rhoMc);
    double c = 0.0;
    double d = pen.macro * std::max(0.0, rhoMc - 1.0);
    for (std::size_t i = 0; i < numSc_; ++i)
    {
        if ((mask >> i) & 1U)
            continue;
        c += sc.eta * sc.pTx * (allOnRhoSc_[i] - rhoSc[i]);
        d += pen.sc * std::max(0.0, rhoSc[i] - 1.0);
    }
    return b + c - d;
}

double RewardPlanner::plannedReward(std::uint64_t mask, std::span<const double> mu) const
{
    double a = 0.0;
    for (std::size_t i = 0; i < numSc_; ++i)
    {
        if ((mask >> i) & 1U)
            a += mu[i];
    }
    return a + loadTerm_[mask];
}

std::vector<double> RewardPlanner::plannedRewards(std::span<const double> mu) const
{
    if (mu.size() != numSc_)
        throw DomainError("planner: mean vector has " + std::to_string(mu.size()) + " entries, expected " +
                          std::to_string(numSc_));
    std::vector<double> out(loadTerm_.size());
    for (std::uint64_t mask = 0; mask < out.size(); ++mask)
        out[mask] = plannedReward(mask, mu);
    return out;
}

void RewardPlanner::observe(const SuperArm& arm, const LoadState& played)
{
    if (mode_ != LoadEstimate::empirical)
        return;
    Running& run = observed_[arm.mask()];
    if (run.rhoSc.empty())
        run.rhoSc.assign(numSc_, 0.0);
    ++run.count;
    const double w = 1.0 / static_cast<double>(run.count);
    run.rhoMc += w * (played.rhoMc - run.rhoMc);
    for (std::size_t i = 0; i < numSc_; ++i)
        run.rhoSc[i] += w * (played.rhoSc[i] - run.rhoSc[i]);
    loadTerm_[arm.mask()] = termsFromLoads(arm.mask(), run.rhoMc, run.rhoSc);
}

// ---------------------------------------------------------------------------
// Oracle

std::uint64_t argmaxSuperArm(std::span<const double> rewards)
{
    std::uint64_t best = 0;
    for (std::uint64_t mask = 1; mask < rewards.size(); ++mask)
    {
        const double r = rewards[mask];
        const double rb = rewards[best];
        if (r > rb || (r == rb && std::popcount(mask) < std::popcount(best)))
            best = mask;
    }
    return best;
}

double approximationThreshold(double bestReward, double alpha)
{
    return bestReward - (1.0 - alpha) * std::abs(bestReward);
}

ApproximationOracle::ApproximationOracle(double alpha, double beta, std::size_t cap)
    : alpha_(alpha), beta_(beta), cap_(cap)
{
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw ConfigError("oracle: alpha must lie in (0, 1]");
    if (!(beta > 0.0 && beta <= 1.0))
        throw ConfigError("oracle: beta must lie in (0, 1]");
}

OracleDecision ApproximationOracle::select(std::span<const double> mu, const RewardPlanner& planner,
                                           Rng& rng) const
{
    checkCap(planner.numSc(), cap_);
    const std::vector<double> rewards = planner.plannedRewards(mu);
    return selectFromRewards(rewards, planner.numSc(), rng);
}

OracleDecision ApproximationOracle::selectFromRewards(std::span<const double> rewards, std::size_t numSc,
                                                      Rng& rng) const
{
    checkCap(numSc, cap_);
    if (rewards.size() != (std::size_t{1} << numSc))
        throw DomainError("oracle: reward table does not cover 2^L super-arms");

    OracleDecision out;
    const std::uint64_t best = argmaxSuperArm(rewards);
    out.best = SuperArm(numSc, best);
    out.bestReward = rewards[best];

    const double threshold = approximationThreshold(out.bestReward, alpha_);
    std::vector<std::uint64_t> candidates;
    for (std::uint64_t mask = 0; mask < rewards.size(); ++mask)
    {
        if (rewards[mask] >= threshold)
            candidates.push_back(mask);
    }
    out.approxSetSize = candidates.size();

    std::uniform_real_distribution<double> coin(0.0, 1.0);
    out.success = coin(rng) < beta_;
    if (out.success)
    {
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        out.arm = SuperArm(numSc, candidates[pick(rng)]);
    }
    else
    {
        std::uniform_int_distribution<std::uint64_t> pick(0, rewards.size() - 1);
        out.arm = SuperArm(numSc, pick(rng));
    }
    return out;
}

// ---------------------------------------------------------------------------
// CUCB

bool ArmStatistics::initialized() const
{
    return !playCount.empty() &&
           std::all_of(playCount.begin(), playCount.end(), [](std::uint64_t t) { return t >= 1; });
}

void ArmStatistics::record(std::size_t arm, double sample)
{
    ++playCount[arm];
    empiricalMean[arm] += (sample - empiricalMean[arm]) / static_cast<double>(playCount[arm]);
}

std::vector<double> ucbIndices(const ArmStatistics& stats, std::uint64_t t)
{
    if (!stats.initialized())
        throw StateError("ucb: every arm must be played at least once");
    const double logT = std::log(static_cast<double>(t));
    std::vector<double> out(stats.playCount.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = stats.empiricalMean[i] + std::sqrt(3.0 * logT / (2.0 * static_cast<double>(stats.playCount[i])));
    return out;
}

RoundOutcome playRound(const Environment& env, const SuperArm& arm, std::uint64_t round)
{
    RoundOutcome out;
    out.round = round;
    out.arm = arm;
    const TrafficDraw traffic = env.drawRound(round);
    out.allOn = env.loads(SuperArm::allOn(env.numSc()), traffic);
    out.played = arm.empty() ? out.allOn : env.loads(arm, traffic);
    out.reward = env.reward(arm, out.played, out.allOn);
    out.power = networkPower(env.profiles(), out.played, arm.sleepConfig());
    for (std::size_t i : arm.members())
        out.simpleArmSamples.push_back(env.simpleArmSample(i, out.allOn));
    return out;
}

InitResult initializePhase(const Environment& env, RewardPlanner* planner)
{
    const std::size_t numSc = env.numSc();
    InitResult out;
    out.stats.playCount.assign(numSc, 0);
    out.stats.empiricalMean.assign(numSc, 0.0);
    for (std::size_t i = 0; i < numSc; ++i)
    {
        RoundOutcome r = playRound(env, SuperArm::singleton(numSc, i), i + 1);
        out.stats.record(i, r.simpleArmSamples.front());
        if (planner != nullptr)
            planner->observe(r.arm, r.played);
        out.rounds.push_back(std::move(r));
    }
    out.stats.round = numSc;
    return out;
}

StepResult cucbStep(ArmStatistics& stats, const Environment& env, RewardPlanner& planner,
                    const ApproximationOracle& oracle, Rng& rng)
{
    if (!stats.initialized())
        throw StateError("cucbStep: called before the initialization phase");
    StepResult out;
    const std::uint64_t t = ++stats.round;
    out.ucb = ucbIndices(stats, t);
    out.decision = oracle.select(out.ucb, planner, rng);
    out.outcome = playRound(env, out.decision.arm, t);
    const auto members = out.decision.arm.members();
    for (std::size_t k = 0; k < members.size(); ++k)
        stats.record(members[k], out.outcome.simpleArmSamples[k]);
    planner.observe(out.decision.arm, out.outcome.played);
    return out;
}

CucbEngine::CucbEngine(const Environment& env, ApproximationOracle oracle, std::uint64_t seed, LoadEstimate mode)
    : env_(&env), oracle_(oracle), planner_(env, mode, oracle.cap()), rng_(makeRng(seed, RngStream::oracle))
{
}

const std::vector<RoundOutcome>& CucbEngine::initialize()
{
    InitResult init = initializePhase(*env_, &planner_);
    stats_ = std::move(init.stats);
    initRounds_ = std::move(init.rounds);
    return initRounds_;
}

StepResult CucbEngine::step()
{
    return cucbStep(stats_, *env_, planner_, oracle_, rng_);
}

SuperArm CucbEngine::exploitArm() const
{
    if (!stats_.initialized())
        throw StateError("exploitArm: engine not initialized");
    const std::vector<double> rewards = planner_.plannedRewards(stats_.empiricalMean);
    return SuperArm(env_->numSc(), argmaxSuperArm(rewards));
}

// ---------------------------------------------------------------------------
// Benchmark and regret

Benchmark computeBenchmark(const Environment& env, std::size_t cap)
{
    RewardPlanner planner(env, LoadEstimate::meanTraffic, cap);
    Benchmark out;
    out.rewards = planner.plannedRewards(env.trueMeans());
    out.bestMask = argmaxSuperArm(out.rewards);
    out.bestReward = out.rewards[out.bestMask];
    return out;
}

RegretLedger::RegretLedger(double alpha, double beta, std::optional<double> optimalReward)
    : alpha_(alpha), beta_(beta), optimalReward_(optimalReward)
{
}

void RegretLedger::record(double roundReward)
{
    cumulative_ += roundReward;
    ++rounds_;
}

std::optional<double> RegretLedger::regret() const
{
    if (!optimalReward_)
        return std::nullopt;
    return static_cast<double>(rounds_) * alpha_ * beta_ * *optimalReward_ - cumulative_;
}

} // namespace hetsleep
