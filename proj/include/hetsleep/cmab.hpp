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
#ifndef HETSLEEP_CMAB_HPP
#define HETSLEEP_CMAB_HPP

#include "hetsleep/environment.hpp"
#include "hetsleep/rng.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hetsleep
{

inline constexpr std::size_t kDefaultOracleCap = 20;

/// Where the planner takes the expected loads for the B, C and D terms.
enum class LoadEstimate
{
    meanTraffic, ///< deterministic association evaluated at mean traffic
    empirical,   ///< running average of loads observed when S was played; mean traffic until then
};

/// Planned super-arm reward r_mu(S) = sum_{i in S} mu_i + B(S) + C(S) - D(S),
/// with B, C, D from expected loads. The load part does not depend on mu and
/// is tabulated once per super-arm.
class RewardPlanner
{
public:
    RewardPlanner(const Environment& env, LoadEstimate mode = LoadEstimate::meanTraffic,
                  std::size_t cap = kDefaultOracleCap);

    std::size_t numSc() const { return numSc_; }
    std::size_t numSuperArms() const { return loadTerm_.size(); }

    /// B + C - D of super-arm `mask` under the current load estimates.
    double loadTerm(std::uint64_t mask) const { return loadTerm_[mask]; }
    double plannedReward(std::uint64_t mask, std::span<const double> mu) const;
    std::vector<double> plannedRewards(std::span<const double> mu) const;

    /// Feeds one observation; only used in empirical mode.
    void observe(const SuperArm& arm, const LoadState& played);

private:
    double termsFromLoads(std::uint64_t mask, double rhoMc, std::span<const double> rhoSc) const;

    const Environment* env_;
    LoadEstimate mode_;
    std::size_t numSc_;
    double allOnRhoMc_ = 0.0;
    std::vector<double> allOnRhoSc_;
    std::vector<double> loadTerm_;

    struct Running
    {
        std::uint64_t count = 0;
        double rhoMc = 0.0;
        std::vector<double> rhoSc;
    };
    std::vector<Running> observed_;
};

struct OracleDecision
{
    SuperArm arm;
    SuperArm best;           ///< brute-force argmax S*
    double bestReward = 0.0; ///< r(S*)
    bool success = true;     ///< false when the 1 - beta branch fired
    std::size_t approxSetSize = 0;
};

/// (alpha, beta)-approximation oracle over all 2^L super-arms.
class ApproximationOracle
{
public:
    ApproximationOracle(double alpha, double beta, std::size_t cap = kDefaultOracleCap);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    std::size_t cap() const { return cap_; }

    /// Scores every super-arm with `planner` and `mu`, then with probability
    /// beta draws uniformly among those within factor alpha of the best, and
    /// otherwise uniformly among all super-arms.
    OracleDecision select(std::span<const double> mu, const RewardPlanner& planner, Rng& rng) const;

    /// Same selection from precomputed rewards indexed by mask.
    OracleDecision selectFromRewards(std::span<const double> rewards, std::size_t numSc, Rng& rng) const;

private:
    double alpha_;
    double beta_;
    std::size_t cap_;
};

/// argmax over masks with ties to the smaller cardinality, then smaller mask.
std::uint64_t argmaxSuperArm(std::span<const double> rewards);

/// Threshold alpha * r* generalised to r* < 0 as r* - (1 - alpha)|r*| so that
/// S* always qualifies.
double approximationThreshold(double bestReward, double alpha);

struct ArmStatistics
{
    std::vector<std::uint64_t> playCount;
    std::vector<double> empiricalMean;
    std::uint64_t round = 0;

    bool initialized() const;
    void record(std::size_t arm, double sample);
};

/// Optimistic index mu_hat_i + sqrt(3 ln t / (2 T_i)).
std::vector<double> ucbIndices(const ArmStatistics& stats, std::uint64_t t);

struct RoundOutcome
{
    std::uint64_t round = 0;
    SuperArm arm;
    RewardBreakdown reward;
    LoadState played;
    LoadState allOn;
    PowerReport power;
    std::vector<double> simpleArmSamples; ///< per arm in S, in member order
};

/// Plays `arm` against the traffic of `round` and returns the telemetry.
RoundOutcome playRound(const Environment& env, const SuperArm& arm, std::uint64_t round);

/// Plays every singleton {i} once (rounds 1..L); afterwards T_i = 1 and t = L.
struct InitResult
{
    ArmStatistics stats;
    std::vector<RoundOutcome> rounds;
};
InitResult initializePhase(const Environment& env, RewardPlanner* planner = nullptr);

struct StepResult
{
    RoundOutcome outcome;
    OracleDecision decision;
    std::vector<double> ucb;
};

/// One UCB round: t += 1, inflate means, call the oracle, play, update the
/// statistics of the arms in the returned super-arm. Throws StateError before
/// initialization.
StepResult cucbStep(ArmStatistics& stats, const Environment& env, RewardPlanner& planner,
                    const ApproximationOracle& oracle, Rng& rng);

/// CUCB learner bundling the statistics, planner and oracle of one run.
class CucbEngine
{
public:
    CucbEngine(const Environment& env, ApproximationOracle oracle, std::uint64_t seed,
               LoadEstimate mode = LoadEstimate::meanTraffic);

    const std::vector<RoundOutcome>& initialize();
    StepResult step();

    const ArmStatistics& stats() const { return stats_; }
    const RewardPlanner& planner() const { return planner_; }

    /// Greedy super-arm for the learned means (alpha = beta = 1, no bonus).
    SuperArm exploitArm() const;

private:
    const Environment* env_;
    ApproximationOracle oracle_;
    RewardPlanner planner_;
    Rng rng_;
    ArmStatistics stats_;
    std::vector<RoundOutcome> initRounds_;
};

/// Brute-force benchmark: r_mu(S) with the true means for every super-arm.
struct Benchmark
{
    std::vector<double> rewards;
    std::uint64_t bestMask = 0;
    double bestReward = 0.0;
};
Benchmark computeBenchmark(const Environment& env, std::size_t cap = kDefaultOracleCap);

/// (alpha, beta)-approximation regret n * alpha * beta * r* - sum r(S_t).
class RegretLedger
{
public:
    RegretLedger(double alpha, double beta, std::optional<double> optimalReward = std::nullopt);

    void record(double roundReward);
    std::uint64_t rounds() const { return rounds_; }
    double cumulativeReward() const { return cumulative_; }
    bool hasBenchmark() const { return optimalReward_.has_value(); }
    /// Empty when no benchmark was computed.
    std::optional<double> regret() const;

private:
    double alpha_;
    double beta_;
    std::optional<double> optimalReward_;
    double cumulative_ = 0.0;
    std::uint64_t rounds_ = 0;
};

} // namespace hetsleep

#endif // HETSLEEP_CMAB_HPP
