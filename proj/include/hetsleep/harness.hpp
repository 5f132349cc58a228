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
#ifndef HETSLEEP_HARNESS_HPP
#define HETSLEEP_HARNESS_HPP

#include "hetsleep/cmab.hpp"
#include "hetsleep/config.hpp"
#include "hetsleep/cre_optimizer.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hetsleep
{

enum class Phase
{
    init,   ///< CUCB initialization rounds
    learn,  ///< bandit horizon
    steady, ///< post-learning rounds (CUCB with tuned CRE)
};

std::string_view toString(Phase p);

struct RoundRecord
{
    std::uint64_t round = 0;
    Phase phase = Phase::learn;
    Strategy strategy = Strategy::cucb;
    std::uint64_t seed = 0;
    std::uint64_t superArmMask = 0; ///< bit i set: SC i asleep
    RewardBreakdown reward;
    double totalPower = 0.0;
    double mcPower = 0.0;
    double rhoMc = 0.0;
    std::vector<double> rhoSc;
    double meanRate = 0.0;
    double minRate = 0.0;
    double sumRate = 0.0;
    std::size_t qosViolations = 0; ///< UEs with rate < R_min
    std::optional<double> regret;
};

struct ExperimentResult
{
    Strategy strategy = Strategy::cucb;
    std::uint64_t seed = 0;
    std::size_t numSc = 0;
    std::size_t numUe = 0;
    std::vector<RoundRecord> records;
    std::optional<Benchmark> benchmark;
    std::uint64_t finalMask = 0;    ///< super-arm used in the steady phase
    std::vector<double> finalCreDb; ///< per SC, 0 for sleeping SCs and baselines
};

/// Deploys the network for `seed` and runs `strategy`: `horizon` learning
/// rounds (CUCB: L init rounds first) followed by `steadyRounds` steady rounds.
/// Round t uses traffic draw t of the seed, so strategies are paired.
ExperimentResult runExperiment(const ExperimentConfig& config, Strategy strategy, std::uint64_t seed);

/// Stable CSV column order: fixed columns then rho_sc_<i> for every SC.
std::vector<std::string> recordHeader(std::size_t numSc);
void writeRecords(std::ostream& out, const ExperimentResult& result);

/// Recomputes total power from the logged loads and the profiles.
double recomputePower(const RoundRecord& record, const NetworkProfiles& profiles);

struct AggregateRow
{
    std::size_t axisValue = 0;
    Strategy strategy = Strategy::cucb;
    double meanPower = 0.0;
    double meanRate = 0.0;
    double minRate = 0.0;
    double meanSumRate = 0.0;
    double energyEfficiency = 0.0; ///< mean sum rate / mean power, bits/s/W
    double qosViolationFraction = 0.0;
    std::uint64_t finalMask = 0;
};

/// Aggregates the steady-phase records of the runs of one (axis value, strategy).
AggregateRow aggregate(std::size_t axisValue, Strategy strategy, const std::vector<ExperimentResult>& runs);

std::vector<std::string> aggregateHeader();
void writeAggregate(std::ostream& out, const std::vector<AggregateRow>& rows);

struct SweepOutput
{
    std::vector<std::filesystem::path> runFiles;
    std::filesystem::path aggregateFile;
    std::vector<AggregateRow> rows;
};

/// One CSV per (axis value, strategy, seed) plus aggregate.csv. Refuses with
/// IoError when any target already exists unless `force`.
SweepOutput runSweep(const ExperimentConfig& config, const std::filesystem::path& outDir, bool force);

/// Runs the configured strategy for one seed and writes run_<strategy>_seed<seed>.csv.
std::filesystem::path runToDirectory(const ExperimentConfig& config, std::uint64_t seed,
                                     const std::filesystem::path& outDir, bool force);

/// Brute-force table of every super-arm at mean traffic with the true means.
void writeOracleBench(std::ostream& out, const ExperimentConfig& config, std::uint64_t seed);
std::filesystem::path oracleBenchToDirectory(const ExperimentConfig& config, std::uint64_t seed,
                                             const std::filesystem::path& outDir, bool force);

} // namespace hetsleep

#endif // HETSLEEP_HARNESS_HPP
