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
#include "hetsleep/harness.hpp"

#include "hetsleep/csv.hpp"
#include "hetsleep/error.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>

namespace hetsleep
{

namespace fs = std::filesystem;

namespace
{

Environment buildEnvironment(const ExperimentConfig& config, std::uint64_t seed)
{
    Deployment d = deployNetwork(config.deployment(), config.radio(), seed);
    return Environment(std::move(d.topology), std::move(d.ues), config.networkProfiles(), config.traffic,
                       config.penalties, seed);
}

RoundRecord makeRecord(const ExperimentConfig& config, Strategy strategy, std::uint64_t seed, Phase phase,
                       const RoundOutcome& o)
{
    RoundRecord r;
    r.round = o.round;
    r.phase = phase;
    r.strategy = strategy;
    r.seed = seed;
    r.superArmMask = o.arm.mask();
    r.reward = o.reward;
    r.totalPower = o.power.totalPower;
    r.mcPower = o.power.mcPower;
    r.rhoMc = o.played.rhoMc;
    r.rhoSc = o.played.rhoSc;
    r.minRate = std::numeric_limits<double>::infinity();
    for (double rate : o.played.rate)
    {
        r.sumRate += rate;
        r.minRate = std::min(r.minRate, rate);
        if (rate < config.rMinBps)
            ++r.qosViolations;
    }
    r.meanRate = r.sumRate / static_cast<double>(o.played.rate.size());
    return r;
}

// Fixed super-arm with fixed CRE biases; association is computed once.
class SteadyPlayer
{
public:
    SteadyPlayer(const Environment& env, const SuperArm& arm, const CreVector& cre)
        : env_(env), arm_(arm), sleep_(arm.sleepConfig())
    {
        assoc_ = associate(env.topology(), env.ues(), sleep_, cre);
        links_ = evaluateLinks(env.topology(), env.ues(), sleep_, assoc_);
    }

    RoundOutcome play(std::uint64_t round) const
    {
        RoundOutcome out;
        out.round = round;
        out.arm = arm_;
        const TrafficDraw traffic = env_.drawRound(round);
        out.allOn = env_.loads(SuperArm::allOn(env_.numSc()), traffic);
        out.played = applyTraffic(links_, assoc_, traffic, sleep_);
        out.reward = env_.reward(arm_, out.played, out.allOn);
        out.power = networkPower(env_.profiles(), out.played, sleep_);
        return out;
    }

private:
    const Environment& env_;
    SuperArm arm_;
    SleepConfig sleep_;
    AssociationMap assoc_;
    LinkBudget links_;
};

void ensureWritable(const std::vector<fs::path>& targets, bool force)
{
    if (force)
        return;
    for (const fs::path& p : targets)
    {
        if (fs::exists(p))
            throw IoError("output file '" + p.string() + "' already exists (use --force to overwrite)");
    }
}

std::ofstream openOutput(const fs::path& path)
{
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot write '" + path.string() + "'");
    return out;
}

void writeRow(std::ostream& out, const std::vector<std::string>& fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i)
    {
        if (i > 0)
            out << ',';
        out << fields[i];
    }
    out << '\n';
}

} // namespace

std::string_view toString(Phase p)
{
    switch (p)
    {
    case Phase::init:
        return "init";
    case Phase::learn:
        return "learn";
    case Phase::steady:
        return "steady";
    }
    return "?";
}

ExperimentResult runExperiment(const ExperimentConfig& config, Strategy strategy, std::uint64_t seed)
{
    config.validate();
    const Environment env = buildEnvironment(config, seed);
    const std::size_t numSc = env.numSc();

    ExperimentResult result;
    result.strategy = strategy;
    result.seed = seed;
    result.numSc = numSc;
    result.numUe = env.numUe();
    result.finalCreDb.assign(numSc, 0.0);

    if (numSc <= config.oracleCap)
        result.benchmark = computeBenchmark(env, config.oracleCap);

    RegretLedger ledger(config.alpha, config.beta,
                        result.benchmark ? std::optional<double>(result.benchmark->bestReward) : std::nullopt);
    auto emit = [&](Phase phase, const RoundOutcome& o) {
        RoundRecord rec = makeRecord(config, strategy, seed, phase, o);
        if (phase != Phase::steady && result.benchmark)
        {
            // Expected reward of the played super-arm, as in the regret definition.
            ledger.record(result.benchmark->rewards[o.arm.mask()]);
            rec.regret = ledger.regret();
        }
        result.records.push_back(std::move(rec));
    };

    result.records.reserve(config.horizon + config.steadyRounds);
    SuperArm steadyArm = SuperArm::allOn(numSc);
    CreVector steadyCre = CreVector::neutral(numSc);

    switch (strategy)
    {
    case Strategy::cucb: {
        CucbEngine engine(env, ApproximationOracle(config.alpha, config.beta, config.oracleCap), seed,
                          config.loadEstimate);
        for (const RoundOutcome& o : engine.initialize())
            emit(Phase::init, o);
        while (engine.stats().round < config.horizon)
            emit(Phase::learn, engine.step().outcome);
        steadyArm = engine.exploitArm();
        const CreResult cre = optimizeCre(steadyArm, env, config.cre);
        steadyCre = cre.cre;
        result.finalCreDb = steadyCre.scDb();
        break;
    }
    case Strategy::allOn:
        for (std::uint64_t t = 1; t <= config.horizon; ++t)
            emit(Phase::learn, playRound(env, steadyArm, t));
        break;
    case Strategy::random: {
        Rng rng = makeRng(seed, RngStream::strategy);
        const std::uint64_t maxMask = numSc >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << numSc) - 1;
        std::uniform_int_distribution<std::uint64_t> pick(0, maxMask);
        for (std::uint64_t t = 1; t <= config.horizon; ++t)
            emit(Phase::learn, playRound(env, SuperArm(numSc, pick(rng)), t));
        steadyArm = SuperArm(numSc, pick(rng));
        break;
    }
    case Strategy::oracleStatic:
        if (!result.benchmark)
            throw CapacityError("ORACLE-STATIC: brute-force benchmark unavailable for " + std::to_string(numSc) +
                                " small cells");
        steadyArm = SuperArm(numSc, result.benchmark->bestMask);
        for (std::uint64_t t = 1; t <= config.horizon; ++t)
            emit(Phase::learn, playRound(env, steadyArm, t));
        break;
    }

    result.finalMask = steadyArm.mask();
    const SteadyPlayer steady(env, steadyArm, steadyCre);
    for (std::uint64_t k = 1; k <= config.steadyRounds; ++k)
        emit(Phase::steady, steady.play(config.horizon + k));
    return result;
}

std::vector<std::string> recordHeader(std::size_t numSc)
{
    std::vector<std::string> h{"round",      "phase",      "strategy",       "seed",           "superarm_mask",
                               "reward_a_w", "reward_b_w", "reward_c_w",     "reward_d_w",     "reward_total_w",
                               "power_w",    "power_mc_w", "rho_mc"};
    for (std::size_t i = 0; i < numSc; ++i)
        h.push_back("rho_sc_" + std::to_string(i));
    for (const char* tail : {"mean_rate_bps", "min_rate_bps", "sum_rate_bps", "qos_violations", "regret_w"})
        h.emplace_back(tail);
    return h;
}

void writeRecords(std::ostream& out, const ExperimentResult& result)
{
    writeRow(out, recordHeader(result.numSc));
    std::vector<std::string> row;
    for (const RoundRecord& r : result.records)
    {
        row.clear();
        row.push_back(std::to_string(r.round));
        row.emplace_back(toString(r.phase));
        row.emplace_back(toString(r.strategy));
        row.push_back(std::to_string(r.seed));
        row.push_back(std::to_string(r.superArmMask));
        for (double v : {r.reward.termA, r.reward.termB, r.reward.termC, r.reward.termD, r.reward.total,
                         r.totalPower, r.mcPower, r.rhoMc})
            row.push_back(formatDouble(v));
        for (double v : r.rhoSc)
            row.push_back(formatDouble(v));
        row.push_back(formatDouble(r.meanRate));
        row.push_back(formatDouble(r.minRate));
        row.push_back(formatDouble(r.sumRate));
        row.push_back(std::to_string(r.qosViolations));
        row.push_back(r.regret ? formatDouble(*r.regret) : std::string());
        writeRow(out, row);
    }
}

double recomputePower(const RoundRecord& record, const NetworkProfiles& profiles)
{
    double total = mcPower(profiles.macro, record.rhoMc);
    for (std::size_t i = 0; i < record.rhoSc.size(); ++i)
        total += scPower(profiles.sc, record.rhoSc[i], ((record.superArmMask >> i) & 1U) == 0);
    return total;
}

AggregateRow aggregate(std::size_t axisValue, Strategy strategy, const std::vector<ExperimentResult>& runs)
{
    AggregateRow row;
    row.axisValue = axisValue;
    row.strategy = strategy;
    row.minRate = std::numeric_limits<double>::infinity();

    double power = 0.0, rate = 0.0, sumRate = 0.0, violations = 0.0, ueRounds = 0.0;
    std::size_t n = 0;
    std::map<std::uint64_t, std::size_t> masks;
    for (const ExperimentResult& run : runs)
    {
        ++masks[run.finalMask];
        for (const RoundRecord& r : run.records)
        {
            if (r.phase != Phase::steady)
                continue;
            power += r.totalPower;
            rate += r.meanRate;
            sumRate += r.sumRate;
            violations += static_cast<double>(r.qosViolations);
            ueRounds += static_cast<double>(run.numUe);
            row.minRate = std::min(row.minRate, r.minRate);
            ++n;
        }
    }
    if (n == 0)
        throw ConfigError("aggregate: no steady-phase rounds (run.steady_rounds must be > 0)");
    row.meanPower = power / static_cast<double>(n);
    row.meanRate = rate / static_cast<double>(n);
    row.meanSumRate = sumRate / static_cast<double>(n);
    row.energyEfficiency = row.meanSumRate / row.meanPower;
    row.qosViolationFraction = violations / ueRounds;

    // most frequent final super-arm across seeds, ties to the smaller mask
    std::size_t bestCount = 0;
    for (const auto& [mask, cnt] : masks)
    {
        if (cnt > bestCount)
        {
            bestCount = cnt;
            row.finalMask = mask;
        }
    }
    return row;
}

std::vector<std::string> aggregateHeader()
{
    return {"axis_value",   "strategy",      "mean_power_W",       "mean_rate_bps",
            "min_rate_bps", "ee_bps_per_W",  "qos_violation_frac", "final_superarm_bitmask"};
}

void writeAggregate(std::ostream& out, const std::vector<AggregateRow>& rows)
{
    writeRow(out, aggregateHeader());
    for (const AggregateRow& r : rows)
    {
        writeRow(out, {std::to_string(r.axisValue), std::string(toString(r.strategy)), formatDouble(r.meanPower),
                       formatDouble(r.meanRate), formatDouble(r.minRate), formatDouble(r.energyEfficiency),
                       formatDouble(r.qosViolationFraction), std::to_string(r.finalMask)});
    }
}

SweepOutput runSweep(const ExperimentConfig& config, const fs::path& outDir, bool force)
{
    config.validate();
    if (config.axis == SweepAxis::none)
        throw ConfigError("sweep.axis: must be ue_count or sc_count for a sweep");

    auto runPath = [&](std::size_t value, Strategy s, std::uint64_t seed) {
        return outDir / ("run_" + std::string(toString(config.axis)) + "-" + std::to_string(value) + "_" +
                         std::string(toString(s)) + "_seed" + std::to_string(seed) + ".csv");
    };

    SweepOutput output;
    output.aggregateFile = outDir / "aggregate.csv";
    std::vector<fs::path> targets{output.aggregateFile};
    for (std::size_t value : config.axisValues)
        for (Strategy s : config.sweepStrategies)
            for (std::uint64_t seed : config.seeds)
                targets.push_back(runPath(value, s, seed));
    ensureWritable(targets, force);

    for (std::size_t value : config.axisValues)
    {
        ExperimentConfig point = config;
        if (config.axis == SweepAxis::ueCount)
            point.numUe = value;
        else
            point.numSc = value;
        for (Strategy s : config.sweepStrategies)
        {
            std::vector<ExperimentResult> runs;
            for (std::uint64_t seed : config.seeds)
            {
                ExperimentResult run = runExperiment(point, s, seed);
                const fs::path path = runPath(value, s, seed);
                std::ofstream out = openOutput(path);
                writeRecords(out, run);
                output.runFiles.push_back(path);
                runs.push_back(std::move(run));
            }
            output.rows.push_back(aggregate(value, s, runs));
        }
    }

    std::ofstream agg = openOutput(output.aggregateFile);
    writeAggregate(agg, output.rows);
    return output;
}

fs::path runToDirectory(const ExperimentConfig& config, std::uint64_t seed, const fs::path& outDir, bool force)
{
    config.validate();
    const fs::path path =
        outDir / ("run_" + std::string(toString(config.strategy)) + "_seed" + std::to_string(seed) + ".csv");
    ensureWritable({path}, force);
    const ExperimentResult result = runExperiment(config, config.strategy, seed);
    std::ofstream out = openOutput(path);
    writeRecords(out, result);
    return path;
}

void writeOracleBench(std::ostream& out, const ExperimentConfig& config, std::uint64_t seed)
{
    config.validate();
    const Environment env = buildEnvironment(config, seed);
    const Benchmark bench = computeBenchmark(env, config.oracleCap);
    const double threshold = approximationThreshold(bench.bestReward, config.alpha);
    const TrafficDraw mean = env.meanDraw();

    writeRow(out, {"superarm_mask", "size", "planned_reward_w", "power_w", "rho_mc", "max_rho_sc",
                   "qos_violations", "within_alpha", "is_best"});
    for (std::uint64_t mask = 0; mask < bench.rewards.size(); ++mask)
    {
        const SuperArm arm(env.numSc(), mask);
        const LoadState loads = env.loads(arm, mean);
        const PowerReport power = networkPower(env.profiles(), loads, arm.sleepConfig());
        double maxSc = 0.0;
        for (std::size_t i = 0; i < env.numSc(); ++i)
        {
            if (!arm.contains(i))
                maxSc = std::max(maxSc, loads.rhoSc[i]);
        }
        std::size_t qos = 0;
        for (double r : loads.rate)
            qos += r < config.rMinBps ? 1 : 0;
        writeRow(out, {std::to_string(mask), std::to_string(arm.size()), formatDouble(bench.rewards[mask]),
                       formatDouble(power.totalPower), formatDouble(loads.rhoMc), formatDouble(maxSc),
                       std::to_string(qos), bench.rewards[mask] >= threshold ? "1" : "0",
                       mask == bench.bestMask ? "1" : "0"});
    }
}

fs::path oracleBenchToDirectory(const ExperimentConfig& config, std::uint64_t seed, const fs::path& outDir,
                                bool force)
{
    const fs::path path = outDir / ("oracle_bench_seed" + std::to_string(seed) + ".csv");
    ensureWritable({path}, force);
    std::ofstream out = openOutput(path);
    writeOracleBench(out, config, seed);
    return path;
}

} // namespace hetsleep
