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
#include "hetsleep/validate.hpp"

#include "hetsleep/cmab.hpp"
#include "hetsleep/cre_optimizer.hpp"
#include "hetsleep/csv.hpp"
#include "hetsleep/error.hpp"
#include "hetsleep/harness.hpp"
#include "hetsleep/powell.hpp"
#include "hetsleep/rng.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <random>
#include <sstream>

namespace hetsleep
{

namespace
{

/// Thrown by a check body to report a violated property.
struct PropertyFailure
{
    std::string what;
};

void expect(bool ok, const std::string& what)
{
    if (!ok)
        throw PropertyFailure{what};
}

std::unique_ptr<Environment> makeEnvironment(const ExperimentConfig& base, std::size_t numSc, std::size_t numUe,
                                             std::uint64_t seed)
{
    ExperimentConfig c = base;
    c.numSc = numSc;
    c.numUe = numUe;
    Deployment d = deployNetwork(c.deployment(), c.radio(), seed);
    return std::make_unique<Environment>(std::move(d.topology), std::move(d.ues), c.networkProfiles(), c.traffic,
                                         c.penalties, seed);
}

std::size_t smallL(const ExperimentConfig& c)
{
    return std::clamp<std::size_t>(c.numSc, 1, 5);
}

CreVector randomCre(std::size_t numSc, Rng& rng)
{
    std::uniform_real_distribution<double> db(0.0, 12.0);
    std::vector<double> v(numSc);
    for (double& x : v)
        x = db(rng);
    return CreVector::fromDb(v);
}

SleepConfig randomSleep(std::size_t numSc, Rng& rng)
{
    std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << numSc) - 1);
    return SleepConfig::fromSleptMask(numSc, pick(rng));
}

using CheckBody = std::function<std::string()>;

std::string checkProfiles(const ExperimentConfig& c)
{
    std::string failures;
    for (const PowerProfile& p : c.profiles)
    {
        try
        {
            p.validate();
        }
        catch (const ConfigError& e)
        {
            failures += (failures.empty() ? "" : "; ") + std::string(e.what());
        }
    }
    expect(failures.empty(), failures);
    return "5 profiles: eta > 0, 0 < p_sleep < p_operational";
}

std::string checkPowerConstants()
{
    const PowerProfile micro = builtinProfile(BsType::micro);
    const PowerProfile macro = builtinProfile(BsType::macro);
    expect(scPower(micro, 0.0, false) == 39.0, "micro asleep != 39 W");
    expect(scPower(micro, 0.0, true) == 56.0, "micro on at zero load != 56 W");
    expect(mcPower(macro, 0.0) == 130.0, "macro at zero load != 130 W");
    expect(mcPower(macro, 1.0) == 224.0, "macro at full load != 224 W");
    return "39 / 56 / 130 / 224 W";
}

std::string checkPartition(const ExperimentConfig& c, std::uint64_t seed)
{
    Rng rng = makeRng(seed, RngStream::validation, 1);
    std::size_t cases = 0;
    for (std::uint64_t k = 0; k < 50; ++k)
    {
        const auto env = makeEnvironment(c, 1 + k % smallL(c), 1 + k % 40, seed + k);
        const SleepConfig sleep = randomSleep(env->numSc(), rng);
        const AssociationMap a = associate(env->topology(), env->ues(), sleep, randomCre(env->numSc(), rng));
        std::size_t counted = a.macroCount;
        for (std::size_t n : a.scCounts)
            counted += n;
        expect(counted == env->numUe() && a.totalCount() == env->numUe(), "UE counts do not sum to N");
        std::size_t macroSeen = 0;
        for (CellId cell : a.servingCell)
            macroSeen += cell.isMacro() ? 1 : 0;
        expect(macroSeen == a.macroCount, "macro count disagrees with serving cells");
        ++cases;
    }
    return std::to_string(cases) + " associations";
}

std::string checkSleepConsistency(const ExperimentConfig& c, std::uint64_t seed)
{
    Rng rng = makeRng(seed, RngStream::validation, 2);
    std::size_t cases = 0;
    for (std::uint64_t k = 0; k < 50; ++k)
    {
        const auto env = makeEnvironment(c, smallL(c), 20, seed + k);
        const SleepConfig sleep = randomSleep(env->numSc(), rng);
        const AssociationMap a = associate(env->topology(), env->ues(), sleep, randomCre(env->numSc(), rng));
        for (CellId cell : a.servingCell)
            expect(cell.isMacro() || sleep.isOn(cell.scIndex()), "UE attached to a sleeping SC");
        ++cases;
    }
    return std::to_string(cases) + " sleep patterns";
}

std::string checkMonotoneBias(const ExperimentConfig& c, std::uint64_t seed)
{
    Rng rng = makeRng(seed, RngStream::validation, 3);
    std::uniform_real_distribution<double> raise(1.0, 10.0);
    std::size_t cases = 0;
    for (std::uint64_t k = 0; k < 50; ++k)
    {
        const auto env = makeEnvironment(c, smallL(c), 30, seed + k);
        const SleepConfig sleep = SleepConfig::allOn(env->numSc());
        CreVector cre = randomCre(env->numSc(), rng);
        const std::size_t i = k % env->numSc();
        const AssociationMap before = associate(env->topology(), env->ues(), sleep, cre);
        cre.phiSc[i] *= raise(rng);
        const AssociationMap after = associate(env->topology(), env->ues(), sleep, cre);
        for (std::size_t u = 0; u < env->numUe(); ++u)
        {
            if (before.servingCell[u] == CellId::smallCell(i))
                expect(after.servingCell[u] == CellId::smallCell(i), "raising phi shrank the SC's UE set");
        }
        ++cases;
    }
    return std::to_string(cases) + " bias increases";
}

std::string checkLoadLinearity(const ExperimentConfig& c, std::uint64_t seed)
{
    std::size_t cases = 0;
    for (std::uint64_t k = 0; k < 20; ++k)
    {
        const auto env = makeEnvironment(c, smallL(c), 20, seed + k);
        const SuperArm arm(env->numSc(), k % (std::uint64_t{1} << env->numSc()));
        TrafficDraw t = env->drawRound(k + 1);
        const LoadState one = env->loads(arm, t);
        for (double& w : t.perUeOffered)
            w *= 2.0;
        const LoadState two = env->loads(arm, t);
        auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); };
        expect(close(two.rhoMc, 2.0 * one.rhoMc), "macro load not linear in traffic");
        for (std::size_t i = 0; i < env->numSc(); ++i)
            expect(close(two.rhoSc[i], 2.0 * one.rhoSc[i]), "SC load not linear in traffic");
        ++cases;
    }
    return std::to_string(cases) + " doubled draws";
}

std::string checkRewardIdentity(const ExperimentConfig& c, std::uint64_t seed)
{
    std::size_t cases = 0, skipped = 0;
    double worst = 0.0;
    for (std::uint64_t k = 0; k < 200; ++k)
    {
        const auto env = makeEnvironment(c, 1 + k % smallL(c), 10, seed + k);
        const TrafficDraw t = env->drawRound(k + 1);
        const SuperArm all = SuperArm::allOn(env->numSc());
        const LoadState allOn = env->loads(all, t);
        const SuperArm arm(env->numSc(), k % (std::uint64_t{1} << env->numSc()));
        const LoadState played = env->loads(arm, t);
        if (allOn.overloaded() || played.overloaded())
        {
            ++skipped;
            continue;
        }
        const double xiAll = networkPower(env->profiles(), allOn, all.sleepConfig()).totalPower;
        const double xiPlayed = networkPower(env->profiles(), played, arm.sleepConfig()).totalPower;
        const double r = env->reward(arm, played, allOn).total;
        const double err = std::abs(r - (xiAll - xiPlayed)) / xiAll;
        worst = std::max(worst, err);
        expect(err <= 1e-9, "reward differs from the power saving by " + formatDouble(err) + " (relative)");
        ++cases;
    }
    expect(cases > 0, "every instance was overloaded");
    return std::to_string(cases) + " instances, " + std::to_string(skipped) + " overloaded skipped, worst " +
           formatDouble(worst);
}

std::string checkEmptyArm(const ExperimentConfig& c, std::uint64_t seed)
{
    std::size_t cases = 0;
    for (std::uint64_t k = 0; k < 200; ++k)
    {
        const auto env = makeEnvironment(c, smallL(c), 10, seed + k);
        const TrafficDraw t = env->drawRound(k + 1);
        const SuperArm empty = SuperArm::allOn(env->numSc());
        const LoadState allOn = env->loads(empty, t);
        if (allOn.overloaded())
            continue;
        expect(env->superArmReward(empty, t).total == 0.0, "r(empty) != 0");
        ++cases;
    }
    expect(cases > 0, "every draw was overloaded");
    return std::to_string(cases) + " draws";
}

std::string checkPenaltySign(const ExperimentConfig& c, std::uint64_t seed)
{
    ExperimentConfig heavy = c;
    heavy.traffic.meanRequestRate *= 20.0;
    std::size_t cases = 0, penalised = 0;
    for (std::uint64_t k = 0; k < 50; ++k)
    {
        const auto env = makeEnvironment(heavy, smallL(c), 30, seed + k);
        const TrafficDraw t = env->drawRound(k + 1);
        const SuperArm arm(env->numSc(), k % (std::uint64_t{1} << env->numSc()));
        const RewardBreakdown r = env->superArmReward(arm, t);
        expect(r.termD >= 0.0, "penalty term negative");
        expect(std::abs(r.total - (r.termA + r.termB + r.termC - r.termD)) <= 1e-9 * (1.0 + std::abs(r.total)) ||
                   !std::isfinite(r.total),
               "total != A + B + C - D");
        penalised += r.termD > 0.0 ? 1 : 0;
        ++cases;
    }
    return std::to_string(cases) + " draws, " + std::to_string(penalised) + " penalised";
}

std::string checkOracleArgmax(const ExperimentConfig& c, std::uint64_t seed)
{
    Rng rng = makeRng(seed, RngStream::validation, 4);
    std::normal_distribution<double> value(0.0, 50.0);
    const ApproximationOracle exact(1.0, 1.0, c.oracleCap);
    const std::size_t L = smallL(c);
    for (int k = 0; k < 200; ++k)
    {
        std::vector<double> rewards(std::size_t{1} << L);
        for (double& r : rewards)
            r = value(rng);
        const OracleDecision d = exact.selectFromRewards(rewards, L, rng);
        const double best = *std::max_element(rewards.begin(), rewards.end());
        expect(rewards[d.arm.mask()] == best, "alpha = beta = 1 did not return the maximum");
    }
    return "200 instances, L = " + std::to_string(L);
}

std::string checkOracleMembership(const ExperimentConfig& c, std::uint64_t seed)
{
    const auto env = makeEnvironment(c, smallL(c), 10, seed);
    const RewardPlanner planner(*env, LoadEstimate::meanTraffic, c.oracleCap);
    const ApproximationOracle oracle(c.alpha, c.beta, c.oracleCap);
    Rng rng = makeRng(seed, RngStream::validation, 5);
    std::uniform_real_distribution<double> mu(0.0, 40.0);
    const int calls = 2000;
    int hits = 0;
    std::vector<double> means(env->numSc());
    for (int k = 0; k < calls; ++k)
    {
        for (double& m : means)
            m = mu(rng);
        const std::vector<double> r = planner.plannedRewards(means);
        const double best = *std::max_element(r.begin(), r.end());
        const OracleDecision d = oracle.select(means, planner, rng);
        hits += r[d.arm.mask()] >= approximationThreshold(best, c.alpha) ? 1 : 0;
    }
    const double freq = static_cast<double>(hits) / calls;
    const double slack = 3.0 * std::sqrt(c.beta * (1.0 - c.beta) / calls);
    expect(freq >= c.beta - slack, "membership frequency " + formatDouble(freq) + " below beta - 3 sigma");
    return "frequency " + formatDouble(freq) + " over " + std::to_string(calls) + " calls";
}

std::string checkLineSearch()
{
    const double step = lineSearch([](double s) { return (s - 1.7) * (s - 1.7) + 3.0; }, -6.0, 6.0, 1e-8);
    expect(std::abs(step - 1.7) <= 1e-6, "parabola minimiser off: " + formatDouble(step));
    const double flat = lineSearch([](double) { return 1.0; }, -6.0, 6.0, 1e-6);
    expect(flat == 0.0, "flat line did not keep step 0");
    return "parabola and flat line";
}

std::string checkPowellQuadratic()
{
    const std::vector<double> centre{1.13, -2.71, 0.37, 3.29, -1.58};
    auto f = [&](std::span<const double> x) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
            s += static_cast<double>(i + 1) * (x[i] - centre[i]) * (x[i] - centre[i]);
        return s;
    };
    PowellOptions o;
    o.tolerance = 1e-8;
    o.lineTolerance = 1e-9;
    const PowellResult r = powellMinimize(f, std::vector<double>(5, 0.0), o);
    double err = 0.0;
    for (std::size_t i = 0; i < 5; ++i)
        err = std::max(err, std::abs(r.point[i] - centre[i]));
    expect(err <= 1e-3, "distance to optimum " + formatDouble(err));
    expect(r.iterations <= 3, std::to_string(r.iterations) + " cycles");
    return std::to_string(r.iterations) + " cycles, error " + formatDouble(err);
}

std::string checkPowellRosenbrock()
{
    auto f = [](std::span<const double> x) {
        return 100.0 * (x[1] - x[0] * x[0]) * (x[1] - x[0] * x[0]) + (1.0 - x[0]) * (1.0 - x[0]);
    };
    PowellOptions o;
    o.tolerance = 1e-12;
    o.lineTolerance = 1e-10;
    o.maxIterations = 200;
    const PowellResult r = powellMinimize(f, {-1.2, 1.0}, o);
    expect(r.value < 1e-6, "f = " + formatDouble(r.value) + " after " + std::to_string(r.iterations));
    return "f = " + formatDouble(r.value) + " after " + std::to_string(r.iterations) + " cycles";
}

std::string checkCreDescent(const ExperimentConfig& c, std::uint64_t seed)
{
    ExperimentConfig heavy = c;
    heavy.traffic.meanRequestRate *= 5.0;
    std::size_t runs = 0;
    for (std::uint64_t k = 0; k < 5; ++k)
    {
        const auto env = makeEnvironment(heavy, smallL(c), 30, seed + k);
        const SuperArm arm(env->numSc(), k % (std::uint64_t{1} << env->numSc()));
        const CreResult r = optimizeCre(arm, *env, c.cre);
        expect(r.finalObjective <= r.initialObjective, "objective increased");
        double prev = r.powell.initialValue;
        for (const PowellTraceEntry& e : r.powell.trace)
        {
            expect(e.value <= prev, "non-monotone Powell trace");
            prev = e.value;
        }
        for (double db : r.phiDb)
            expect(db >= c.cre.lowerDb && db <= c.cre.upperDb, "bias outside the box");
        ++runs;
    }
    return std::to_string(runs) + " runs";
}

std::string checkPowerRecompute(const ExperimentConfig& c, std::uint64_t seed)
{
    ExperimentConfig small = c;
    small.numSc = smallL(c);
    small.numUe = 10;
    small.horizon = 100;
    small.steadyRounds = 20;
    const ExperimentResult r = runExperiment(small, Strategy::cucb, seed);
    for (const RoundRecord& rec : r.records)
        expect(recomputePower(rec, small.networkProfiles()) == rec.totalPower,
               "round " + std::to_string(rec.round) + " power not reproducible from loads");
    return std::to_string(r.records.size()) + " records";
}

std::string checkDeterminism(const ExperimentConfig& c, std::uint64_t seed)
{
    ExperimentConfig small = c;
    small.numSc = smallL(c);
    small.numUe = 10;
    small.horizon = 100;
    small.steadyRounds = 20;
    auto render = [&] {
        std::ostringstream out;
        writeRecords(out, runExperiment(small, Strategy::cucb, seed));
        return out.str();
    };
    const std::string a = render();
    expect(a == render(), "two runs with the same seed differ");
    return std::to_string(a.size()) + " bytes identical";
}

} // namespace

std::size_t ValidationReport::passed() const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; }));
}

std::size_t ValidationReport::failed() const
{
    return checks.size() - passed();
}

std::string ValidationReport::text() const
{
    std::ostringstream out;
    for (const CheckResult& c : checks)
        out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    out << checks.size() << " properties run, " << passed() << " passed, " << failed() << " failed\n";
    return out.str();
}

ValidationReport runValidation(const ExperimentConfig& config, std::uint64_t seed)
{
    const std::vector<std::pair<std::string, CheckBody>> suite{
        {"profile-invariants", [&] { return checkProfiles(config); }},
        {"config-fields",
         [&] {
             config.validate();
             return std::string("all fields in range");
         }},
        {"power-constants", [] { return checkPowerConstants(); }},
        {"association-partition", [&] { return checkPartition(config, seed); }},
        {"sleep-consistency", [&] { return checkSleepConsistency(config, seed); }},
        {"monotone-bias", [&] { return checkMonotoneBias(config, seed); }},
        {"load-linearity", [&] { return checkLoadLinearity(config, seed); }},
        {"reward-identity", [&] { return checkRewardIdentity(config, seed); }},
        {"empty-superarm-zero", [&] { return checkEmptyArm(config, seed); }},
        {"penalty-sign", [&] { return checkPenaltySign(config, seed); }},
        {"oracle-exact-argmax", [&] { return checkOracleArgmax(config, seed); }},
        {"oracle-membership", [&] { return checkOracleMembership(config, seed); }},
        {"line-search", [] { return checkLineSearch(); }},
        {"powell-quadratic", [] { return checkPowellQuadratic(); }},
        {"powell-rosenbrock", [] { return checkPowellRosenbrock(); }},
        {"cre-descent", [&] { return checkCreDescent(config, seed); }},
        {"power-recompute", [&] { return checkPowerRecompute(config, seed); }},
        {"determinism", [&] { return checkDeterminism(config, seed); }},
    };

    ValidationReport report;
    for (const auto& [name, body] : suite)
    {
        CheckResult result{name, false, {}};
        try
        {
            result.detail = body();
            result.passed = true;
        }
        catch (const PropertyFailure& f)
        {
            result.detail = f.what;
        }
        catch (const std::exception& e)
        {
            result.detail = std::string("error: ") + e.what();
        }
        report.checks.push_back(std::move(result));
    }
    return report;
}

} // namespace hetsleep
