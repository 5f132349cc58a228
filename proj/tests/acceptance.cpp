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
// Acceptance checks: prints one PASS/FAIL line per criterion and exits
// non-zero when any fails.
#include "hetsleep/cmab.hpp"
#include "hetsleep/cre_optimizer.hpp"
#include "hetsleep/csv.hpp"
#include "hetsleep/harness.hpp"
#include "hetsleep/powell.hpp"
#include "reference.hpp"
#include "scenarios.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>

using namespace hetsleep;
namespace fs = std::filesystem;

namespace
{

struct Outcome
{
    bool pass = false;
    std::string detail;
};

std::string num(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::unique_ptr<Environment> makeEnv(std::size_t L, std::size_t N, std::uint64_t seed,
                                     TrafficParams traffic = {1.0, 2e5})
{
    DeploymentParams p;
    p.numSc = L;
    p.numUe = N;
    Deployment d = deployNetwork(p, RadioParams{}, seed);
    return std::make_unique<Environment>(std::move(d.topology), std::move(d.ues), NetworkProfiles{}, traffic,
                                         PenaltyWeights{}, seed);
}

Outcome powerModel()
{
    const PowerProfile micro = builtinProfile(BsType::micro);
    const PowerProfile macro = builtinProfile(BsType::macro);
    const double a = scPower(micro, 0.0, false), b = scPower(micro, 0.0, true);
    const double c = mcPower(macro, 0.0), d = mcPower(macro, 1.0);
    return {a == 39.0 && b == 56.0 && c == 130.0 && d == 224.0,
            "micro asleep " + num(a) + " W, micro on " + num(b) + " W, macro " + num(c) + " / " + num(d) + " W"};
}

Outcome rewardIdentity()
{
    std::mt19937_64 rng(2024);
    std::size_t done = 0, skipped = 0;
    double worst = 0.0;
    for (std::uint64_t k = 0; done < 1000; ++k)
    {
        const std::size_t L = 1 + rng() % 5;
        const std::size_t N = 1 + rng() % 20;
        const auto env = makeEnv(L, N, 1000 + k);
        const TrafficDraw t = env->drawRound(1 + rng() % 100000);
        const SuperArm arm(L, rng() % (std::uint64_t{1} << L));
        const SuperArm all = SuperArm::allOn(L);
        const LoadState allLoads = env->loads(all, t);
        const LoadState played = env->loads(arm, t);
        if (allLoads.overloaded() || played.overloaded())
        {
            ++skipped;
            continue;
        }
        const double saving = networkPower(env->profiles(), allLoads, all.sleepConfig()).totalPower -
                              networkPower(env->profiles(), played, arm.sleepConfig()).totalPower;
        const double r = env->superArmReward(arm, t).total;
        const double err = saving == 0.0 ? std::abs(r) : std::abs(r - saving) / std::abs(saving);
        worst = std::max(worst, err);
        ++done;
    }
    return {worst <= 1e-9,
            "1000 instances (" + std::to_string(skipped) + " overloaded redrawn), worst relative error " + num(worst)};
}

Outcome emptyArmZero()
{
    const auto env = makeEnv(5, 10, 1);
    std::size_t nonzero = 0, overloaded = 0;
    for (std::uint64_t t = 1; t <= 1000; ++t)
    {
        const TrafficDraw d = env->drawRound(t);
        overloaded += env->loads(SuperArm::allOn(5), d).overloaded() ? 1 : 0;
        nonzero += env->superArmReward(SuperArm::allOn(5), d).total != 0.0 ? 1 : 0;
    }
    return {nonzero == 0, "1000 draws (L=5, N=10), " + std::to_string(nonzero) + " non-zero, " +
                              std::to_string(overloaded) + " with ALL-ON overload"};
}

Outcome oracleContract()
{
    // membership frequency on randomized means
    const auto env = makeEnv(5, 10, 1);
    const RewardPlanner planner(*env);
    const ApproximationOracle oracle(0.989, 0.98);
    Rng rng = makeRng(1, RngStream::oracle);
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> mu(0.0, 40.0);
    std::vector<double> m(5);
    int member = 0;
    const int calls = 10000;
    for (int k = 0; k < calls; ++k)
    {
        for (double& x : m)
            x = mu(gen);
        const std::vector<double> r = planner.plannedRewards(m);
        const double best = *std::max_element(r.begin(), r.end());
        member += r[oracle.select(m, planner, rng).arm.mask()] >= approximationThreshold(best, 0.989) ? 1 : 0;
    }
    const double freq = static_cast<double>(member) / calls;

    // alpha = beta = 1 against brute force over independently computed rewards
    const ApproximationOracle exact(1.0, 1.0);
    const NetworkProfiles profiles;
    int agree = 0;
    for (std::uint64_t k = 0; k < 1000; ++k)
    {
        const auto e = makeEnv(5, 10, 5000 + k);
        const RewardPlanner p(*e);
        for (double& x : m)
            x = mu(gen);
        const std::vector<double> demand(10, e->trafficParams().meanOfferedBps());
        const ref::Loads all = ref::loads(e->topology(), e->ues(), std::vector<bool>(5, true),
                                          std::vector<double>(5, 1.0), demand);
        std::vector<double> brute(32);
        for (std::uint64_t mask = 0; mask < 32; ++mask)
        {
            const std::vector<bool> on = ref::onFromMask(5, mask);
            const ref::Loads pl = ref::loads(e->topology(), e->ues(), on, std::vector<double>(5, 1.0), demand);
            double aTerm = 0.0, muTerm = 0.0;
            for (std::size_t i = 0; i < 5; ++i)
            {
                if (!on[i])
                {
                    aTerm += ref::earth(profiles.sc, all.rhoSc[i]) - profiles.sc.pSleep;
                    muTerm += m[i];
                }
            }
            brute[mask] = muTerm + ref::reward(profiles, 100.0, 100.0, all, pl, on) - aTerm;
        }
        const double best = *std::max_element(brute.begin(), brute.end());
        const std::uint64_t chosen = exact.select(m, p, rng).arm.mask();
        agree += brute[chosen] >= best - 1e-9 * std::max(1.0, std::abs(best)) ? 1 : 0;
    }
    return {freq >= 0.97 && agree == 1000,
            "membership " + num(freq) + " over 1e4 calls; alpha=beta=1 matched brute force on " +
                std::to_string(agree) + "/1000"};
}

Outcome cucbSublinear()
{
    ExperimentConfig c;
    c.numSc = 5;
    c.numUe = 10;
    c.horizon = 20000;
    c.steadyRounds = 0;
    const ExperimentResult r = runExperiment(c, Strategy::cucb, 1);
    if (!r.benchmark || r.records.size() < 20000)
        return {false, "benchmark or records missing"};
    const double early = *r.records[999].regret / 1000.0;
    const double late = *r.records[19999].regret / 20000.0;
    std::size_t hits = 0;
    for (std::size_t k = 18000; k < 20000; ++k)
        hits += r.records[k].superArmMask == r.benchmark->bestMask ? 1 : 0;
    const double share = hits / 2000.0;
    // plain pseudo-regret against r*, for reference
    double gap1k = 0.0, gap = 0.0;
    for (std::size_t k = 0; k < 20000; ++k)
    {
        gap += r.benchmark->bestReward - r.benchmark->rewards[r.records[k].superArmMask];
        if (k == 999)
            gap1k = gap;
    }
    // "<= 50%" of a possibly negative early average
    const bool shrinks = late <= 0.5 * early;
    return {shrinks && share >= 0.8, "avg regret/round " + num(early) + " W at 1e3, " + num(late) +
                                         " W at 2e4 (pseudo-regret vs r*: " + num(gap1k / 1000.0) +
                                         " -> " + num(gap / 20000.0) + " W); best super-arm in " +
                                         num(100.0 * share) + "% of the last 2000 rounds"};
}

struct LowTraffic
{
    std::vector<AggregateRow> cucb, allOn;
};

LowTraffic lowTrafficSweep()
{
    LowTraffic out;
    ExperimentConfig c;
    c.numSc = 5;
    c.seeds = {1, 2, 3, 4, 5};
    for (std::size_t n : {5, 10, 15})
    {
        c.numUe = n;
        std::vector<ExperimentResult> cucb, all;
        for (std::uint64_t s : c.seeds)
        {
            cucb.push_back(runExperiment(c, Strategy::cucb, s));
            all.push_back(runExperiment(c, Strategy::allOn, s));
        }
        out.cucb.push_back(aggregate(n, Strategy::cucb, cucb));
        out.allOn.push_back(aggregate(n, Strategy::allOn, all));
    }
    return out;
}

Outcome allOnDominance(const LowTraffic& s)
{
    bool ok = true;
    std::string detail;
    for (std::size_t k = 0; k < s.cucb.size(); ++k)
    {
        const double a = s.cucb[k].meanPower, b = s.allOn[k].meanPower;
        ok = ok && (k == 0 ? a < b : a <= b);
        detail += "N=" + std::to_string(s.cucb[k].axisValue) + ": " + num(a) + " vs " + num(b) + " W; ";
    }
    return {ok, detail + "5 seeds"};
}

Outcome qosMonitoring(const LowTraffic& s)
{
    bool ok = true;
    std::string detail;
    for (std::size_t k = 0; k < s.cucb.size(); ++k)
    {
        const double a = s.cucb[k].qosViolationFraction, b = s.allOn[k].qosViolationFraction;
        ok = ok && a <= b + 0.05;
        detail += "N=" + std::to_string(s.cucb[k].axisValue) + ": " + num(a) + " vs " + num(b) + "; ";
    }
    return {ok, detail + "fraction of UE-rounds below 1e6 bit/s"};
}

Outcome powellBenchmarks()
{
    const double centre[5] = {0.731, -1.913, 2.207, -0.377, 1.149};
    auto quad = [&](std::span<const double> x) {
        double s = 0.0;
        for (std::size_t i = 0; i < 5; ++i)
            s += (1.0 + static_cast<double>(i)) * (x[i] - centre[i]) * (x[i] - centre[i]);
        return s;
    };
    PowellOptions o;
    o.tolerance = 1e-10;
    o.lineTolerance = 1e-10;
    o.maxIterations = 3;
    const PowellResult q = powellMinimize(quad, std::vector<double>(5, 0.0), o);
    double err = 0.0;
    for (std::size_t i = 0; i < 5; ++i)
        err = std::max(err, std::abs(q.point[i] - centre[i]));

    auto rosen = [](std::span<const double> x) {
        return 100.0 * (x[1] - x[0] * x[0]) * (x[1] - x[0] * x[0]) + (1.0 - x[0]) * (1.0 - x[0]);
    };
    o.maxIterations = 200;
    const PowellResult r = powellMinimize(rosen, {-1.2, 1.0}, o);

    // monotone descent on CRE objective runs
    std::size_t runs = 0, violations = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
    {
        const auto env = makeEnv(5, 30, seed, TrafficParams{2.0 + static_cast<double>(seed % 4), 2e5});
        const SuperArm arm(5, seed % 32);
        const CreResult cre = optimizeCre(arm, *env);
        double prev = cre.powell.initialValue;
        for (const PowellTraceEntry& e : cre.powell.trace)
        {
            violations += e.value > prev ? 1 : 0;
            prev = e.value;
        }
        violations += cre.finalObjective > cre.initialObjective ? 1 : 0;
        ++runs;
    }
    const bool ok = err <= 1e-3 && q.iterations <= 3 && r.value < 1e-6 && r.iterations <= 200 && violations == 0;
    return {ok, "quadratic error " + num(err) + " in " + std::to_string(q.iterations) + " cycles; Rosenbrock f " +
                    num(r.value) + " in " + std::to_string(r.iterations) + " cycles; " + std::to_string(runs) +
                    " CRE runs, " + std::to_string(violations) + " ascent steps"};
}

Outcome creEffectiveness()
{
    bool ok = true;
    std::string detail;
    for (double demand : {2.5e5, 3e5, 4e5, 1.5e6})
    {
        const scenario::OverloadedMacro s = scenario::overloadedMacro(demand);
        const CreContext ctx = s.context();
        const std::vector<double> zero{0.0, 0.0};
        const LoadState before = ctx.loads(zero);
        const CreResult r = optimizeCre(ctx);
        const LoadState after = ctx.loads(r.phiDb);

        // grid oracle over the 12 dB box, loads from the reference model
        bool feasible = false;
        for (int a = 0; a <= 120 && !feasible; ++a)
        {
            for (int b = 0; b <= 120 && !feasible; ++b)
            {
                const std::vector<double> phi{std::pow(10.0, a / 100.0), std::pow(10.0, b / 100.0)};
                const ref::Loads l = ref::loads(s.topology, s.ues, {true, true}, phi, s.traffic.perUeOffered);
                feasible = l.rhoMc <= 1.0 && l.rhoSc[0] <= 1.0 && l.rhoSc[1] <= 1.0;
            }
        }
        const bool reduced = after.totalLoad() < before.totalLoad();
        const bool within = !feasible || !after.overloaded();
        ok = ok && before.rhoMc > 1.0 && reduced && within;
        detail += "demand " + num(demand) + ": sum load " + num(before.totalLoad()) + " -> " +
                  num(after.totalLoad()) + ", max load " +
                  num(std::max({after.rhoMc, after.rhoSc[0], after.rhoSc[1]})) +
                  (feasible ? " (grid: feasible)" : " (grid: infeasible)") + "; ";
    }
    return {ok, detail};
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome determinism()
{
    ExperimentConfig c;
    c.numUe = 10;
    c.horizon = 2000;
    c.steadyRounds = 100;
    c.axis = SweepAxis::ueCount;
    c.axisValues = {5, 10};
    c.seeds = {1, 2};
    c.sweepStrategies = {Strategy::cucb, Strategy::allOn, Strategy::random, Strategy::oracleStatic};
    const fs::path base = fs::temp_directory_path() / "hetsleep_acceptance_det";
    fs::remove_all(base);
    const SweepOutput a = runSweep(c, base / "a", false);
    const SweepOutput b = runSweep(c, base / "b", false);
    std::size_t same = 0, files = 0;
    for (std::size_t k = 0; k < a.runFiles.size(); ++k)
    {
        ++files;
        same += slurp(a.runFiles[k]) == slurp(b.runFiles[k]) ? 1 : 0;
    }
    ++files;
    same += slurp(a.aggregateFile) == slurp(b.aggregateFile) ? 1 : 0;
    fs::remove_all(base);
    return {same == files && files > 1,
            std::to_string(same) + "/" + std::to_string(files) + " files byte-identical across two sweeps"};
}

} // namespace

int main()
{
    int failures = 0;
    auto report = [&](const std::string& name, const std::function<Outcome()>& check) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try
        {
            o = check();
        }
        catch (const std::exception& e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << " [" << num(secs) << " s]"
                  << std::endl;
        failures += o.pass ? 0 : 1;
    };

    report("power-model-exactness", powerModel);
    report("reward-master-identity", rewardIdentity);
    report("empty-superarm-zero", emptyArmZero);
    report("oracle-contract", oracleContract);
    report("cucb-sublinearity", cucbSublinear);
    LowTraffic low;
    bool haveLow = false;
    auto ensureLow = [&] {
        if (!haveLow)
            low = lowTrafficSweep();
        haveLow = true;
    };
    report("all-on-dominance-low-traffic", [&] {
        ensureLow();
        return allOnDominance(low);
    });
    report("qos-monitoring", [&] {
        ensureLow();
        return qosMonitoring(low);
    });
    report("powell-benchmarks", powellBenchmarks);
    report("cre-effectiveness", creEffectiveness);
    report("determinism", determinism);

    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
