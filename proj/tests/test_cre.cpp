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
#include "doctest.h"

#include "hetsleep/cre_optimizer.hpp"
#include "hetsleep/error.hpp"
#include "reference.hpp"
#include "scenarios.hpp"

#include <memory>

using namespace hetsleep;

namespace
{

double refObjective(const scenario::OverloadedMacro& s, const std::vector<double>& db, double penalty)
{
    std::vector<double> phi;
    for (double d : db)
        phi.push_back(std::pow(10.0, d / 10.0));
    const ref::Loads l = ref::loads(s.topology, s.ues, {true, true}, phi, s.traffic.perUeOffered);
    double total = l.rhoMc, excess = std::max(0.0, l.rhoMc - 1.0);
    for (double r : l.rhoSc)
    {
        total += r;
        excess += std::max(0.0, r - 1.0);
    }
    return total + penalty * excess;
}

} // namespace

TEST_CASE("objective matches the reference load model")
{
    const scenario::OverloadedMacro s = scenario::overloadedMacro();
    const CreContext ctx = s.context();
    for (const std::vector<double>& db :
         {std::vector<double>{0.0, 0.0}, {3.0, 7.5}, {12.0, 12.0}, {0.5, 11.0}, {6.0, 0.0}})
        CHECK(creObjective(db, ctx) == doctest::Approx(refObjective(s, db, 100.0)).epsilon(1e-10));
    CHECK_THROWS_AS(creObjective(std::vector<double>{1.0}, ctx), DomainError);
}

TEST_CASE("the constructed instance overloads the macro at 0 dB")
{
    const scenario::OverloadedMacro s = scenario::overloadedMacro();
    const LoadState l = s.context().loads(std::vector<double>{0.0, 0.0});
    CHECK(l.rhoMc > 1.0);
}

TEST_CASE("optimizeCre improves the overloaded instance inside the box")
{
    const scenario::OverloadedMacro s = scenario::overloadedMacro();
    const CreContext ctx = s.context();
    const CreResult r = optimizeCre(ctx);
    CHECK(r.initialObjective == doctest::Approx(creObjective(std::vector<double>{0.0, 0.0}, ctx)));
    CHECK(r.finalObjective < r.initialObjective);
    REQUIRE(r.phiDb.size() == 2);
    for (double db : r.phiDb)
    {
        CHECK(db >= 0.0);
        CHECK(db <= 12.0);
    }
    const LoadState after = ctx.loads(r.phiDb);
    CHECK_FALSE(after.overloaded());
    double prev = r.powell.initialValue;
    for (const PowellTraceEntry& e : r.powell.trace)
    {
        CHECK(e.value <= prev);
        prev = e.value;
    }
    CHECK(r.cre.phiSc[0] == doctest::Approx(std::pow(10.0, r.phiDb[0] / 10.0)));
    CHECK(r.cre.phiMc == 1.0);
}

TEST_CASE("only ON small cells get a coordinate")
{
    scenario::OverloadedMacro s = scenario::overloadedMacro();
    CreContext ctx = s.context();
    ctx.sleep = SleepConfig::fromSleptMask(2, 0b10);
    CHECK(ctx.onCells() == std::vector<std::size_t>{0});
    const CreVector cre = ctx.expand(std::vector<double>{6.0});
    CHECK(cre.phiSc[0] == doctest::Approx(std::pow(10.0, 0.6)));
    CHECK(cre.phiSc[1] == 1.0);
    const CreResult r = optimizeCre(ctx);
    CHECK(r.phiDb.size() == 1);
    CHECK(r.cre.phiSc[1] == 1.0);

    ctx.sleep = SleepConfig::fromSleptMask(2, 0b11);
    const CreResult none = optimizeCre(ctx);
    CHECK(none.phiDb.empty());
    CHECK(none.cre.phiSc == std::vector<double>{1.0, 1.0});
    CHECK(none.finalObjective == none.initialObjective);
}

TEST_CASE("environment overload uses mean traffic and is never worse than 0 dB")
{
    DeploymentParams p;
    p.numSc = 5;
    p.numUe = 30;
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
    {
        Deployment d = deployNetwork(p, RadioParams{}, seed);
        const Environment env(std::move(d.topology), std::move(d.ues), NetworkProfiles{}, TrafficParams{3.0, 2e5},
                              PenaltyWeights{}, seed);
        const SuperArm arm(5, seed % 32);
        const CreContext ctx = CreContext::fromEnvironment(env, arm, 100.0);
        CHECK(ctx.traffic.perUeOffered == env.meanDraw().perUeOffered);
        const CreResult r = optimizeCre(arm, env);
        CHECK(r.finalObjective <= r.initialObjective);
        CHECK(r.phiDb.size() == arm.sleepConfig().numOn());
    }
}
