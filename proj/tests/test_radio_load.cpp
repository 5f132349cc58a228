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

#include "hetsleep/error.hpp"
#include "hetsleep/radio_load.hpp"
#include "reference.hpp"

#include <numeric>
#include <random>
#include <set>

using namespace hetsleep;

namespace
{

Deployment sample(std::size_t L, std::size_t N, std::uint64_t seed)
{
    DeploymentParams p;
    p.numSc = L;
    p.numUe = N;
    return deployNetwork(p, RadioParams{}, seed);
}

} // namespace

TEST_CASE("thermal noise over 20 MHz")
{
    CHECK(noisePower(3.98e-21, 20e6) == doctest::Approx(7.96e-14).epsilon(1e-12));
}

TEST_CASE("traffic draws are request-size multiples with the Poisson mean")
{
    const TrafficParams p{1.0, 2e5};
    CHECK(p.meanOfferedBps() == 2e5);
    double sum = 0.0;
    std::size_t n = 0;
    for (std::uint64_t t = 1; t <= 400; ++t)
    {
        const TrafficDraw d = drawTraffic(p, 50, 9, t);
        CHECK(d.roundIndex == t);
        for (double w : d.perUeOffered)
        {
            CHECK(std::fmod(w, 2e5) == 0.0);
            sum += w;
            ++n;
        }
    }
    // 20000 Poisson(1) samples: sd of the mean is 2e5 / sqrt(20000) ~ 1414 bits/s
    CHECK(sum / n == doctest::Approx(2e5).epsilon(0.03));
}

TEST_CASE("traffic is a pure function of seed and round")
{
    const TrafficParams p{2.0, 1e5};
    const TrafficDraw a = drawTraffic(p, 30, 4, 17);
    const TrafficDraw b = drawTraffic(p, 30, 4, 17);
    CHECK(a.perUeOffered == b.perUeOffered);
    const TrafficDraw c = drawTraffic(p, 30, 4, 18);
    CHECK(a.perUeOffered != c.perUeOffered);

    const TrafficDraw none = drawTraffic(TrafficParams{0.0, 1e5}, 10, 4, 1);
    for (double w : none.perUeOffered)
        CHECK(w == 0.0);
    const TrafficDraw mean = meanTraffic(p, 3);
    CHECK(mean.perUeOffered == std::vector<double>(3, 2e5));
}

TEST_CASE("hand-placed two-cell SINR")
{
    RadioParams radio;
    NetworkTopology t = makeTopology(radio, 500.0, {{100.0, 0.0}, {-200.0, 50.0}});
    UeSet u;
    u.positions = {{110.0, 0.0}, {0.0, 300.0}};
    u.demands = {0.0, 0.0};
    const SleepConfig sleep = SleepConfig::allOn(2);
    const AssociationMap a = associate(t, u, sleep, CreVector::neutral(2));
    REQUIRE(a.servingCell[0] == CellId::smallCell(0));
    REQUIRE(a.servingCell[1].isMacro());

    const double k = ref::intercept(2e9);
    const double n0 = 3.98e-21 * 20e6;
    auto p = [&](Point ue, Point bs, double tx) {
        const double d = std::hypot(ue.x - bs.x, ue.y - bs.y);
        return tx * k / (d * d * d * d);
    };
    const double s0 = p({110, 0}, {100, 0}, 6.3) / (n0 + p({110, 0}, {0, 0}, 20.0) + p({110, 0}, {-200, 50}, 6.3));
    const double s1 = p({0, 300}, {0, 0}, 20.0) / (n0 + p({0, 300}, {100, 0}, 6.3) + p({0, 300}, {-200, 50}, 6.3));
    CHECK(sinrScUe(0, 0, t, u, sleep, a) == doctest::Approx(s0).epsilon(1e-12));
    CHECK(sinrMacroUe(1, t, u, sleep, a) == doctest::Approx(s1).epsilon(1e-12));

    // sleeping SC 1 removes its interference
    const SleepConfig half = SleepConfig::fromSleptMask(2, 0b10);
    const AssociationMap b = associate(t, u, half, CreVector::neutral(2));
    const double s0b = p({110, 0}, {100, 0}, 6.3) / (n0 + p({110, 0}, {0, 0}, 20.0));
    CHECK(sinrScUe(0, 0, t, u, half, b) == doctest::Approx(s0b).epsilon(1e-12));

    const LinkBudget links = evaluateLinks(t, u, sleep, a);
    CHECK(links.rate[0] == doctest::Approx(20e6 * std::log2(1.0 + s0)).epsilon(1e-12));
    CHECK(links.rate[1] == doctest::Approx(20e6 * std::log2(1.0 + s1)).epsilon(1e-12));
}

TEST_CASE("SINR queries reject inconsistent serving cells")
{
    RadioParams radio;
    NetworkTopology t = makeTopology(radio, 500.0, {{100.0, 0.0}});
    UeSet u;
    u.positions = {{101.0, 0.0}};
    u.demands = {0.0};
    const AssociationMap on = associate(t, u, SleepConfig::allOn(1), CreVector::neutral(1));
    CHECK_THROWS_AS(sinrMacroUe(0, t, u, SleepConfig::allOn(1), on), StateError);
    const SleepConfig off = SleepConfig::fromSleptMask(1, 1);
    CHECK_THROWS_AS(sinrScUe(0, 0, t, u, off, on), StateError);
}

TEST_CASE("loads agree with the reference model on random instances")
{
    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 0; seed < 30; ++seed)
    {
        const std::size_t L = 1 + seed % 6;
        const Deployment d = sample(L, 25, seed);
        const std::uint64_t m = rng() % (std::uint64_t{1} << L);
        const SleepConfig sleep = SleepConfig::fromSleptMask(L, m);
        const TrafficDraw traffic = drawTraffic(TrafficParams{1.0, 2e5}, 25, seed, 1);
        const AssociationMap a = associate(d.topology, d.ues, sleep, CreVector::neutral(L));
        const LoadState s = computeLoads(d.topology, d.ues, a, traffic, sleep);
        const ref::Loads r =
            ref::loads(d.topology, d.ues, ref::onFromMask(L, m), std::vector<double>(L, 1.0), traffic.perUeOffered);
        CHECK(s.rhoMc == doctest::Approx(r.rhoMc).epsilon(1e-10));
        for (std::size_t i = 0; i < L; ++i)
        {
            CHECK(s.rhoSc[i] == doctest::Approx(r.rhoSc[i]).epsilon(1e-10));
            if (!sleep.isOn(i))
                CHECK(s.rhoSc[i] == 0.0);
        }
        for (std::size_t j = 0; j < 25; ++j)
            CHECK(s.rate[j] == doctest::Approx(r.rate[j]).epsilon(1e-10));
        CHECK(s.totalLoad() == doctest::Approx(r.rhoMc + std::accumulate(r.rhoSc.begin(), r.rhoSc.end(), 0.0)));
    }
}

TEST_CASE("loads scale linearly with offered traffic")
{
    const Deployment d = sample(4, 20, 3);
    const SleepConfig sleep = SleepConfig::fromSleptMask(4, 0b0010);
    const AssociationMap a = associate(d.topology, d.ues, sleep, CreVector::neutral(4));
    TrafficDraw t = meanTraffic(TrafficParams{1.0, 2e5}, 20);
    const LoadState one = computeLoads(d.topology, d.ues, a, t, sleep);
    for (double& w : t.perUeOffered)
        w *= 3.0;
    const LoadState three = computeLoads(d.topology, d.ues, a, t, sleep);
    CHECK(three.rhoMc == doctest::Approx(3.0 * one.rhoMc));
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(three.rhoSc[i] == doctest::Approx(3.0 * one.rhoSc[i]));
}

TEST_CASE("zero-rate UE is flagged and loads its cell infinitely")
{
    LinkBudget links;
    links.sinr = {0.0, 1.0, 0.0};
    links.rate = {0.0, 1e6, 0.0};
    AssociationMap a;
    a.servingCell = {CellId::macro(), CellId::macro(), CellId::smallCell(0)};
    a.macroCount = 2;
    a.scCounts = {1};
    TrafficDraw t{{5e4, 5e5, 0.0}, 1};
    const LoadState s = applyTraffic(links, a, t, SleepConfig::allOn(1));
    CHECK(std::isinf(s.rhoMc));
    CHECK(s.rhoSc[0] == 0.0);
    CHECK(s.zeroRateUes == std::vector<std::size_t>{0, 2});
    CHECK(s.overloaded());
}

TEST_CASE("overload flag")
{
    LoadState s;
    s.rhoMc = 0.9;
    s.rhoSc = {0.2, 1.0};
    CHECK_FALSE(s.overloaded());
    s.rhoSc[1] = 1.0000001;
    CHECK(s.overloaded());
}
