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
#include "hetsleep/cre_optimizer.hpp"

#include "hetsleep/error.hpp"

#include <algorithm>
#include <string>

namespace hetsleep
{

CreContext CreContext::fromEnvironment(const Environment& env, const SuperArm& arm, double penalty)
{
    return CreContext{&env.topology(), &env.ues(), arm.sleepConfig(), env.meanDraw(), penalty};
}

std::vector<std::size_t> CreContext::onCells() const
{
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < sleep.numSc(); ++i)
    {
        if (sleep.isOn(i))
            on.push_back(i);
    }
    return on;
}

CreVector CreContext::expand(std::span<const double> phiDb) const
{
    const auto on = onCells();
    if (phiDb.size() != on.size())
        throw DomainError("creObjective: got " + std::to_string(phiDb.size()) + " biases for " +
                          std::to_string(on.size()) + " active small cells");
    CreVector cre = CreVector::neutral(sleep.numSc());
    for (std::size_t k = 0; k < on.size(); ++k)
        cre.phiSc[on[k]] = dbToLinear(phiDb[k]);
    return cre;
}

LoadState CreContext::loads(std::span<const double> phiDb) const
{
    const AssociationMap assoc = associate(*topology, *ues, sleep, expand(phiDb));
    return computeLoads(*topology, *ues, assoc, traffic, sleep);
}

double creObjective(std::span<const double> phiDb, const CreContext& context)
{
    const LoadState s = context.loads(phiDb);
    double total = s.rhoMc;
    double excess = std::max(0.0, s.rhoMc - 1.0);
    for (std::size_t i = 0; i < s.rhoSc.size(); ++i)
    {
        if (!context.sleep.isOn(i))
            continue;
        total += s.rhoSc[i];
        excess += std::max(0.0, s.rhoSc[i] - 1.0);
    }
    return total + context.penalty * excess;
}

CreResult optimizeCre(const CreContext& context, const CreSettings& settings)
{
    CreResult result;
    const std::size_t dim = context.onCells().size();
    result.cre = CreVector::neutral(context.sleep.numSc());
    if (dim == 0)
    {
        result.initialObjective = result.finalObjective = creObjective({}, context);
        return result;
    }

    PowellOptions options;
    options.tolerance = settings.tolerance;
    options.maxIterations = settings.maxIterations;
    options.lineLower = settings.lineLowerDb;
    options.lineUpper = settings.lineUpperDb;
    options.lineTolerance = settings.lineToleranceDb;
    options.box = Box{std::vector<double>(dim, settings.lowerDb), std::vector<double>(dim, settings.upperDb)};

    const std::vector<double> start(dim, std::clamp(0.0, settings.lowerDb, settings.upperDb));
    result.powell = powellMinimize([&context](std::span<const double> x) { return creObjective(x, context); },
                                   start, options);
    result.phiDb = result.powell.point;
    result.initialObjective = result.powell.initialValue;
    result.finalObjective = result.powell.value;
    result.cre = context.expand(result.phiDb);
    return result;
}

CreResult optimizeCre(const SuperArm& arm, const Environment& env, const CreSettings& settings)
{
    return optimizeCre(CreContext::fromEnvironment(env, arm, settings.penalty), settings);
}

} // namespace hetsleep
