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
#ifndef HETSLEEP_CRE_OPTIMIZER_HPP
#define HETSLEEP_CRE_OPTIMIZER_HPP

#include "hetsleep/environment.hpp"
#include "hetsleep/powell.hpp"

#include <span>
#include <vector>

namespace hetsleep
{

struct CreSettings
{
    double lowerDb = 0.0;
    double upperDb = 12.0;
    double penalty = 100.0; ///< exterior penalty per unit of load above 1
    double tolerance = 1e-3;
    std::size_t maxIterations = 100;
    double lineLowerDb = -6.0;
    double lineUpperDb = 6.0;
    double lineToleranceDb = 1e-4;
};

/// Everything the CRE objective depends on. Only the SCs that are ON get a
/// bias coordinate; sleeping SCs and the macro stay at 0 dB.
struct CreContext
{
    const NetworkTopology* topology = nullptr;
    const UeSet* ues = nullptr;
    SleepConfig sleep;
    TrafficDraw traffic;
    double penalty = 100.0;

    static CreContext fromEnvironment(const Environment& env, const SuperArm& arm, double penalty);

    std::vector<std::size_t> onCells() const;
    /// Full-length CRE vector with `phiDb` placed on the ON cells.
    CreVector expand(std::span<const double> phiDb) const;
    LoadState loads(std::span<const double> phiDb) const;
};

/// rho_M + sum over ON SCs of rho_i, plus penalty * sum max(0, rho - 1) over
/// all cells. Throws DomainError when phiDb does not match the ON count.
double creObjective(std::span<const double> phiDb, const CreContext& context);

struct CreResult
{
    CreVector cre;
    std::vector<double> phiDb; ///< one entry per ON SC, in index order
    double initialObjective = 0.0;
    double finalObjective = 0.0;
    PowellResult powell;
};

/// Starts every ON SC at 0 dB and runs Powell on the CRE objective inside the
/// dB box. The result is never worse than the 0 dB start.
CreResult optimizeCre(const CreContext& context, const CreSettings& settings = {});
CreResult optimizeCre(const SuperArm& arm, const Environment& env, const CreSettings& settings = {});

} // namespace hetsleep

#endif // HETSLEEP_CRE_OPTIMIZER_HPP
