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
#ifndef HETSLEEP_POWELL_HPP
#define HETSLEEP_POWELL_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace hetsleep
{

using ScalarFunction = std::function<double(std::span<const double>)>;
using LineFunction = std::function<double(double)>;

struct LineSearchResult
{
    double step = 0.0;
    double value = 0.0;
};

/// Minimising step on [lower, upper]: a 48-interval scan locates the basin,
/// golden-section refines it to an interval of width <= tolerance. Step 0 is
/// always a candidate and wins unless another one is strictly lower, so the
/// result is never worse than f(0).
LineSearchResult lineSearchWithValue(const LineFunction& f, double lower, double upper, double tolerance,
                                     std::optional<double> valueAtZero = std::nullopt);

double lineSearch(const LineFunction& f, double lower, double upper, double tolerance);

/// Axis-aligned box; points are clamped into it before every evaluation.
struct Box
{
    std::vector<double> lower;
    std::vector<double> upper;

    void project(std::span<double> x) const;
};

struct PowellOptions
{
    double tolerance = 1e-3;        ///< stop when a cycle moves less than this
    std::size_t maxIterations = 100; ///< cycles
    double lineLower = -6.0;
    double lineUpper = 6.0;
    double lineTolerance = 1e-4;
    /// Reset the direction set to the unit basis every this many cycles;
    /// 0 uses the dimension, and a degenerate set is always reset.
    std::size_t resetPeriod = 0;
    std::optional<Box> box;
};

struct PowellTraceEntry
{
    std::size_t iteration = 0;
    std::vector<double> point;
    double value = 0.0;
};

struct PowellResult
{
    std::vector<double> point;
    double value = 0.0;
    double initialValue = 0.0;
    std::size_t iterations = 0;
    std::size_t evaluations = 0;
    bool converged = false;
    std::vector<PowellTraceEntry> trace;
};

/// Powell's conjugate-direction minimisation: line searches along each
/// direction, one more along the net displacement of the cycle, which then
/// replaces the direction that gave the largest single decrease. Throws
/// NumericError on a non-finite objective value.
PowellResult powellMinimize(const ScalarFunction& f, std::vector<double> start, const PowellOptions& options = {});

} // namespace hetsleep

#endif // HETSLEEP_POWELL_HPP
