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
#include "hetsleep/powell.hpp"

#include "hetsleep/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hetsleep
{

namespace
{

const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0; // 0.618...
constexpr std::size_t kScanIntervals = 48;

using Vec = std::vector<double>;

double norm(std::span<const double> v)
{
    double s = 0.0;
    for (double x : v)
        s += x * x;
    return std::sqrt(s);
}

// Gram-Schmidt residual: the smallest relative norm left after removing the
// components along the earlier directions.
double independence(const std::vector<Vec>& dirs)
{
    std::vector<Vec> basis;
    double worst = 1.0;
    for (const Vec& d : dirs)
    {
        Vec r = d;
        for (const Vec& b : basis)
        {
            double dot = 0.0;
            for (std::size_t k = 0; k < r.size(); ++k)
                dot += r[k] * b[k];
            for (std::size_t k = 0; k < r.size(); ++k)
                r[k] -= dot * b[k];
        }
        const double dn = norm(d);
        const double rn = norm(r);
        if (dn == 0.0 || rn == 0.0)
            return 0.0;
        worst = std::min(worst, rn / dn);
        for (double& x : r)
            x /= rn;
        basis.push_back(std::move(r));
    }
    return worst;
}

std::vector<Vec> unitBasis(std::size_t n)
{
    std::vector<Vec> dirs(n, Vec(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        dirs[i][i] = 1.0;
    return dirs;
}

class Evaluator
{
public:
    Evaluator(const ScalarFunction& f, const std::optional<Box>& box) : f_(f), box_(box) {}

    Vec project(Vec x) const
    {
        if (box_)
            box_->project(x);
        return x;
    }

    double operator()(std::span<const double> x)
    {
        ++count;
        const double v = f_(x);
        if (!std::isfinite(v))
            throw NumericError("powell: objective returned a non-finite value after " + std::to_string(count) +
                               " evaluations");
        return v;
    }

    std::size_t count = 0;

private:
    const ScalarFunction& f_;
    const std::optional<Box>& box_;
};

Vec along(const Vec& x, const Vec& d, double step)
{
    Vec out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k)
        out[k] = x[k] + step * d[k];
    return out;
}

} // namespace

LineSearchResult lineSearchWithValue(const LineFunction& f, double lower, double upper, double tolerance,
                                     std::optional<double> valueAtZero)
{
    if (!(lower <= upper))
        std::swap(lower, upper);
    const double f0 = valueAtZero ? *valueAtZero : f(0.0);

    LineSearchResult best{0.0, f0};
    auto consider = [&best](double step, double value) {
        if (value < best.value)
            best = {step, value};
    };

    // Coarse scan picks the basin, golden-section refines inside it.
    const double h = (upper - lower) / static_cast<double>(kScanIntervals);
    for (std::size_t k = 0; k <= kScanIntervals; ++k)
    {
        const double s = lower + h * static_cast<double>(k);
        consider(s, f(s));
    }

    double a = std::max(lower, best.step - h);
    double b = std::min(upper, best.step + h);
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tolerance)
    {
        if (fc < fd)
        {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        }
        else
        {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }

    const double mid = 0.5 * (a + b);
    consider(mid, f(mid));
    consider(c, fc);
    consider(d, fd);
    return best;
}

double lineSearch(const LineFunction& f, double lower, double upper, double tolerance)
{
    return lineSearchWithValue(f, lower, upper, tolerance).step;
}

void Box::project(std::span<double> x) const
{
    for (std::size_t k = 0; k < x.size(); ++k)
        x[k] = std::clamp(x[k], lower[k], upper[k]);
}

PowellResult powellMinimize(const ScalarFunction& f, std::vector<double> start, const PowellOptions& options)
{
    const std::size_t n = start.size();
    if (n == 0)
        throw DomainError("powell: dimension must be >= 1");
    if (options.box && (options.box->lower.size() != n || options.box->upper.size() != n))
        throw DomainError("powell: box dimension mismatch");

    Evaluator eval(f, options.box);
    const std::size_t resetPeriod = options.resetPeriod == 0 ? n : options.resetPeriod;

    PowellResult result;
    Vec x0 = eval.project(std::move(start));
    double f0 = eval(x0);
    result.initialValue = f0;
    result.trace.push_back({0, x0, f0});

    std::vector<Vec> dirs = unitBasis(n);

    // Line search along d from x, with projection into the box.
    auto searchAlong = [&](const Vec& x, double fx, const Vec& d) {
        auto g = [&](double step) { return eval(eval.project(along(x, d, step))); };
        const LineSearchResult ls =
            lineSearchWithValue(g, options.lineLower, options.lineUpper, options.lineTolerance, fx);
        return std::pair{eval.project(along(x, d, ls.step)), ls.value};
    };

    for (std::size_t k = 1; k <= options.maxIterations; ++k)
    {
        Vec x = x0;
        double fx = f0;
        std::size_t largestIdx = 0;
        double largestDrop = -1.0;
        for (std::size_t i = 0; i < n; ++i)
        {
            auto [xi, fi] = searchAlong(x, fx, dirs[i]);
            const double drop = fx - fi;
            if (drop > largestDrop)
            {
                largestDrop = drop;
                largestIdx = i;
            }
            x = std::move(xi);
            fx = fi;
        }

        Vec displacement(n);
        for (std::size_t j = 0; j < n; ++j)
            displacement[j] = x[j] - x0[j];
        const double dispNorm = norm(displacement);

        Vec xNew = x;
        double fNew = fx;
        if (dispNorm > 0.0)
        {
            for (double& v : displacement)
                v /= dispNorm;
            std::tie(xNew, fNew) = searchAlong(x, fx, displacement);
        }

        Vec moved(n);
        for (std::size_t j = 0; j < n; ++j)
            moved[j] = xNew[j] - x0[j];

        result.iterations = k;
        result.trace.push_back({k, xNew, fNew});
        x0 = std::move(xNew);
        f0 = fNew;

        if (norm(moved) < options.tolerance)
        {
            result.converged = true;
            break;
        }

        if (dispNorm > 0.0)
            dirs[largestIdx] = displacement;
        if (k % resetPeriod == 0 || independence(dirs) < 1e-8)
            dirs = unitBasis(n);
    }

    result.point = std::move(x0);
    result.value = f0;
    result.evaluations = eval.count;
    return result;
}

} // namespace hetsleep
