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
#ifndef HETSLEEP_NET_MODEL_HPP
#define HETSLEEP_NET_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hetsleep
{

/// Distances below this are clamped before the d^-alpha path loss.
inline constexpr double kMinDistanceM = 1.0;

struct Point
{
    double x = 0.0;
    double y = 0.0;
};

double distance(Point a, Point b);

/// Free-space path-loss intercept (c / (4 pi f))^2 at 1 m.
double freeSpaceIntercept(double carrierHz);

double dbToLinear(double db);
double linearToDb(double linear);

/// Fixed geometry and radio constants of one macro cell with L small cells.
struct NetworkTopology
{
    Point mcPosition;
    double mcRadius = 500.0;
    std::vector<Point> scPositions;
    double pTxMc = 20.0;
    double pTxSc = 6.3;
    double kMc = 0.0;
    double kSc = 0.0;
    double alphaP = 4.0;
    double bwMc = 20e6;
    double bwSc = 20e6;
    double noiseDensity = 3.98e-21; ///< W/Hz

    std::size_t numSc() const { return scPositions.size(); }

    /// Throws ConfigError naming the first violated invariant.
    void validate() const;
};

struct UeSet
{
    std::vector<Point> positions;
    std::vector<double> demands; ///< offered load per UE, bits/s

    std::size_t size() const { return positions.size(); }
};

/// Serving-cell identifier: the macro or one small cell by index.
class CellId
{
public:
    static constexpr CellId macro() { return CellId(-1); }
    static constexpr CellId smallCell(std::size_t index) { return CellId(static_cast<std::int64_t>(index)); }

    constexpr bool isMacro() const { return value_ < 0; }
    constexpr std::size_t scIndex() const { return static_cast<std::size_t>(value_); }

    friend constexpr bool operator==(CellId, CellId) = default;

private:
    explicit constexpr CellId(std::int64_t v) : value_(v) {}
    std::int64_t value_;
};

/// Linear CRE bias factors. Configured and optimized in dB.
struct CreVector
{
    std::vector<double> phiSc;
    double phiMc = 1.0;

    static CreVector neutral(std::size_t numSc);
    static CreVector fromDb(std::span<const double> scDb, double mcDb = 0.0);
    std::vector<double> scDb() const;
};

/// delta[l] == 1 means SC l is ON.
struct SleepConfig
{
    std::vector<std::uint8_t> delta;

    static SleepConfig allOn(std::size_t numSc);
    /// Bit l of the mask set means SC l sleeps.
    static SleepConfig fromSleptMask(std::size_t numSc, std::uint64_t sleptMask);

    std::size_t numSc() const { return delta.size(); }
    bool isOn(std::size_t l) const { return delta[l] != 0; }
    std::uint64_t sleptMask() const;
    std::size_t numOn() const;
};

struct AssociationMap
{
    std::vector<CellId> servingCell;
    std::size_t macroCount = 0;
    std::vector<std::size_t> scCounts;

    std::size_t totalCount() const;
};

struct DeploymentParams
{
    double radius = 500.0;
    std::size_t numSc = 5;
    std::size_t numUe = 30;
    double demandBps = 0.0; ///< per-UE mean offered load stored in UeSet::demands
};

/// Radio constants. kMc/kSc <= 0 select the free-space intercept at carrierHz.
struct RadioParams
{
    double carrierHz = 2e9;
    double bwMc = 20e6;
    double bwSc = 20e6;
    double alphaP = 4.0;
    double noiseDensity = 3.98e-21;
    double pTxMc = 20.0;
    double pTxSc = 6.3;
    double kMc = 0.0;
    double kSc = 0.0;
};

struct Deployment
{
    NetworkTopology topology;
    UeSet ues;
};

NetworkTopology makeTopology(const RadioParams& radio, double radius, std::vector<Point> scPositions);

/// Drops SCs and UEs i.i.d. uniformly on the macro disk centred at the origin.
Deployment deployNetwork(const DeploymentParams& params, const RadioParams& radio, std::uint64_t seed);

/// Biased received power phi * P * K * max(d, d_min)^-alpha of `cell` at `uePos`.
double receivedPower(Point uePos, CellId cell, const NetworkTopology& topology, const CreVector& cre);

/// Max biased RSRP association over the macro and all ON small cells.
/// Equal powers go to the lowest-indexed SC; the macro needs a strictly larger
/// power to beat an ON SC.
AssociationMap associate(const NetworkTopology& topology, const UeSet& ues, const SleepConfig& sleep,
                         const CreVector& cre);

} // namespace hetsleep

#endif // HETSLEEP_NET_MODEL_HPP
