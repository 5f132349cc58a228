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
#include "hetsleep/config.hpp"

#include "hetsleep/csv.hpp"
#include "hetsleep/error.hpp"

#include <fstream>
#include <functional>
#include <istream>
#include <ostream>

namespace hetsleep
{

namespace
{

constexpr std::array<BsType, 5> kAllTypes{BsType::macro, BsType::rrh, BsType::micro, BsType::pico, BsType::femto};

struct Field
{
    std::string key;
    std::function<void(ExperimentConfig&, std::string_view)> set;
    std::function<std::string(const ExperimentConfig&)> get;
};

Field real(std::string key, double ExperimentConfig::*member)
{
    return {key, [member, key](ExperimentConfig& c, std::string_view v) { c.*member = parseDouble(v, key); },
            [member](const ExperimentConfig& c) { return formatDouble(c.*member); }};
}

Field count(std::string key, std::size_t ExperimentConfig::*member)
{
    return {key,
            [member, key](ExperimentConfig& c, std::string_view v) {
                c.*member = static_cast<std::size_t>(parseUnsigned(v, key));
            },
            [member](const ExperimentConfig& c) { return std::to_string(c.*member); }};
}

template <class Get>
Field realVia(std::string key, Get get)
{
    return {key, [get, key](ExperimentConfig& c, std::string_view v) { get(c) = parseDouble(v, key); },
            [get](const ExperimentConfig& c) { return formatDouble(get(c)); }};
}

std::string joinStrategies(const std::vector<Strategy>& list)
{
    std::string out;
    for (std::size_t i = 0; i < list.size(); ++i)
    {
        if (i > 0)
            out += ",";
        out += toString(list[i]);
    }
    return out;
}

template <class T>
std::string joinNumbers(const std::vector<T>& list)
{
    std::string out;
    for (std::size_t i = 0; i < list.size(); ++i)
    {
        if (i > 0)
            out += ",";
        out += std::to_string(list[i]);
    }
    return out;
}

Strategy strategyOrThrow(std::string_view v, std::string_view key)
{
    const auto s = parseStrategy(trim(v));
    if (!s)
        throw ConfigError(std::string(key) + ": unknown strategy '" + std::string(trim(v)) +
                          "' (expected CUCB, ALL-ON, RANDOM or ORACLE-STATIC)");
    return *s;
}

const std::vector<Field>& fields()
{
    static const std::vector<Field> table = [] {
        std::vector<Field> f;
        f.push_back(real("scenario.radius_m", &ExperimentConfig::radius));
        f.push_back(count("scenario.num_sc", &ExperimentConfig::numSc));
        f.push_back(count("scenario.num_ue", &ExperimentConfig::numUe));
        f.push_back(realVia("scenario.request_rate_per_s",
                            [](auto& c) -> auto& { return c.traffic.meanRequestRate; }));
        f.push_back(realVia("scenario.request_size_bits",
                            [](auto& c) -> auto& { return c.traffic.requestSizeBits; }));
        f.push_back(real("scenario.r_min_bps", &ExperimentConfig::rMinBps));

        f.push_back(real("radio.carrier_hz", &ExperimentConfig::carrierHz));
        f.push_back(real("radio.bandwidth_mc_hz", &ExperimentConfig::bwMc));
        f.push_back(real("radio.bandwidth_sc_hz", &ExperimentConfig::bwSc));
        f.push_back(real("radio.pathloss_exponent", &ExperimentConfig::alphaP));
        f.push_back(real("radio.noise_density_w_per_hz", &ExperimentConfig::noiseDensity));
        f.push_back(real("radio.k_mc", &ExperimentConfig::kMc));
        f.push_back(real("radio.k_sc", &ExperimentConfig::kSc));

        f.push_back({"power.sc_type",
                     [](ExperimentConfig& c, std::string_view v) {
                         const auto t = parseBsType(trim(v));
                         if (!t || *t == BsType::macro)
                             throw ConfigError("power.sc_type: expected rrh, micro, pico or femto, got '" +
                                               std::string(trim(v)) + "'");
                         c.scType = *t;
                     },
                     [](const ExperimentConfig& c) { return std::string(toString(c.scType)); }});
        for (BsType t : kAllTypes)
        {
            const std::string prefix = "power." + std::string(toString(t)) + ".";
            f.push_back(realVia(prefix + "eta", [t](auto& c) -> auto& { return c.profile(t).eta; }));
            f.push_back(realVia(prefix + "p_tx", [t](auto& c) -> auto& { return c.profile(t).pTx; }));
            f.push_back(realVia(prefix + "p_operational",
                                [t](auto& c) -> auto& { return c.profile(t).pOperational; }));
            f.push_back(
                realVia(prefix + "p_sleep", [t](auto& c) -> auto& { return c.profile(t).pSleep; }));
        }

        f.push_back(real("bandit.alpha", &ExperimentConfig::alpha));
        f.push_back(real("bandit.beta", &ExperimentConfig::beta));
        f.push_back(realVia("bandit.penalty_mc", [](auto& c) -> auto& { return c.penalties.macro; }));
        f.push_back(realVia("bandit.penalty_sc", [](auto& c) -> auto& { return c.penalties.sc; }));
        f.push_back({"bandit.horizon",
                     [](ExperimentConfig& c, std::string_view v) { c.horizon = parseUnsigned(v, "bandit.horizon"); },
                     [](const ExperimentConfig& c) { return std::to_string(c.horizon); }});
        f.push_back(count("bandit.oracle_cap", &ExperimentConfig::oracleCap));
        f.push_back({"bandit.load_estimate",
                     [](ExperimentConfig& c, std::string_view v) {
                         v = trim(v);
                         if (v == "mean-traffic")
                             c.loadEstimate = LoadEstimate::meanTraffic;
                         else if (v == "empirical")
                             c.loadEstimate = LoadEstimate::empirical;
                         else
                             throw ConfigError("bandit.load_estimate: expected mean-traffic or empirical, got '" +
                                               std::string(v) + "'");
                     },
                     [](const ExperimentConfig& c) {
                         return std::string(c.loadEstimate == LoadEstimate::meanTraffic ? "mean-traffic"
                                                                                        : "empirical");
                     }});

        f.push_back(realVia("cre.lower_db", [](auto& c) -> auto& { return c.cre.lowerDb; }));
        f.push_back(realVia("cre.upper_db", [](auto& c) -> auto& { return c.cre.upperDb; }));
        f.push_back(realVia("cre.penalty", [](auto& c) -> auto& { return c.cre.penalty; }));
        f.push_back(realVia("cre.tolerance", [](auto& c) -> auto& { return c.cre.tolerance; }));
        f.push_back({"cre.max_iterations",
                     [](ExperimentConfig& c, std::string_view v) {
                         c.cre.maxIterations = static_cast<std::size_t>(parseUnsigned(v, "cre.max_iterations"));
                     },
                     [](const ExperimentConfig& c) { return std::to_string(c.cre.maxIterations); }});
        f.push_back(realVia("cre.line_lower_db", [](auto& c) -> auto& { return c.cre.lineLowerDb; }));
        f.push_back(realVia("cre.line_upper_db", [](auto& c) -> auto& { return c.cre.lineUpperDb; }));
        f.push_back(
            realVia("cre.line_tolerance_db", [](auto& c) -> auto& { return c.cre.lineToleranceDb; }));

        f.push_back({"run.strategy",
                     [](ExperimentConfig& c, std::string_view v) { c.strategy = strategyOrThrow(v, "run.strategy"); },
                     [](const ExperimentConfig& c) { return std::string(toString(c.strategy)); }});
        f.push_back(count("run.steady_rounds", &ExperimentConfig::steadyRounds));
        f.push_back({"run.seeds",
                     [](ExperimentConfig& c, std::string_view v) {
                         c.seeds.clear();
                         for (const auto& s : split(v, ','))
                             c.seeds.push_back(parseUnsigned(s, "run.seeds"));
                     },
                     [](const ExperimentConfig& c) { return joinNumbers(c.seeds); }});

        f.push_back({"sweep.axis",
                     [](ExperimentConfig& c, std::string_view v) {
                         v = trim(v);
                         if (v == "none")
                             c.axis = SweepAxis::none;
                         else if (v == "ue_count")
                             c.axis = SweepAxis::ueCount;
                         else if (v == "sc_count")
                             c.axis = SweepAxis::scCount;
                         else
                             throw ConfigError("sweep.axis: expected none, ue_count or sc_count, got '" +
                                               std::string(v) + "'");
                     },
                     [](const ExperimentConfig& c) { return std::string(toString(c.axis)); }});
        f.push_back({"sweep.values",
                     [](ExperimentConfig& c, std::string_view v) {
                         c.axisValues.clear();
                         if (trim(v).empty())
                             return;
                         for (const auto& s : split(v, ','))
                             c.axisValues.push_back(static_cast<std::size_t>(parseUnsigned(s, "sweep.values")));
                     },
                     [](const ExperimentConfig& c) { return joinNumbers(c.axisValues); }});
        f.push_back({"sweep.strategies",
                     [](ExperimentConfig& c, std::string_view v) {
                         c.sweepStrategies.clear();
                         for (const auto& s : split(v, ','))
                             c.sweepStrategies.push_back(strategyOrThrow(s, "sweep.strategies"));
                     },
                     [](const ExperimentConfig& c) { return joinStrategies(c.sweepStrategies); }});
        return f;
    }();
    return table;
}

} // namespace

std::string_view toString(Strategy s)
{
    switch (s)
    {
    case Strategy::cucb:
        return "CUCB";
    case Strategy::allOn:
        return "ALL-ON";
    case Strategy::random:
        return "RANDOM";
    case Strategy::oracleStatic:
        return "ORACLE-STATIC";
    }
    return "?";
}

std::optional<Strategy> parseStrategy(std::string_view name)
{
    for (Strategy s : {Strategy::cucb, Strategy::allOn, Strategy::random, Strategy::oracleStatic})
    {
        if (toString(s) == name)
            return s;
    }
    return std::nullopt;
}

std::string_view toString(SweepAxis a)
{
    switch (a)
    {
    case SweepAxis::none:
        return "none";
    case SweepAxis::ueCount:
        return "ue_count";
    case SweepAxis::scCount:
        return "sc_count";
    }
    return "?";
}

RadioParams ExperimentConfig::radio() const
{
    RadioParams r;
    r.carrierHz = carrierHz;
    r.bwMc = bwMc;
    r.bwSc = bwSc;
    r.alphaP = alphaP;
    r.noiseDensity = noiseDensity;
    r.pTxMc = profile(BsType::macro).pTx;
    r.pTxSc = profile(scType).pTx;
    r.kMc = kMc;
    r.kSc = kSc;
    return r;
}

DeploymentParams ExperimentConfig::deployment() const
{
    return DeploymentParams{radius, numSc, numUe, traffic.meanOfferedBps()};
}

void ExperimentConfig::validate() const
{
    auto require = [](bool ok, const std::string& msg) {
        if (!ok)
            throw ConfigError(msg);
    };
    require(radius > 0.0, "scenario.radius_m: must be positive");
    require(numSc >= 1, "scenario.num_sc: must be >= 1");
    require(numSc <= 63, "scenario.num_sc: must be <= 63");
    require(numUe >= 1, "scenario.num_ue: must be >= 1");
    require(traffic.meanRequestRate >= 0.0, "scenario.request_rate_per_s: must be >= 0");
    require(traffic.requestSizeBits >= 0.0, "scenario.request_size_bits: must be >= 0");
    require(rMinBps >= 0.0, "scenario.r_min_bps: must be >= 0");
    require(carrierHz > 0.0, "radio.carrier_hz: must be positive");
    require(bwMc > 0.0, "radio.bandwidth_mc_hz: must be positive");
    require(bwSc > 0.0, "radio.bandwidth_sc_hz: must be positive");
    require(alphaP >= 2.0, "radio.pathloss_exponent: must be >= 2");
    require(noiseDensity > 0.0, "radio.noise_density_w_per_hz: must be positive");
    profile(BsType::macro).validate();
    profile(scType).validate();
    require(alpha > 0.0 && alpha <= 1.0, "bandit.alpha: must lie in (0, 1]");
    require(beta > 0.0 && beta <= 1.0, "bandit.beta: must lie in (0, 1]");
    require(penalties.macro >= 0.0, "bandit.penalty_mc: must be >= 0");
    require(penalties.sc >= 0.0, "bandit.penalty_sc: must be >= 0");
    require(horizon >= numSc, "bandit.horizon: must be >= scenario.num_sc");
    require(cre.lowerDb <= cre.upperDb, "cre.lower_db: must not exceed cre.upper_db");
    require(cre.tolerance >= 0.0, "cre.tolerance: must be >= 0");
    require(cre.lineToleranceDb > 0.0, "cre.line_tolerance_db: must be positive");
    require(cre.lineLowerDb < cre.lineUpperDb, "cre.line_lower_db: must be below cre.line_upper_db");
    require(!seeds.empty(), "run.seeds: at least one seed is required");
    if (axis != SweepAxis::none)
    {
        require(!axisValues.empty(), "sweep.values: required when sweep.axis is set");
        for (std::size_t v : axisValues)
        {
            require(v >= 1, "sweep.values: every value must be >= 1");
            if (axis == SweepAxis::scCount)
            {
                require(v <= 63, "sweep.values: small-cell counts must be <= 63");
                require(horizon >= v, "bandit.horizon: must be >= every swept small-cell count");
            }
        }
        require(!sweepStrategies.empty(), "sweep.strategies: at least one strategy is required");
    }
}

void applyConfigValue(ExperimentConfig& config, std::string_view key, std::string_view value)
{
    for (const Field& f : fields())
    {
        if (f.key == key)
        {
            f.set(config, value);
            return;
        }
    }
    throw ConfigError("unknown configuration key '" + std::string(key) + "'");
}

ExperimentConfig parseConfig(std::istream& in)
{
    ExperimentConfig config;
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line))
    {
        ++lineNo;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos)
            view = view.substr(0, hash);
        view = trim(view);
        if (view.empty())
            continue;
        const auto eq = view.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(lineNo) + ": expected 'key = value'");
        applyConfigValue(config, trim(view.substr(0, eq)), trim(view.substr(eq + 1)));
    }
    return config;
}

ExperimentConfig loadConfig(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    return parseConfig(in);
}

void writeConfig(std::ostream& out, const ExperimentConfig& config)
{
    for (const Field& f : fields())
        out << f.key << " = " << f.get(config) << '\n';
}

} // namespace hetsleep
