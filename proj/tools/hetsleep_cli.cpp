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
// Command-line front end. Talks to the simulator only through the C API.
#include "hetsleep/hetsleep.h"

#include "CLI11.hpp"

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace
{

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitValidation = 2;

struct Options
{
    std::string config;
    std::optional<std::uint64_t> seed;
    std::string out = ".";
    bool force = false;
    std::vector<std::string> overrides;
};

int report(hetsleep_status status)
{
    if (status == HETSLEEP_OK)
        return kExitOk;
    std::cerr << "hetsleep: " << hetsleep_last_error() << '\n';
    return status == HETSLEEP_ERR_VALIDATION ? kExitValidation : kExitConfig;
}

// Builds the configuration from --config and --set; nullptr after printing an error.
hetsleep_config* loadConfig(const Options& opt)
{
    hetsleep_config* cfg = nullptr;
    const hetsleep_status s =
        opt.config.empty() ? hetsleep_config_create(&cfg) : hetsleep_config_load(opt.config.c_str(), &cfg);
    if (s != HETSLEEP_OK)
    {
        report(s);
        return nullptr;
    }
    for (const std::string& kv : opt.overrides)
    {
        const auto eq = kv.find('=');
        const std::string key = eq == std::string::npos ? kv : kv.substr(0, eq);
        const std::string value = eq == std::string::npos ? "" : kv.substr(eq + 1);
        if (report(hetsleep_config_set(cfg, key.c_str(), value.c_str())) != kExitOk)
        {
            hetsleep_config_destroy(cfg);
            return nullptr;
        }
    }
    if (opt.seed)
    {
        const std::string seed = std::to_string(*opt.seed);
        hetsleep_config_set(cfg, "run.seeds", seed.c_str());
    }
    return cfg;
}

std::uint64_t seedOf(const Options& opt)
{
    return opt.seed.value_or(1);
}

int cmdRun(const Options& opt)
{
    hetsleep_config* cfg = loadConfig(opt);
    if (cfg == nullptr)
        return kExitConfig;
    int code = report(hetsleep_run(cfg, seedOf(opt), opt.out.c_str(), opt.force ? 1 : 0));
    if (code == kExitOk)
        code = report(hetsleep_config_write(cfg, (std::filesystem::path(opt.out) / "config.used").c_str()));
    hetsleep_config_destroy(cfg);
    return code;
}

int cmdSweep(const Options& opt)
{
    hetsleep_config* cfg = loadConfig(opt);
    if (cfg == nullptr)
        return kExitConfig;
    int code = report(hetsleep_sweep(cfg, opt.out.c_str(), opt.force ? 1 : 0));
    if (code == kExitOk)
        code = report(hetsleep_config_write(cfg, (std::filesystem::path(opt.out) / "config.used").c_str()));
    hetsleep_config_destroy(cfg);
    return code;
}

int cmdValidate(const Options& opt)
{
    hetsleep_config* cfg = loadConfig(opt);
    if (cfg == nullptr)
        return kExitConfig;
    hetsleep_report* rep = nullptr;
    const hetsleep_status s = hetsleep_validate(cfg, seedOf(opt), &rep);
    if (rep != nullptr)
        std::cout << hetsleep_report_text(rep);
    hetsleep_report_destroy(rep);
    hetsleep_config_destroy(cfg);
    return report(s);
}

int cmdOracleBench(const Options& opt)
{
    hetsleep_config* cfg = loadConfig(opt);
    if (cfg == nullptr)
        return kExitConfig;
    const int code = report(hetsleep_oracle_bench(cfg, seedOf(opt), opt.out.c_str(), opt.force ? 1 : 0));
    hetsleep_config_destroy(cfg);
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Small-cell sleep learning and range-expansion simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", hetsleep_version());

    Options opt;
    auto addCommon = [&](CLI::App* sub, bool withOut) {
        sub->add_option("--config", opt.config, "key = value configuration file")->check(CLI::ExistingFile);
        sub->add_option("--seed", opt.seed, "experiment seed (default 1)");
        sub->add_option("--set", opt.overrides, "override one key, e.g. --set scenario.num_ue=10");
        if (withOut)
        {
            sub->add_option("--out", opt.out, "output directory");
            sub->add_flag("--force", opt.force, "overwrite existing output files");
        }
    };

    CLI::App* run = app.add_subcommand("run", "single experiment for one seed");
    addCommon(run, true);
    CLI::App* sweep = app.add_subcommand("sweep", "grid over sweep.axis, every strategy and seed");
    addCommon(sweep, true);
    CLI::App* validate = app.add_subcommand("validate", "property suite");
    addCommon(validate, false);
    CLI::App* bench = app.add_subcommand("oracle-bench", "brute-force super-arm table");
    addCommon(bench, true);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    if (run->parsed())
        return cmdRun(opt);
    if (sweep->parsed())
        return cmdSweep(opt);
    if (validate->parsed())
        return cmdValidate(opt);
    return cmdOracleBench(opt);
}
