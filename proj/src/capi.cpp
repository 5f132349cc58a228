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
#include "hetsleep/hetsleep.h"

#include "hetsleep/config.hpp"
#include "hetsleep/error.hpp"
#include "hetsleep/harness.hpp"
#include "hetsleep/validate.hpp"

#include <filesystem>
#include <fstream>
#include <new>
#include <string>

struct hetsleep_config
{
    hetsleep::ExperimentConfig config;
};

struct hetsleep_report
{
    hetsleep::ValidationReport report;
    std::string text;
};

namespace
{

thread_local std::string lastError;

hetsleep_status fail(hetsleep_status status, std::string message)
{
    lastError = std::move(message);
    return status;
}

template <typename F>
hetsleep_status guarded(F&& body)
{
    try
    {
        lastError.clear();
        return body();
    }
    catch (const hetsleep::ConfigError& e)
    {
        return fail(HETSLEEP_ERR_CONFIG, e.what());
    }
    catch (const hetsleep::IoError& e)
    {
        return fail(HETSLEEP_ERR_IO, e.what());
    }
    catch (const std::filesystem::filesystem_error& e)
    {
        return fail(HETSLEEP_ERR_IO, e.what());
    }
    catch (const hetsleep::CapacityError& e)
    {
        return fail(HETSLEEP_ERR_CAPACITY, e.what());
    }
    catch (const hetsleep::DomainError& e)
    {
        return fail(HETSLEEP_ERR_INVALID_ARGUMENT, e.what());
    }
    catch (const std::bad_alloc&)
    {
        return fail(HETSLEEP_ERR_INTERNAL, "out of memory");
    }
    catch (const std::exception& e)
    {
        return fail(HETSLEEP_ERR_INTERNAL, e.what());
    }
}

} // namespace

extern "C" {

const char* hetsleep_last_error(void)
{
    return lastError.c_str();
}

const char* hetsleep_version(void)
{
    return "0.1.0";
}

hetsleep_status hetsleep_config_create(hetsleep_config** out)
{
    if (out == nullptr)
        return fail(HETSLEEP_ERR_INVALID_ARGUMENT, "null output pointer");
    return guarded([&] {
        *out = new hetsleep_config{};
        return HETSLEEP_OK;
    });
}

hetsleep_status hetsleep_config_load(const char* path, hetsleep_config** out)
{
    if (path == nullptr || out == nullptr)
        return fail(HETSLEEP_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto* cfg = new hetsleep_config{hetsleep::loadConfig(path)};
        *out = cfg;
        return HETSLEEP_OK;
    });
}

hetsleep_status hetsleep_config_set(hetsleep_config* cfg, const char* key, const char* value)
{
    if (cfg == nullptr || key == nullptr || value == nullptr)
        return fail(HETSLEEP_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        hetsleep::applyConfigValue(cfg->config, key, value);
        return HETSLEEP_OK;
    });
}

hetsleep_status hetsleep_config_write(const hetsleep_config* cfg, const char* path)
{
    if (cfg == nullptr || path == nullptr)
        return fail(HETSLEEP_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw hetsleep::IoError(std::string("cannot write '") + path + "'");
        hetsleep::writeConfig(out, cfg->config);
        return HETSLEEP_OK;
    });
}

void hetsleep_config_destroy(hetsleep_config* cfg)
{
    delete cfg;
}

hetsleep_status hetsleep_run(const hetsleep_config* cfg, uint64_t seed, const char* out_dir, int force)
{
    if (cfg == nullptr || out_dir == nullptr)
        return fail(HETSLEEP_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        hetsleep::runToDirectory(cfg->config, seed, out_dir, force != 0);
        return HETSLEEP_OK;
    });
}

hetsleep_status hetsleep_sweep(const hetsleep_config* cfg, const char* out_dir, int force)
{
    if (cfg == nullptr || out_dir == nullptr)
        return fail(HETSLEEP_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        hetsleep::runSweep(cfg->config, out_dir, force != 0);
        return HETSLEEP_OK;
    });
}

hetsleep_status hetsleep_oracle_bench(const hetsleep_config* cfg, uint64_t seed, const char* out_dir, int force)
{
    if (cfg == nullptr || out_dir == nullptr)
        return fail(HETSLEEP_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        hetsleep::oracleBenchToDirectory(cfg->config, seed, out_dir, force != 0);
        return HETSLEEP_OK;
    });
}

hetsleep_status hetsleep_validate(const hetsleep_config* cfg, uint64_t seed, hetsleep_report** out)
{
    if (cfg == nullptr || out == nullptr)
        return fail(HETSLEEP_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto* r = new hetsleep_report{hetsleep::runValidation(cfg->config, seed), {}};
        r->text = r->report.text();
        *out = r;
        if (!r->report.ok())
            return fail(HETSLEEP_ERR_VALIDATION, std::to_string(r->report.failed()) + " properties failed");
        return HETSLEEP_OK;
    });
}

const char* hetsleep_report_text(const hetsleep_report* report)
{
    return report == nullptr ? "" : report->text.c_str();
}

size_t hetsleep_report_passed(const hetsleep_report* report)
{
    return report == nullptr ? 0 : report->report.passed();
}

size_t hetsleep_report_failed(const hetsleep_report* report)
{
    return report == nullptr ? 0 : report->report.failed();
}

void hetsleep_report_destroy(hetsleep_report* report)
{
    delete report;
}

} // extern "C"
