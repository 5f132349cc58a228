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
// Exercises the shared library through its C header only.
#include "doctest.h"

#include "hetsleep/hetsleep.h"

#include <filesystem>
#include <string>

namespace fs = std::filesystem;

namespace
{

struct Config
{
    hetsleep_config* handle = nullptr;
    Config() { REQUIRE(hetsleep_config_create(&handle) == HETSLEEP_OK); }
    ~Config() { hetsleep_config_destroy(handle); }
};

} // namespace

TEST_CASE("config handles and status codes")
{
    Config c;
    CHECK(hetsleep_config_set(c.handle, "scenario.num_ue", "12") == HETSLEEP_OK);
    CHECK(hetsleep_config_set(c.handle, "scenario.bogus", "1") == HETSLEEP_ERR_CONFIG);
    CHECK(std::string(hetsleep_last_error()).find("scenario.bogus") != std::string::npos);
    CHECK(hetsleep_config_set(c.handle, "bandit.alpha", "abc") == HETSLEEP_ERR_CONFIG);
    CHECK(hetsleep_config_set(nullptr, "a", "b") == HETSLEEP_ERR_INVALID_ARGUMENT);
    CHECK(hetsleep_config_create(nullptr) == HETSLEEP_ERR_INVALID_ARGUMENT);

    hetsleep_config* missing = nullptr;
    CHECK(hetsleep_config_load("/nonexistent/cfg", &missing) == HETSLEEP_ERR_CONFIG);
    CHECK(missing == nullptr);
    CHECK(std::string(hetsleep_version()).size() > 0);
    hetsleep_config_destroy(nullptr);
    hetsleep_report_destroy(nullptr);
}

TEST_CASE("config write and reload")
{
    Config c;
    REQUIRE(hetsleep_config_set(c.handle, "scenario.num_ue", "13") == HETSLEEP_OK);
    const fs::path dir = fs::temp_directory_path() / "hetsleep_capi_cfg";
    fs::create_directories(dir);
    const std::string path = (dir / "a.cfg").string();
    REQUIRE(hetsleep_config_write(c.handle, path.c_str()) == HETSLEEP_OK);
    hetsleep_config* back = nullptr;
    REQUIRE(hetsleep_config_load(path.c_str(), &back) == HETSLEEP_OK);
    const std::string path2 = (dir / "b.cfg").string();
    REQUIRE(hetsleep_config_write(back, path2.c_str()) == HETSLEEP_OK);
    hetsleep_config_destroy(back);
    CHECK(fs::file_size(path) == fs::file_size(path2));
    fs::remove_all(dir);
}

TEST_CASE("validation report")
{
    Config c;
    hetsleep_report* rep = nullptr;
    CHECK(hetsleep_validate(c.handle, 1, &rep) == HETSLEEP_OK);
    REQUIRE(rep != nullptr);
    CHECK(hetsleep_report_passed(rep) > 10);
    CHECK(hetsleep_report_failed(rep) == 0);
    hetsleep_report_destroy(rep);

    REQUIRE(hetsleep_config_set(c.handle, "power.micro.p_sleep", "70") == HETSLEEP_OK);
    rep = nullptr;
    CHECK(hetsleep_validate(c.handle, 1, &rep) == HETSLEEP_ERR_VALIDATION);
    REQUIRE(rep != nullptr);
    const std::string text = hetsleep_report_text(rep);
    CHECK(text.find("FAIL profile-invariants") != std::string::npos);
    CHECK(hetsleep_report_failed(rep) >= 1);
    hetsleep_report_destroy(rep);
}

TEST_CASE("run, oracle bench and overwrite protection")
{
    Config c;
    REQUIRE(hetsleep_config_set(c.handle, "scenario.num_ue", "8") == HETSLEEP_OK);
    REQUIRE(hetsleep_config_set(c.handle, "bandit.horizon", "60") == HETSLEEP_OK);
    REQUIRE(hetsleep_config_set(c.handle, "run.steady_rounds", "10") == HETSLEEP_OK);
    const fs::path dir = fs::temp_directory_path() / "hetsleep_capi_run";
    fs::remove_all(dir);
    CHECK(hetsleep_run(c.handle, 4, dir.string().c_str(), 0) == HETSLEEP_OK);
    CHECK(fs::exists(dir / "run_CUCB_seed4.csv"));
    CHECK(hetsleep_run(c.handle, 4, dir.string().c_str(), 0) == HETSLEEP_ERR_IO);
    CHECK(hetsleep_run(c.handle, 4, dir.string().c_str(), 1) == HETSLEEP_OK);
    CHECK(hetsleep_oracle_bench(c.handle, 4, dir.string().c_str(), 0) == HETSLEEP_OK);
    CHECK(fs::exists(dir / "oracle_bench_seed4.csv"));
    CHECK(hetsleep_sweep(c.handle, dir.string().c_str(), 0) == HETSLEEP_ERR_CONFIG);

    REQUIRE(hetsleep_config_set(c.handle, "bandit.horizon", "2") == HETSLEEP_OK);
    CHECK(hetsleep_run(c.handle, 4, dir.string().c_str(), 1) == HETSLEEP_ERR_CONFIG);
    CHECK(std::string(hetsleep_last_error()).find("bandit.horizon") != std::string::npos);
    fs::remove_all(dir);
}
