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
#ifndef HETSLEEP_VALIDATE_HPP
#define HETSLEEP_VALIDATE_HPP

#include "hetsleep/config.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hetsleep
{

struct CheckResult
{
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport
{
    std::vector<CheckResult> checks;

    std::size_t passed() const;
    std::size_t failed() const;
    bool ok() const { return failed() == 0; }
    /// One "PASS name: detail" / "FAIL name: detail" line per check plus a summary.
    std::string text() const;
};

/// Runs the property suite against `config` (profiles, radio constants,
/// bandit parameters). Scenario sizes are capped so the suite stays fast.
/// Never throws for a failing property; each check reports its own error.
ValidationReport runValidation(const ExperimentConfig& config, std::uint64_t seed);

} // namespace hetsleep

#endif // HETSLEEP_VALIDATE_HPP
