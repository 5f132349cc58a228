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
#ifndef HETSLEEP_CSV_HPP
#define HETSLEEP_CSV_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hetsleep
{

/// Shortest decimal form that parses back to the same double.
std::string formatDouble(double v);

/// Strict numeric parsing; throws ConfigError mentioning `what` on failure.
double parseDouble(std::string_view text, std::string_view what);
std::uint64_t parseUnsigned(std::string_view text, std::string_view what);

std::string_view trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

/// A parsed CSV file with a header row. No quoting: fields never contain commas.
struct CsvTable
{
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Throws ConfigError naming the missing column.
    std::size_t column(std::string_view name) const;
    double number(std::size_t row, std::string_view name) const;
};

CsvTable readCsv(std::istream& in);
CsvTable readCsvFile(const std::string& path);

} // namespace hetsleep

#endif // HETSLEEP_CSV_HPP
