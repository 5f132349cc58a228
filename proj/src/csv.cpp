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
#include "hetsleep/csv.hpp"

#include "hetsleep/error.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>

namespace hetsleep
{

std::string formatDouble(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (std::isnan(v))
        return "nan";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true)
    {
        const auto pos = s.find(sep, start);
        out.emplace_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

double parseDouble(std::string_view text, std::string_view what)
{
    text = trim(text);
    if (text == "inf")
        return INFINITY;
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size() || text.empty())
        throw ConfigError(std::string(what) + ": expected a number, got '" + std::string(text) + "'");
    return v;
}

std::uint64_t parseUnsigned(std::string_view text, std::string_view what)
{
    text = trim(text);
    std::uint64_t v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size() || text.empty())
        throw ConfigError(std::string(what) + ": expected a non-negative integer, got '" + std::string(text) + "'");
    return v;
}

std::size_t CsvTable::column(std::string_view name) const
{
    for (std::size_t i = 0; i < header.size(); ++i)
    {
        if (header[i] == name)
            return i;
    }
    throw ConfigError("csv: missing column '" + std::string(name) + "'");
}

double CsvTable::number(std::size_t row, std::string_view name) const
{
    return parseDouble(rows.at(row).at(column(name)), name);
}

CsvTable readCsv(std::istream& in)
{
    CsvTable table;
    std::string line;
    bool first = true;
    while (std::getline(in, line))
    {
        if (trim(line).empty())
            continue;
        if (first)
        {
            table.header = split(line, ',');
            first = false;
        }
        else
        {
            table.rows.push_back(split(line, ','));
        }
    }
    return table;
}

CsvTable readCsvFile(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open '" + path + "'");
    return readCsv(in);
}

} // namespace hetsleep
