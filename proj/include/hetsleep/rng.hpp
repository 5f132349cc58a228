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
#ifndef HETSLEEP_RNG_HPP
#define HETSLEEP_RNG_HPP

#include <cstdint>
#include <random>

namespace hetsleep
{

using Rng = std::mt19937_64;

/// Independent consumers of randomness. Each gets its own stream derived from
/// the master seed, so adding draws in one consumer never shifts another.
enum class RngStream : std::uint32_t
{
    deployment = 1,
    traffic = 2,
    oracle = 3,
    strategy = 4,
    validation = 5,
};

/// Generator for (seed, stream, index). The index lets per-round consumers
/// (traffic) derive a fresh generator per round instead of carrying state.
inline Rng makeRng(std::uint64_t seed, RngStream stream, std::uint64_t index = 0)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

} // namespace hetsleep

#endif // HETSLEEP_RNG_HPP
