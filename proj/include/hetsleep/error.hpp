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
#ifndef HETSLEEP_ERROR_HPP
#define HETSLEEP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hetsleep
{

/// Base of every error thrown by the simulator core. The C API maps each
/// subclass onto one status code.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Invalid scenario or experiment configuration (bad field value, missing key).
class ConfigError : public Error
{
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation (negative load, ...).
class DomainError : public Error
{
public:
    using Error::Error;
};

/// Operation called in the wrong state (slept serving cell, CUCB before init).
class StateError : public Error
{
public:
    using Error::Error;
};

/// Exhaustive enumeration requested beyond the supported size.
class CapacityError : public Error
{
public:
    using Error::Error;
};

/// Numerical failure (non-finite objective inside the optimizer).
class NumericError : public Error
{
public:
    using Error::Error;
};

/// Output files already exist, or cannot be written.
class IoError : public Error
{
public:
    using Error::Error;
};

} // namespace hetsleep

#endif // HETSLEEP_ERROR_HPP
