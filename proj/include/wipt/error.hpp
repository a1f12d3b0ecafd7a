// SPDX-License-Identifier: Apache-2.0
//
// wipt-sim: Monte Carlo simulator for multi-antenna wireless information and power transfer
// Copyright (C) 2026 The wipt-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#ifndef WIPT_ERROR_HPP
#define WIPT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wipt
{

// Argument outside the mathematical domain of an operation (negative distance, rho > 1, tau >= T, ...).
class domain_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// A numerical solver could not produce a result (non-finite objective values).
class solver_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Invalid experiment or run configuration. Carries the offending key and, when known, the line.
class config_error : public std::runtime_error
{
public:
    config_error(const std::string &message, std::string key = {}, int line = 0)
        : std::runtime_error(format(message, key, line)), key_(std::move(key)), line_(line) {}

    const std::string &key() const noexcept { return key_; }
    int line() const noexcept { return line_; }

private:
    static std::string format(const std::string &message, const std::string &key, int line)
    {
        std::string out;
        if (line > 0)
            out += "line " + std::to_string(line) + ": ";
        if (!key.empty())
            out += "key `" + key + "`: ";
        return out + message;
    }

    std::string key_;
    int line_;
};

// File could not be opened or written.
class io_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

namespace detail
{
inline void require(bool condition, const char *message)
{
    if (!condition)
        throw wipt::domain_error(message);
}
} // namespace detail

} // namespace wipt

#endif
