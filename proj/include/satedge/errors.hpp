// Copyright 2026 The satedge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace satedge {

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A fit or regression could not produce a usable estimate.
class EstimationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No operating point satisfies the requested constraint.
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what, double achievable = 0.0)
        : std::runtime_error(what), achievable_(achievable) {}

    /// Best value of the constrained quantity that was reachable (e.g.
    /// reliability at f_max). Zero when not meaningful.
    double achievable() const noexcept { return achievable_; }

private:
    double achievable_;
};

class InfeasibleLinkError : public InfeasibleError {
public:
    using InfeasibleError::InfeasibleError;
};

class InfeasibleBudgetError : public InfeasibleError {
public:
    using InfeasibleError::InfeasibleError;
};

/// Malformed or unknown configuration; `key_path()` names the offending key.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key_path, const std::string& what)
        : std::runtime_error(key_path.empty() ? what : key_path + ": " + what),
          key_path_(std::move(key_path)) {}

    const std::string& key_path() const noexcept { return key_path_; }

private:
    std::string key_path_;
};

namespace detail {

inline void require(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

} // namespace detail

} // namespace satedge
