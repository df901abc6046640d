// SPDX-License-Identifier: Apache-2.0
//
// fadingrelay: capacity bounds for noncoherent fading relay channels
// Copyright (C) 2026 The fadingrelay authors
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

#ifndef FADINGRELAY_ERROR_HPP
#define FADINGRELAY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fadingrelay {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the documented domain of a function.
class DomainError : public Error {
public:
    using Error::Error;
};

// An intermediate quantity exceeds the representable range.
class OverflowError : public Error {
public:
    using Error::Error;
};

// A scenario does not satisfy an operation's standing assumption
// (for example a memoryless direct link).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// No spectral model satisfies the requested constraints.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

class IllConditionedError : public Error {
public:
    IllConditionedError(const std::string &what, double condition_estimate)
        : Error(what), condition_estimate_(condition_estimate) {}
    double condition_estimate() const noexcept { return condition_estimate_; }

private:
    double condition_estimate_;
};

class EmbeddingError : public Error {
public:
    EmbeddingError(const std::string &what, double min_eigenvalue)
        : Error(what), min_eigenvalue_(min_eigenvalue) {}
    double min_eigenvalue() const noexcept { return min_eigenvalue_; }

private:
    double min_eigenvalue_;
};

class QuadratureError : public Error {
public:
    QuadratureError(const std::string &what, double achieved_tolerance)
        : Error(what), achieved_tolerance_(achieved_tolerance) {}
    double achieved_tolerance() const noexcept { return achieved_tolerance_; }

private:
    double achieved_tolerance_;
};

class InsufficientDataError : public Error {
public:
    using Error::Error;
};

class SearchError : public Error {
public:
    using Error::Error;
};

class BudgetExceededError : public SearchError {
public:
    using SearchError::SearchError;
};

class AllNonFiniteError : public SearchError {
public:
    using SearchError::SearchError;
};

// Malformed configuration; field() names the offending entry.
class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string &message)
        : Error(field + ": " + message), field_(std::move(field)) {}
    const std::string &field() const noexcept { return field_; }

private:
    std::string field_;
};

} // namespace fadingrelay

#endif
