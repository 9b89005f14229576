#pragma once

#include <stdexcept>
#include <string>

namespace gaussloc {

/// Gram matrix could not be factorized even at maximum jitter.
class NotPsdError : public std::runtime_error {
public:
    explicit NotPsdError(const std::string& what) : std::runtime_error(what) {}
};

/// A series truncation failed to meet its tail-bound tolerance.
class NotConvergedError : public std::runtime_error {
public:
    explicit NotConvergedError(const std::string& what) : std::runtime_error(what) {}
};

/// Lemma parameters do not match the requested regime.
class RegimeMismatchError : public std::invalid_argument {
public:
    explicit RegimeMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

/// Scenario fields are inconsistent (dimensions, separation class, ...).
class InvalidScenarioError : public std::invalid_argument {
public:
    explicit InvalidScenarioError(const std::string& what) : std::invalid_argument(what) {}
};

/// Too few tuples survived filtering in an empirical condition check.
class InsufficientSamplesError : public std::runtime_error {
public:
    explicit InsufficientSamplesError(const std::string& what) : std::runtime_error(what) {}
};

/// The series grid contains a point where the expansion variable reaches 1.
class SingularDomainError : public std::runtime_error {
public:
    explicit SingularDomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gaussloc
