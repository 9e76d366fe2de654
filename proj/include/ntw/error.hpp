#pragma once

#include <stdexcept>
#include <string>

namespace ntw {

// Malformed request: empty range, zero trials, bad flag values. Maps to exit code 2.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Argument outside the mathematical domain of an evaluator (t < 10, n = 0).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace ntw
