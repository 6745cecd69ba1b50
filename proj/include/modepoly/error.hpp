#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace modepoly {

// Base for all library failures. The CLI maps each family to an exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or contract-violating input (exit code 2).
class InvalidInput : public Error {
public:
    using Error::Error;
};

// A configurable resource cap was hit (exit code 3).
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t reached)
        : Error(what + " (reached " + std::to_string(reached) + ")"), reached_(reached) {}

    std::uint64_t reached() const noexcept { return reached_; }

private:
    std::uint64_t reached_;
};

// Two independent computations disagreed, or a postcondition failed (exit code 4).
class ConsistencyError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

} // namespace modepoly
