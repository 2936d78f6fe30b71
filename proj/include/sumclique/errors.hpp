#pragma once

#include <stdexcept>
#include <string>

namespace sumclique {

// Violated precondition (bad argument, malformed input, unsupported parameter).
// The CLI maps this to exit code 2.
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A configured resource budget was exhausted where partial results are not
// meaningful (enumerations, counters). The CLI maps this to exit code 3.
// Note: max_clique does NOT throw this; it returns a flagged partial result.
struct BudgetExceededError : std::runtime_error {
    explicit BudgetExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace sumclique
