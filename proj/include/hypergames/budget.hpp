#ifndef HYPERGAMES_BUDGET_HPP
#define HYPERGAMES_BUDGET_HPP

#include <stdexcept>
#include <string>

namespace hypergames {

// Thrown when an exact search exceeds its node budget. Callers treat this as
// "unknown", never as an answer.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hypergames

#endif
