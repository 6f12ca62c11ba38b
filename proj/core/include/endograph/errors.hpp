#pragma once

#include <stdexcept>
#include <string>

namespace endograph {

// Malformed request: bad selector, unknown flag value, invalid generator data.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A construction would exceed a hard size cap (group order, vertex count).
struct SizeCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration or search exceeded its configured work budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace endograph
