#pragma once

#include <stdexcept>
#include <string>

namespace qda {

// Exit codes used by the CLI. Library code throws; main() maps to codes.
enum exit_code : int {
    exit_ok = 0,
    exit_no_solution = 1,
    exit_budget = 2,
    exit_parse = 3,
    exit_undecidable = 4,
};

struct no_solution_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A certified comparison straddled zero at the configured precision cap.
/// Raised instead of silently guessing; see the interval escalation policy.
struct undecidable_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Enumeration exhausted the guaranteed radius without a qualifying vector.
/// The theorems exclude this; reaching it signals an implementation bug.
struct search_exhausted_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace qda
