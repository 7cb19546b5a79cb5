#pragma once

#include <stdexcept>
#include <string>

namespace gridplans {

/// Input text or labeling that does not even have the right shape
/// (wrong line/token counts, out-of-range labels). Distinct from a
/// well-formed partition that merely violates invariants.
struct MalformedInput : std::invalid_argument {
    explicit MalformedInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured time/memory budget was exceeded, or an exact computation
/// would have to leave its safe operating range. Never a wrong answer.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Operation defined only for n == 0 (mod 6) was called with another residue.
struct UnsupportedResidue : std::runtime_error {
    explicit UnsupportedResidue(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gridplans
