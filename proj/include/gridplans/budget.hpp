#pragma once

#include "gridplans/errors.hpp"

#include <chrono>
#include <cstdint>
#include <optional>

namespace gridplans {

/// Resource limits for the exhaustive operations. Empty fields mean unlimited.
struct Budget {
    std::optional<double> seconds;
    std::optional<std::uint64_t> mem_mb;
};

/// Per-operation checker. Construct when the operation starts, call check()
/// periodically with the current working-set estimate.
class BudgetGuard {
public:
    explicit BudgetGuard(const Budget& budget)
        : budget_(budget), start_(std::chrono::steady_clock::now()) {}

    void check(std::uint64_t approx_bytes = 0) const {
        if (budget_.seconds) {
            const auto elapsed = std::chrono::duration<double>(
                std::chrono::steady_clock::now() - start_).count();
            if (elapsed > *budget_.seconds)
                throw BudgetExceeded("time budget exceeded");
        }
        if (budget_.mem_mb && approx_bytes > *budget_.mem_mb * 1024ULL * 1024ULL)
            throw BudgetExceeded("memory budget exceeded");
    }

private:
    Budget budget_;
    std::chrono::steady_clock::time_point start_;
};

} // namespace gridplans
