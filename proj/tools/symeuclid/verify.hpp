#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symeuclid/integer.hpp"

namespace symeuclid::verify {

struct Options {
    Int max_n = 10'000;
    std::uint64_t seed = 0;
    Int cases = 1'000;
};

struct PropertyResult {
    std::string name;
    std::int64_t checked = 0;
    /// First failing instance; sweeps run in ascending n so this is the
    /// smallest n that fails.
    std::optional<std::string> reproducer;
};

struct Report {
    std::vector<PropertyResult> properties;

    bool ok() const noexcept {
        for (const auto& p : properties)
            if (p.reproducer) return false;
        return true;
    }
};

/// Runs every property: exhaustive sweeps over 2 <= n <= max_n and seeded
/// random-sequence fuzzing with `cases` samples per fuzz property.
/// Deterministic for fixed options.
Report run_all(const Options& options);

}  // namespace symeuclid::verify
