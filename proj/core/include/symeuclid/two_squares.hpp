#pragma once

#include <vector>

#include "symeuclid/euclid.hpp"
#include "symeuclid/integer.hpp"

namespace symeuclid {

/// Primitive representation n = x^2 + y^2, normalized so x > y >= 1.
/// n = 2 is the one case with x = y = 1.
struct TwoSquares {
    Int x = 0;
    Int y = 0;

    friend bool operator==(const TwoSquares&, const TwoSquares&) = default;
    friend auto operator<=>(const TwoSquares&, const TwoSquares&) = default;
};

/// Runs the division loop on (n, a) only until the first remainder x with
/// x^2 < n appears, and returns it with the remainder that follows.
/// Requires a^2 = -1 (mod n); that is checked before the loop starts.
TwoSquares brillhart(Int n, Int a);

/// One representation per {a, n - a} pair of square roots of -1, ordered by
/// descending x.
std::vector<TwoSquares> all_primitive_representations(Int n, Int sweep_bound = default_sweep_bound);

}  // namespace symeuclid
