#include "symeuclid/two_squares.hpp"

#include <algorithm>
#include <string>

namespace symeuclid {

namespace {

bool square_below(Int r, Int n) { return static_cast<__int128>(r) * r < n; }

}  // namespace

TwoSquares brillhart(Int n, Int a) {
    if (n < 2) fail(ErrorCode::domain, "brillhart: n must be at least 2");
    if (a < 1 || a >= n) fail(ErrorCode::domain, "brillhart: need 1 <= a < n");
    if (!is_sqrt_minus_one(n, a))
        fail(ErrorCode::domain,
             "brillhart: " + std::to_string(a) + " is not a square root of -1 mod " + std::to_string(n));

    Int high = n;
    Int low = a;
    while (!square_below(low, n)) {
        Int next = high % low;
        high = low;
        low = next;
    }
    const Int x = low;
    Int y = high % low;
    // Only n = 2 reaches the final equation here; its split form ends 1, 1, 0.
    if (y == 0 && x == 1) y = 1;

    const __int128 sum = static_cast<__int128>(x) * x + static_cast<__int128>(y) * y;
    if (sum != n || y < 1 || x < y || gcd(x, y) != 1)
        fail(ErrorCode::internal, "brillhart: extraction failed for (" + std::to_string(n) + ", " + std::to_string(a) +
                                      "): got (" + std::to_string(x) + ", " + std::to_string(y) + ")");
    return {x, y};
}

std::vector<TwoSquares> all_primitive_representations(Int n, Int sweep_bound) {
    std::vector<TwoSquares> reps;
    for (Int a : sqrt_minus_one_all(n, sweep_bound)) {
        if (a > n - a) continue;
        reps.push_back(brillhart(n, a));
    }
    std::sort(reps.begin(), reps.end(), [](const TwoSquares& l, const TwoSquares& r) { return l > r; });
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return reps;
}

}  // namespace symeuclid
