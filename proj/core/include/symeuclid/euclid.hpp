#pragma once

#include <optional>
#include <vector>

#include "symeuclid/continuants.hpp"
#include "symeuclid/integer.hpp"

namespace symeuclid {

/// Default ceiling for exhaustive scans over [1, n).
inline constexpr Int default_sweep_bound = 10'000'000;

/// Record of one run of the Euclidean algorithm on (n, a).
///
/// remainders holds r_1 = n, r_2 = a, ..., 0 and quotients holds q_1..q_t with
/// r_k = q_k r_{k+1} + r_{k+2}. Accessors are 1-based like the rest of the
/// library.
struct EuclidTrace {
    std::vector<Int> remainders;
    std::vector<Int> quotients;
    bool convention_applied = false;
    bool symmetric = false;
    std::optional<Int> half_length;

    Int n() const { return remainders.front(); }
    Int a() const { return remainders.at(1); }
    Int remainder(Int k) const;
    Int quotient(Int k) const;
    Int remainder_count() const noexcept { return static_cast<Int>(remainders.size()); }

    /// q_1..q_s of a symmetric trace; ErrorCode::not_symmetric otherwise.
    QuotientSequence half_quotients() const;

    friend bool operator==(const EuclidTrace&, const EuclidTrace&) = default;
};

/// Plain division-algorithm trace. Requires 1 <= a < n and gcd(n, a) = 1.
EuclidTrace euclid_trace(Int n, Int a);

/// Rewrites the final equation r = q*1 + 0 as r = (q-1)*1 + 1 and 1 = 1*1 + 0.
/// ErrorCode::not_applicable when the final quotient is already 1.
EuclidTrace apply_convention(const EuclidTrace& trace);

/// The trace of (n, a) whose quotients form an even palindrome, taking the
/// standard trace if it qualifies and the split trace otherwise. At most one
/// of the two can qualify. ErrorCode::not_symmetric if neither does.
EuclidTrace symmetric_trace(Int n, Int a);

/// Same classification without throwing on a non-symmetric pair; still throws
/// for invalid (n, a).
std::optional<EuclidTrace> try_symmetric_trace(Int n, Int a);

/// True when the quotient list reads (q_1..q_s, q_s..q_1) for some s >= 1.
bool is_even_palindrome(const std::vector<Int>& quotients) noexcept;

/// (a*a + 1) mod n == 0, exact for every 64-bit a. Requires n >= 2.
bool is_sqrt_minus_one(Int n, Int a);

/// All a in [1, n-1] with a^2 = -1 (mod n), ascending, by exhaustive scan.
/// ErrorCode::resource_guard when n exceeds sweep_bound.
std::vector<Int> sqrt_minus_one_all(Int n, Int sweep_bound = default_sweep_bound);

}  // namespace symeuclid
