#pragma once

#include <array>
#include <string>
#include <vector>

#include "symeuclid/continuants.hpp"
#include "symeuclid/euclid.hpp"
#include "symeuclid/integer.hpp"

namespace symeuclid {

/// One row of the explicit remainder formulas for a symmetric trace with
/// half sequence q_1..q_s and continuants c over it, 1 <= i <= s + 1:
///
///   r_i        = c(1,s) c(i,s) + c(1,s-1) c(i,s-1)
///   r_{2s-i+3} = c(1,i-2) = (-1)^(i+s) (c(1,s) c(i,s-1) - c(1,s-1) c(i,s))
struct RemainderFormulaRow {
    Int i = 0;
    Int head_remainder = 0;      // r_i read from the trace
    Int head_formula = 0;        // c(1,s) c(i,s) + c(1,s-1) c(i,s-1)
    Int tail_index = 0;          // 2s - i + 3
    Int tail_remainder = 0;      // r_{2s-i+3} read from the trace
    Int tail_prefix = 0;         // c(1, i-2)
    Int tail_formula = 0;        // signed difference form

    bool holds() const noexcept {
        return head_remainder == head_formula && tail_remainder == tail_prefix && tail_remainder == tail_formula;
    }
};

/// Rows for every i in 1..s+1. ErrorCode::not_symmetric on a non-symmetric trace.
std::vector<RemainderFormulaRow> explicit_remainders(const EuclidTrace& trace);

enum class Family { plus, minus };

std::string_view to_string(Family family) noexcept;

/// One instance of the quadratic-form identities in the remainders:
///
///   plus:  r_{i-j+1} r_{i+j+1} + r_{2s+2-i-j} r_{2s+2-i+j} = n * m
///   minus: r_{i-j+1} r_{i+j+2} - r_{2s+1-i-j} r_{2s+2-i+j} = n * m
///
/// where m is the (2j+1)th (plus) or (2j+2)th (minus) remainder of the trace
/// of the palindrome [q_{i-j+1}, ..., q_s, q_s, ..., q_{i-j+1}].
struct FormIdentity {
    Family family = Family::plus;
    Int i = 0;
    Int j = 0;
    Int n = 0;
    std::array<Int, 4> factor_indices{};  // 1-based remainder subscripts: (p, q) then (r, t) in p*q +/- r*t
    std::array<Int, 4> factor_values{};
    Int multiplier = 0;
    QuotientSequence sub_cf;
    /// Zero factor or zero multiplier; the i = 0 row and j = i rows always
    /// have a zero factor, the i = s minus row has multiplier zero.
    bool degenerate = false;

    /// Left-hand side evaluated from the factors, in 128 bits.
    __int128 lhs() const noexcept;

    /// "246^2 + 1^2 = 73 · 829" style rendering.
    std::string expression() const;
};

/// Builds and checks one identity. The multiplier is computed twice: by exact
/// division of the left-hand side by n, and as the designated remainder of the
/// nested palindrome's trace. Disagreement raises ErrorCode::internal.
FormIdentity form_identity(const EuclidTrace& trace, Int i, Int j, Family family);

/// Both families for all 0 <= j <= i <= s: (s+1)(s+2) identities in total.
/// Ordered by i - j, then j, plus before minus.
std::vector<FormIdentity> enumerate_identities(const EuclidTrace& trace);

struct CorollaryStep {
    Int multiplier = 0;  // (a^2 + 1) / n
    Int remainder = 0;   // a mod multiplier

    friend bool operator==(const CorollaryStep&, const CorollaryStep&) = default;
};

/// (n, a) -> ((a^2+1)/n, a mod (a^2+1)/n). When the multiplier exceeds 1 the
/// result is the reduced value of the palindrome with its outer quotient pair
/// removed. Requires 1 <= a < n with a^2 = -1 (mod n).
CorollaryStep corollary_step(Int n, Int a);

struct NestChain {
    /// entries[k-1] values [q_k, ..., q_s, q_s, ..., q_k] for k = 1..s.
    std::vector<ReducedFraction> entries;
    /// multipliers[k-1] is the step from entries[k-1] to entries[k]; the
    /// terminating step (multiplier 1) is not recorded.
    std::vector<Int> multipliers;
};

/// Iterates corollary_step from n/a until the multiplier reaches 1.
NestChain nest_chain(Int n, Int a);

}  // namespace symeuclid
