#include "symeuclid/euclid.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace symeuclid {

namespace {

std::string pair_text(Int n, Int a) { return "(" + std::to_string(n) + ", " + std::to_string(a) + ")"; }

void require_valid_pair(Int n, Int a) {
    if (a < 1 || a >= n) fail(ErrorCode::domain, "need 1 <= a < n, got " + pair_text(n, a));
    if (gcd(n, a) != 1) fail(ErrorCode::coprimality, "gcd(n, a) != 1 for " + pair_text(n, a));
}

}  // namespace

Int EuclidTrace::remainder(Int k) const {
    if (k < 1 || k > remainder_count()) fail(ErrorCode::range, "remainder index " + std::to_string(k) + " out of range");
    return remainders[static_cast<std::size_t>(k - 1)];
}

Int EuclidTrace::quotient(Int k) const {
    if (k < 1 || k > static_cast<Int>(quotients.size()))
        fail(ErrorCode::range, "quotient index " + std::to_string(k) + " out of range");
    return quotients[static_cast<std::size_t>(k - 1)];
}

QuotientSequence EuclidTrace::half_quotients() const {
    if (!symmetric || !half_length) fail(ErrorCode::not_symmetric, "trace of " + pair_text(n(), a()) + " is not symmetric");
    return QuotientSequence(std::vector<Int>(quotients.begin(), quotients.begin() + *half_length));
}

EuclidTrace euclid_trace(Int n, Int a) {
    require_valid_pair(n, a);
    EuclidTrace trace;
    // Lame: at most about 1.44 log2(n) + 2 division steps.
    const auto steps = static_cast<std::size_t>(2 * std::bit_width(static_cast<std::uint64_t>(n)) + 2);
    trace.quotients.reserve(steps);
    trace.remainders.reserve(steps + 2);
    trace.remainders = {n, a};
    Int high = n;
    Int low = a;
    while (low != 0) {
        trace.quotients.push_back(high / low);
        Int next = high % low;
        trace.remainders.push_back(next);
        high = low;
        low = next;
    }
    return trace;
}

EuclidTrace apply_convention(const EuclidTrace& trace) {
    if (trace.convention_applied || trace.quotients.empty() || trace.quotients.back() < 2)
        fail(ErrorCode::not_applicable, "final quotient of " + pair_text(trace.n(), trace.a()) + " cannot be split");
    // Final equation is r_l = q_l * 1 + 0 because gcd(n, a) = 1.
    EuclidTrace split = trace;
    split.quotients.back() -= 1;
    split.quotients.push_back(1);
    split.remainders.back() = 1;
    split.remainders.push_back(0);
    split.convention_applied = true;
    split.symmetric = false;
    split.half_length.reset();
    return split;
}

bool is_even_palindrome(const std::vector<Int>& quotients) noexcept {
    return !quotients.empty() && quotients.size() % 2 == 0 && std::equal(quotients.begin(), quotients.end(), quotients.rbegin());
}

std::optional<EuclidTrace> try_symmetric_trace(Int n, Int a) {
    EuclidTrace trace = euclid_trace(n, a);
    if (!is_even_palindrome(trace.quotients)) {
        if (trace.quotients.back() < 2) return std::nullopt;
        trace = apply_convention(trace);
        if (!is_even_palindrome(trace.quotients)) return std::nullopt;
    }
    trace.symmetric = true;
    trace.half_length = static_cast<Int>(trace.quotients.size() / 2);
    return trace;
}

EuclidTrace symmetric_trace(Int n, Int a) {
    auto trace = try_symmetric_trace(n, a);
    if (!trace) fail(ErrorCode::not_symmetric, "quotients of " + pair_text(n, a) + " are not symmetric in either form");
    return *std::move(trace);
}

bool is_sqrt_minus_one(Int n, Int a) {
    if (n < 2) fail(ErrorCode::domain, "modulus must be at least 2, got " + std::to_string(n));
    __int128 r = a % n;
    return (r * r + 1) % n == 0;
}

std::vector<Int> sqrt_minus_one_all(Int n, Int sweep_bound) {
    if (n < 2) fail(ErrorCode::domain, "modulus must be at least 2, got " + std::to_string(n));
    if (n > sweep_bound)
        fail(ErrorCode::resource_guard,
             "n = " + std::to_string(n) + " exceeds sweep bound " + std::to_string(sweep_bound));
    std::vector<Int> roots;
    for (Int a = 1; a < n; ++a)
        if (is_sqrt_minus_one(n, a)) roots.push_back(a);
    return roots;
}

}  // namespace symeuclid
