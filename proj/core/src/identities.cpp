#include "symeuclid/identities.hpp"

#include <algorithm>
#include <sstream>

namespace symeuclid {

namespace {

std::string index_text(Int i, Int j) { return "(i, j) = (" + std::to_string(i) + ", " + std::to_string(j) + ")"; }

/// Trace whose quotients are exactly the given palindrome. The empty
/// palindrome values 1 and has remainders (1, 0).
EuclidTrace nested_trace(const QuotientSequence& sub_cf) {
    if (sub_cf.empty()) return EuclidTrace{{1, 0}, {}, false, true, Int{0}};
    const ReducedFraction value = cf_eval(sub_cf);
    EuclidTrace trace = symmetric_trace(value.numerator, value.denominator);
    if (!std::equal(trace.quotients.begin(), trace.quotients.end(), sub_cf.terms().begin(), sub_cf.terms().end()))
        fail(ErrorCode::internal, "nested trace of " + to_string(value) + " does not reproduce " + sub_cf.to_string());
    return trace;
}

}  // namespace

std::vector<RemainderFormulaRow> explicit_remainders(const EuclidTrace& trace) {
    const QuotientSequence half = trace.half_quotients();
    const Int s = half.length();
    const ContinuantTable c(half);
    const Int full = c.prefix(s);         // c(1, s)
    const Int trimmed = c.prefix(s - 1);  // c(1, s-1)

    std::vector<RemainderFormulaRow> rows;
    rows.reserve(static_cast<std::size_t>(s + 1));
    for (Int i = 1; i <= s + 1; ++i) {
        RemainderFormulaRow row;
        row.i = i;
        row.head_remainder = trace.remainder(i);
        row.head_formula = checked::add(checked::mul(full, c.suffix(i)), checked::mul(trimmed, c.suffix_trimmed(i)));
        row.tail_index = 2 * s - i + 3;
        row.tail_remainder = trace.remainder(row.tail_index);
        row.tail_prefix = c.prefix(i - 2);
        Int difference = checked::sub(checked::mul(full, c.suffix_trimmed(i)), checked::mul(trimmed, c.suffix(i)));
        row.tail_formula = (i + s) % 2 == 0 ? difference : -difference;
        rows.push_back(row);
    }
    return rows;
}

std::string_view to_string(Family family) noexcept { return family == Family::plus ? "plus" : "minus"; }

__int128 FormIdentity::lhs() const noexcept {
    const __int128 first = static_cast<__int128>(factor_values[0]) * factor_values[1];
    const __int128 second = static_cast<__int128>(factor_values[2]) * factor_values[3];
    return family == Family::plus ? first + second : first - second;
}

std::string FormIdentity::expression() const {
    auto product = [&](std::size_t k) {
        if (factor_indices[k] == factor_indices[k + 1]) return std::to_string(factor_values[k]) + "^2";
        return std::to_string(factor_values[k]) + "·" + std::to_string(factor_values[k + 1]);
    };
    std::ostringstream os;
    os << product(0) << (family == Family::plus ? " + " : " - ") << product(2) << " = " << multiplier << " · " << n;
    return os.str();
}

FormIdentity form_identity(const EuclidTrace& trace, Int i, Int j, Family family) {
    const QuotientSequence half = trace.half_quotients();
    const Int s = half.length();
    if (j < 0 || j > i || i > s) fail(ErrorCode::range, "form_identity: need 0 <= j <= i <= s, got " + index_text(i, j));

    FormIdentity id;
    id.family = family;
    id.i = i;
    id.j = j;
    id.n = trace.n();
    if (family == Family::plus)
        id.factor_indices = {i - j + 1, i + j + 1, 2 * s + 2 - i - j, 2 * s + 2 - i + j};
    else
        id.factor_indices = {i - j + 1, i + j + 2, 2 * s + 1 - i - j, 2 * s + 2 - i + j};
    for (std::size_t k = 0; k < 4; ++k) id.factor_values[k] = trace.remainder(id.factor_indices[k]);

    const __int128 lhs = id.lhs();
    if (lhs % id.n != 0)
        fail(ErrorCode::internal, "form_identity: left side not divisible by n at " + index_text(i, j));
    const Int by_division = checked::narrow(lhs / id.n);

    id.sub_cf = palindrome(half.slice(i - j + 1, s));
    const EuclidTrace nested = nested_trace(id.sub_cf);
    const Int position = family == Family::plus ? 2 * j + 1 : 2 * j + 2;
    const Int by_nested_trace = nested.remainder(position);
    if (by_division != by_nested_trace) {
        std::ostringstream os;
        os << "form_identity: multiplier mismatch at " << index_text(i, j) << " (" << to_string(family)
           << "): division gives " << by_division << ", nested trace gives " << by_nested_trace;
        fail(ErrorCode::internal, os.str());
    }
    id.multiplier = by_division;

    bool zero_factor = false;
    for (Int v : id.factor_values) zero_factor = zero_factor || v == 0;
    id.degenerate = zero_factor || id.multiplier == 0;
    return id;
}

std::vector<FormIdentity> enumerate_identities(const EuclidTrace& trace) {
    const Int s = trace.half_quotients().length();
    std::vector<FormIdentity> out;
    out.reserve(static_cast<std::size_t>((s + 1) * (s + 2)));
    for (Int offset = 0; offset <= s; ++offset) {
        for (Int j = 0; offset + j <= s; ++j) {
            out.push_back(form_identity(trace, offset + j, j, Family::plus));
            out.push_back(form_identity(trace, offset + j, j, Family::minus));
        }
    }
    return out;
}

CorollaryStep corollary_step(Int n, Int a) {
    if (a < 1 || a >= n) fail(ErrorCode::domain, "corollary_step: need 1 <= a < n");
    if (!is_sqrt_minus_one(n, a))
        fail(ErrorCode::domain, "corollary_step: " + std::to_string(n) + " does not divide " + std::to_string(a) + "^2 + 1");
    const Int multiplier = checked::narrow((static_cast<__int128>(a) * a + 1) / n);
    return {multiplier, a % multiplier};
}

NestChain nest_chain(Int n, Int a) {
    NestChain chain;
    chain.entries.push_back({n, a});
    for (;;) {
        const CorollaryStep step = corollary_step(n, a);
        if (step.multiplier == 1) break;
        chain.multipliers.push_back(step.multiplier);
        chain.entries.push_back({step.multiplier, step.remainder});
        n = step.multiplier;
        a = step.remainder;
    }
    return chain;
}

}  // namespace symeuclid
