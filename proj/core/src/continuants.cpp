#include "symeuclid/continuants.hpp"

#include <algorithm>
#include <sstream>

namespace symeuclid {

namespace {

void require_positive_terms(const std::vector<Int>& terms) {
    for (Int u : terms)
        if (u < 1) fail(ErrorCode::domain, "partial quotients must be positive, got " + std::to_string(u));
}

std::string range_message(const char* what, Int i, Int j, Int t) {
    std::ostringstream os;
    os << what << ": indices (" << i << ", " << j << ") outside range for length " << t;
    return os.str();
}

}  // namespace

QuotientSequence::QuotientSequence(std::initializer_list<Int> terms) : terms_(terms) {
    require_positive_terms(terms_);
}

QuotientSequence::QuotientSequence(std::vector<Int> terms) : terms_(std::move(terms)) {
    require_positive_terms(terms_);
}

Int QuotientSequence::term(Int k) const {
    if (k < 1 || k > length()) fail(ErrorCode::range, "term index " + std::to_string(k) + " out of range");
    return terms_[static_cast<std::size_t>(k - 1)];
}

QuotientSequence QuotientSequence::slice(Int first, Int last) const {
    if (last < first) return {};
    if (first < 1 || last > length()) fail(ErrorCode::range, range_message("slice", first, last, length()));
    return QuotientSequence(std::vector<Int>(terms_.begin() + (first - 1), terms_.begin() + last));
}

std::string QuotientSequence::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < terms_.size(); ++k) os << (k ? "," : "") << terms_[k];
    os << ')';
    return os.str();
}

std::string to_string(const ReducedFraction& f) {
    return std::to_string(f.numerator) + "/" + std::to_string(f.denominator);
}

Int continuant(const QuotientSequence& seq, Int i, Int j) {
    const Int t = seq.length();
    if (i < 1 || j < i - 2 || j > t) fail(ErrorCode::range, range_message("continuant", i, j, t));
    // c(i, k) = u_k c(i, k-1) + c(i, k-2), seeded with c(i, i-2) = 0, c(i, i-1) = 1.
    Int before = 0;
    Int current = 1;
    if (j == i - 2) return before;
    for (Int k = i; k <= j; ++k) {
        Int next = checked::mul_add(seq.term(k), current, before);
        before = current;
        current = next;
    }
    return current;
}

ContinuantTable::ContinuantTable(const QuotientSequence& seq) : length_(seq.length()) {
    const Int t = length_;
    const auto n = static_cast<std::size_t>(t);

    prefix_.resize(n + 2);
    prefix_[0] = 0;  // c(1, -1)
    prefix_[1] = 1;  // c(1, 0)
    for (Int j = 1; j <= t; ++j) {
        const auto k = static_cast<std::size_t>(j + 1);
        prefix_[k] = checked::mul_add(seq.term(j), prefix_[k - 1], prefix_[k - 2]);
    }

    // Backwards by c(i, s) = u_i c(i+1, s) + c(i+2, s).
    suffix_.resize(n + 2);
    suffix_[n + 1] = 0;  // c(t+2, t)
    suffix_[n] = 1;      // c(t+1, t)
    for (Int i = t; i >= 1; --i) {
        const auto k = static_cast<std::size_t>(i - 1);
        suffix_[k] = checked::mul_add(seq.term(i), suffix_[k + 1], suffix_[k + 2]);
    }

    suffix_trimmed_.resize(n + 1);
    suffix_trimmed_[n] = 0;  // c(t+1, t-1)
    if (t >= 1) {
        suffix_trimmed_[n - 1] = 1;  // c(t, t-1)
        for (Int i = t - 1; i >= 1; --i) {
            const auto k = static_cast<std::size_t>(i - 1);
            suffix_trimmed_[k] = checked::mul_add(seq.term(i), suffix_trimmed_[k + 1], suffix_trimmed_[k + 2]);
        }
    }
}

Int ContinuantTable::prefix(Int j) const {
    if (j < -1 || j > length_) fail(ErrorCode::range, range_message("prefix", 1, j, length_));
    return prefix_[static_cast<std::size_t>(j + 1)];
}

Int ContinuantTable::suffix(Int i) const {
    if (i < 1 || i > length_ + 2) fail(ErrorCode::range, range_message("suffix", i, length_, length_));
    return suffix_[static_cast<std::size_t>(i - 1)];
}

Int ContinuantTable::suffix_trimmed(Int i) const {
    if (i < 1 || i > length_ + 1) fail(ErrorCode::range, range_message("suffix_trimmed", i, length_ - 1, length_));
    return suffix_trimmed_[static_cast<std::size_t>(i - 1)];
}

ContinuantTable prefix_suffix_tables(const QuotientSequence& seq) { return ContinuantTable(seq); }

bool euler_identity_holds(const QuotientSequence& seq, Int i, Int l, Int m, Int s) {
    const Int t = seq.length();
    if (!(1 <= i && i <= l && l <= m + 2 && m <= s && s <= t)) {
        std::ostringstream os;
        os << "euler_identity_holds: (i,l,m,s) = (" << i << "," << l << "," << m << "," << s
           << ") outside range for length " << t;
        fail(ErrorCode::range, os.str());
    }
    auto c = [&](Int a, Int b) { return continuant(seq, a, b); };
    Int lhs = checked::sub(checked::mul(c(i, s), c(l, m)), checked::mul(c(i, m), c(l, s)));
    Int rhs = checked::mul(c(i, l - 2), c(m + 2, s));
    if ((m - l + 1) % 2 != 0) rhs = -rhs;
    return lhs == rhs;
}

ReducedFraction cf_eval(const QuotientSequence& seq) {
    if (seq.empty()) return {1, 1};
    const ContinuantTable table(seq);
    return {table.suffix(1), table.suffix(2)};
}

QuotientSequence palindrome(const QuotientSequence& seq) {
    std::vector<Int> out(seq.terms().begin(), seq.terms().end());
    out.insert(out.end(), seq.terms().rbegin(), seq.terms().rend());
    return QuotientSequence(std::move(out));
}

QuotientSequence reverse(const QuotientSequence& seq) {
    return QuotientSequence(std::vector<Int>(seq.terms().rbegin(), seq.terms().rend()));
}

}  // namespace symeuclid
