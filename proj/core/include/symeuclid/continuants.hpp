#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "symeuclid/integer.hpp"

namespace symeuclid {

/// A finite run of positive partial quotients u_1, ..., u_t.
///
/// Indexing convention: every public index in this library is 1-based, so
/// term(k) is u_k and continuant(seq, i, j) is the determinant over
/// u_i..u_j. Storage is a 0-based vector and term(k) reads terms_[k - 1];
/// that is the only place the two conventions meet.
class QuotientSequence {
public:
    QuotientSequence() = default;
    QuotientSequence(std::initializer_list<Int> terms);
    explicit QuotientSequence(std::vector<Int> terms);

    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }
    Int length() const noexcept { return static_cast<Int>(terms_.size()); }

    /// u_k for 1 <= k <= length().
    Int term(Int k) const;

    std::span<const Int> terms() const noexcept { return terms_; }

    /// Terms u_first..u_last (1-based, inclusive); empty when last < first.
    QuotientSequence slice(Int first, Int last) const;

    std::string to_string() const;

    friend bool operator==(const QuotientSequence&, const QuotientSequence&) = default;

private:
    std::vector<Int> terms_;
};

/// Numerator/denominator of a simple continued fraction, always in lowest terms.
struct ReducedFraction {
    Int numerator = 1;
    Int denominator = 1;

    friend bool operator==(const ReducedFraction&, const ReducedFraction&) = default;
};

std::string to_string(const ReducedFraction& f);

/// Continuant of u_i..u_j. Accepts 1 <= i and i - 2 <= j <= t, so that the
/// boundary values c(j+1, j) = 1 and c(j+2, j) = 0 are reachable.
Int continuant(const QuotientSequence& seq, Int i, Int j);

/// The continuants consumed by the symmetric-remainder formulas, for a
/// sequence of length t:
///   prefix(j)         = c(1, j)       for -1 <= j <= t
///   suffix(i)         = c(i, t)       for  1 <= i <= t + 2
///   suffix_trimmed(i) = c(i, t - 1)   for  1 <= i <= t + 1
/// c(t+2, t-1) is not a continuant under the boundary conventions, which is
/// why suffix_trimmed stops one row earlier.
class ContinuantTable {
public:
    explicit ContinuantTable(const QuotientSequence& seq);

    Int length() const noexcept { return length_; }
    Int prefix(Int j) const;
    Int suffix(Int i) const;
    Int suffix_trimmed(Int i) const;

private:
    Int length_;
    std::vector<Int> prefix_;          // prefix_[j + 1] = c(1, j)
    std::vector<Int> suffix_;          // suffix_[i - 1] = c(i, t)
    std::vector<Int> suffix_trimmed_;  // suffix_trimmed_[i - 1] = c(i, t - 1)
};

ContinuantTable prefix_suffix_tables(const QuotientSequence& seq);

/// Euler's identity
///   c(i,s) c(l,m) - c(i,m) c(l,s) = (-1)^(m-l+1) c(i,l-2) c(m+2,s)
/// over the relaxed range 1 <= i <= l <= m + 2, m <= s <= t.
bool euler_identity_holds(const QuotientSequence& seq, Int i, Int l, Int m, Int s);

/// Value of [u_1, ..., u_t] as c(1,t) / c(2,t). The empty sequence is 1/1.
ReducedFraction cf_eval(const QuotientSequence& seq);

/// (u_1..u_s) -> (u_1..u_s, u_s..u_1)
QuotientSequence palindrome(const QuotientSequence& seq);

QuotientSequence reverse(const QuotientSequence& seq);

}  // namespace symeuclid
