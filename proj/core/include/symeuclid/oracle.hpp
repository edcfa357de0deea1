#pragma once

#include <vector>

#include "symeuclid/continuants.hpp"
#include "symeuclid/integer.hpp"
#include "symeuclid/two_squares.hpp"

/// Brute-force references for differential testing. Nothing here calls into
/// the continuant recurrences, the Euclidean trace, or the two-squares loop;
/// the only shared pieces are the value types.
namespace symeuclid::oracle {

/// Tridiagonal determinant over u_i..u_j (1 <= i <= j <= t) by cofactor
/// expansion along the first row.
Int det_continuant(const QuotientSequence& seq, Int i, Int j);

/// Every x >= y >= 1 with x^2 + y^2 = n and gcd(x, y) = 1, descending in x.
std::vector<TwoSquares> brute_two_squares(Int n);

/// Right-to-left fold u_k + 1/rest over reduced rationals; () -> 1/1.
ReducedFraction cf_eval_fold(const QuotientSequence& seq);

}  // namespace symeuclid::oracle
