#include "symeuclid/oracle.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace symeuclid::oracle {

namespace {

using Matrix = std::vector<std::vector<Int>>;

Matrix minor_without(const Matrix& m, std::size_t column) {
    Matrix out;
    out.reserve(m.size() - 1);
    for (std::size_t r = 1; r < m.size(); ++r) {
        std::vector<Int> row;
        row.reserve(m.size() - 1);
        for (std::size_t c = 0; c < m.size(); ++c)
            if (c != column) row.push_back(m[r][c]);
        out.push_back(std::move(row));
    }
    return out;
}

Int laplace_determinant(const Matrix& m) {
    if (m.size() == 1) return m[0][0];
    Int det = 0;
    for (std::size_t c = 0; c < m.size(); ++c) {
        if (m[0][c] == 0) continue;
        Int term = checked::mul(m[0][c], laplace_determinant(minor_without(m, c)));
        det = c % 2 == 0 ? checked::add(det, term) : checked::sub(det, term);
    }
    return det;
}

Int isqrt(Int v) {
    auto r = static_cast<Int>(std::sqrt(static_cast<long double>(v)));
    while (r > 0 && static_cast<__int128>(r) * r > v) --r;
    while (static_cast<__int128>(r + 1) * (r + 1) <= v) ++r;
    return r;
}

}  // namespace

Int det_continuant(const QuotientSequence& seq, Int i, Int j) {
    if (i < 1 || j < i || j > seq.length())
        fail(ErrorCode::range, "det_continuant: indices (" + std::to_string(i) + ", " + std::to_string(j) +
                                   ") outside range for length " + std::to_string(seq.length()));
    const auto size = static_cast<std::size_t>(j - i + 1);
    Matrix m(size, std::vector<Int>(size, 0));
    for (std::size_t r = 0; r < size; ++r) {
        m[r][r] = seq.term(i + static_cast<Int>(r));
        if (r + 1 < size) {
            m[r][r + 1] = 1;
            m[r + 1][r] = -1;
        }
    }
    return laplace_determinant(m);
}

std::vector<TwoSquares> brute_two_squares(Int n) {
    std::vector<TwoSquares> reps;
    for (Int y = 1; static_cast<__int128>(2) * y * y <= n; ++y) {
        const Int rest = n - y * y;
        const Int x = isqrt(rest);
        if (x * x == rest && std::gcd(x, y) == 1) reps.push_back({x, y});
    }
    // y ascending gives x descending.
    return reps;
}

ReducedFraction cf_eval_fold(const QuotientSequence& seq) {
    if (seq.empty()) return {1, 1};
    auto terms = seq.terms();
    Int num = terms.back();
    Int den = 1;
    for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
        // u + den/num = (u*num + den) / num
        Int next_num = checked::add(checked::mul(*it, num), den);
        den = num;
        num = next_num;
        const Int g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    return {num, den};
}

}  // namespace symeuclid::oracle
