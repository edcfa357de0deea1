#include <gtest/gtest.h>

#include "symeuclid/euclid.hpp"

namespace symeuclid {
namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an Error";
    return ErrorCode::internal;
}

TEST(EuclidTrace, WorkedExample) {
    const EuclidTrace t = euclid_trace(829, 246);
    EXPECT_EQ(t.quotients, (std::vector<Int>{3, 2, 1, 2, 2, 1, 2, 3}));
    EXPECT_EQ(t.remainders, (std::vector<Int>{829, 246, 91, 64, 27, 10, 7, 3, 1, 0}));
    EXPECT_FALSE(t.convention_applied);
    EXPECT_FALSE(t.half_length.has_value());
}

TEST(EuclidTrace, SmallCases) {
    EXPECT_EQ(euclid_trace(10, 7).quotients, (std::vector<Int>{1, 2, 3}));
    EXPECT_EQ(euclid_trace(10, 7).remainders, (std::vector<Int>{10, 7, 3, 1, 0}));
    EXPECT_EQ(euclid_trace(2, 1).quotients, (std::vector<Int>{2}));
    EXPECT_EQ(euclid_trace(2, 1).remainders, (std::vector<Int>{2, 1, 0}));
}

TEST(EuclidTrace, Preconditions) {
    EXPECT_EQ(code_of([] { euclid_trace(7, 7); }), ErrorCode::domain);
    EXPECT_EQ(code_of([] { euclid_trace(7, 0); }), ErrorCode::domain);
    EXPECT_EQ(code_of([] { euclid_trace(7, 9); }), ErrorCode::domain);
    EXPECT_EQ(code_of([] { euclid_trace(12, 8); }), ErrorCode::coprimality);
}

TEST(ApplyConvention, SplitsFinalEquation) {
    const EuclidTrace t = apply_convention(euclid_trace(10, 7));
    EXPECT_EQ(t.quotients, (std::vector<Int>{1, 2, 2, 1}));
    EXPECT_EQ(t.remainders, (std::vector<Int>{10, 7, 3, 1, 1, 0}));
    EXPECT_TRUE(t.convention_applied);

    const EuclidTrace two = apply_convention(euclid_trace(2, 1));
    EXPECT_EQ(two.quotients, (std::vector<Int>{1, 1}));
    EXPECT_EQ(two.remainders, (std::vector<Int>{2, 1, 1, 0}));

    const EuclidTrace five = apply_convention(euclid_trace(5, 2));
    EXPECT_EQ(five.quotients, (std::vector<Int>{2, 1, 1}));
    EXPECT_FALSE(is_even_palindrome(five.quotients));
}

TEST(ApplyConvention, RefusesFinalQuotientOne) {
    const EuclidTrace split = apply_convention(euclid_trace(10, 7));
    EXPECT_EQ(code_of([&] { apply_convention(split); }), ErrorCode::not_applicable);
}

TEST(SymmetricTrace, Examples) {
    const EuclidTrace big = symmetric_trace(829, 246);
    EXPECT_TRUE(big.symmetric);
    EXPECT_EQ(big.half_length, 4);
    EXPECT_FALSE(big.convention_applied);
    EXPECT_EQ(big.half_quotients(), (QuotientSequence{3, 2, 1, 2}));

    const EuclidTrace ten = symmetric_trace(10, 7);
    EXPECT_EQ(ten.half_length, 2);
    EXPECT_TRUE(ten.convention_applied);
    EXPECT_EQ(ten.quotients, (std::vector<Int>{1, 2, 2, 1}));

    const EuclidTrace two = symmetric_trace(2, 1);
    EXPECT_EQ(two.half_length, 1);
    EXPECT_EQ(two.quotients, (std::vector<Int>{1, 1}));

    const EuclidTrace ten3 = symmetric_trace(10, 3);
    EXPECT_EQ(ten3.quotients, (std::vector<Int>{3, 3}));
    EXPECT_EQ(ten3.half_length, 1);
}

TEST(SymmetricTrace, NotSymmetric) {
    EXPECT_EQ(code_of([] { symmetric_trace(7, 3); }), ErrorCode::not_symmetric);
    EXPECT_EQ(code_of([] { symmetric_trace(7, 6); }), ErrorCode::not_symmetric);  // a = n - 1
    EXPECT_EQ(code_of([] { euclid_trace(7, 3).half_quotients(); }), ErrorCode::not_symmetric);
}

TEST(SymmetricTrace, PerronBothDirectionsSmall) {
    for (Int n = 2; n <= 400; ++n)
        for (Int a = 1; a < n; ++a) {
            if (gcd(n, a) != 1) continue;
            bool symmetric = true;
            try {
                symmetric_trace(n, a);
            } catch (const Error&) {
                symmetric = false;
            }
            ASSERT_EQ(symmetric, is_sqrt_minus_one(n, a)) << n << " " << a;
        }
}

TEST(SymmetricTrace, DivisionIdentityAndRemainderTail) {
    for (Int n = 2; n <= 600; ++n)
        for (Int a : sqrt_minus_one_all(n)) {
            const EuclidTrace t = symmetric_trace(n, a);
            for (Int k = 1; k <= static_cast<Int>(t.quotients.size()); ++k)
                ASSERT_EQ(t.remainder(k), t.quotient(k) * t.remainder(k + 1) + t.remainder(k + 2));
            const QuotientSequence half = t.half_quotients();
            const Int s = half.length();
            ASSERT_EQ(t.remainder_count(), 2 * s + 2);
            for (Int k = -1; k <= s; ++k)
                ASSERT_EQ(t.remainder(t.remainder_count() - 1 - k), continuant(half, 1, k)) << n << " " << a;
        }
}

TEST(SqrtMinusOne, Predicate) {
    EXPECT_TRUE(is_sqrt_minus_one(829, 246));
    EXPECT_TRUE(is_sqrt_minus_one(829, 829 - 246));
    EXPECT_FALSE(is_sqrt_minus_one(7, 3));
    EXPECT_TRUE(is_sqrt_minus_one(5, -2));
    EXPECT_TRUE(is_sqrt_minus_one(2, 1));
    // 64-bit inputs must not overflow: 2^62 squared.
    const Int big = Int{1} << 62;
    EXPECT_EQ(is_sqrt_minus_one(big + 1, big), false);
    EXPECT_EQ(code_of([] { is_sqrt_minus_one(1, 0); }), ErrorCode::domain);
}

TEST(SqrtMinusOne, AllRoots) {
    EXPECT_EQ(sqrt_minus_one_all(5), (std::vector<Int>{2, 3}));
    EXPECT_EQ(sqrt_minus_one_all(65), (std::vector<Int>{8, 18, 47, 57}));
    EXPECT_TRUE(sqrt_minus_one_all(7).empty());
    EXPECT_EQ(sqrt_minus_one_all(2), (std::vector<Int>{1}));
    EXPECT_EQ(code_of([] { sqrt_minus_one_all(1000, 999); }), ErrorCode::resource_guard);
}

}  // namespace
}  // namespace symeuclid
