#include <gtest/gtest.h>

#include "symeuclid/identities.hpp"

namespace symeuclid {
namespace {

TEST(ExplicitRemainders, WorkedExample) {
    const EuclidTrace t = symmetric_trace(829, 246);
    const auto rows = explicit_remainders(t);
    ASSERT_EQ(rows.size(), 5u);
    for (const auto& row : rows) EXPECT_TRUE(row.holds()) << row.i;

    const auto& first = rows[0];
    EXPECT_EQ(first.head_remainder, 829);
    EXPECT_EQ(first.head_formula, 27 * 27 + 10 * 10);
    EXPECT_EQ(first.tail_index, 10);
    EXPECT_EQ(first.tail_prefix, 0);

    const auto& second = rows[1];
    EXPECT_EQ(second.tail_index, 9);
    EXPECT_EQ(second.tail_remainder, 1);

    const auto& fifth = rows[4];
    EXPECT_EQ(fifth.head_remainder, 27);
    EXPECT_EQ(fifth.head_formula, 27);
    EXPECT_EQ(fifth.tail_index, 6);
    EXPECT_EQ(fifth.tail_remainder, 10);
}

TEST(ExplicitRemainders, RejectsNonSymmetricTrace) {
    try {
        explicit_remainders(euclid_trace(7, 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::not_symmetric);
    }
}

TEST(FormIdentity, WorkedExampleEntries) {
    const EuclidTrace t = symmetric_trace(829, 246);

    const FormIdentity p10 = form_identity(t, 1, 0, Family::plus);
    EXPECT_EQ(p10.factor_values, (std::array<Int, 4>{246, 246, 1, 1}));
    EXPECT_EQ(p10.multiplier, 73);
    EXPECT_EQ(p10.expression(), "246^2 + 1^2 = 73 · 829");
    EXPECT_FALSE(p10.degenerate);

    const FormIdentity m10 = form_identity(t, 1, 0, Family::minus);
    EXPECT_EQ(m10.factor_values, (std::array<Int, 4>{246, 91, 3, 1}));
    EXPECT_EQ(m10.multiplier, 27);
    EXPECT_EQ(m10.expression(), "246·91 - 3·1 = 27 · 829");

    const FormIdentity p20 = form_identity(t, 2, 0, Family::plus);
    EXPECT_EQ(p20.multiplier, 10);
    EXPECT_EQ(p20.sub_cf, (QuotientSequence{1, 2, 2, 1}));

    const FormIdentity p00 = form_identity(t, 0, 0, Family::plus);
    EXPECT_EQ(p00.multiplier, 829);
    EXPECT_EQ(p00.factor_values, (std::array<Int, 4>{829, 829, 0, 0}));
    EXPECT_TRUE(p00.degenerate);
}

TEST(FormIdentity, IndexBounds) {
    const EuclidTrace t = symmetric_trace(829, 246);
    EXPECT_THROW(form_identity(t, 5, 0, Family::plus), Error);
    EXPECT_THROW(form_identity(t, 2, 3, Family::plus), Error);
    EXPECT_THROW(form_identity(t, 2, -1, Family::minus), Error);
}

TEST(EnumerateIdentities, SixteenFactorizationsInOrder) {
    const EuclidTrace t = symmetric_trace(829, 246);
    const auto all = enumerate_identities(t);
    EXPECT_EQ(all.size(), 30u);

    std::vector<std::string> lines;
    std::vector<Int> multipliers;
    for (const auto& id : all)
        if (!id.degenerate) {
            lines.push_back(id.expression());
            multipliers.push_back(id.multiplier);
        }
    EXPECT_EQ(multipliers, (std::vector<Int>{73, 27, 19, 8, 3, 2, 1, 10, 7, 3, 1, 1, 5, 2, 1, 1}));
    const std::vector<std::string> expected{
        "246^2 + 1^2 = 73 · 829", "246·91 - 3·1 = 27 · 829", "246·64 + 7·1 = 19 · 829",
        "246·27 - 10·1 = 8 · 829", "246·10 + 27·1 = 3 · 829", "246·7 - 64·1 = 2 · 829",
        "246·3 + 91·1 = 1 · 829",  "91^2 + 3^2 = 10 · 829",   "91·64 - 7·3 = 7 · 829",
        "91·27 + 10·3 = 3 · 829",  "91·10 - 27·3 = 1 · 829",  "91·7 + 64·3 = 1 · 829",
        "64^2 + 7^2 = 5 · 829",    "64·27 - 10·7 = 2 · 829",  "64·10 + 27·7 = 1 · 829",
        "27^2 + 10^2 = 1 · 829",
    };
    EXPECT_EQ(lines, expected);
}

TEST(EnumerateIdentities, SmallestCase) {
    // remainders (5, 2, 1, 0), s = 1
    const EuclidTrace t = symmetric_trace(5, 2);
    const auto all = enumerate_identities(t);
    ASSERT_EQ(all.size(), 6u);
    auto find = [&](Int i, Int j, Family f) {
        for (const auto& id : all)
            if (id.i == i && id.j == j && id.family == f) return id;
        ADD_FAILURE();
        return FormIdentity{};
    };
    EXPECT_EQ(find(0, 0, Family::plus).multiplier, 5);
    EXPECT_EQ(find(1, 0, Family::plus).multiplier, 1);
    EXPECT_EQ(find(1, 0, Family::plus).factor_values, (std::array<Int, 4>{2, 2, 1, 1}));
    EXPECT_EQ(find(1, 1, Family::plus).factor_values, (std::array<Int, 4>{5, 1, 2, 0}));
    EXPECT_EQ(find(1, 1, Family::plus).multiplier, 1);
    EXPECT_EQ(find(0, 0, Family::minus).multiplier, 2);
    EXPECT_EQ(find(1, 0, Family::minus).multiplier, 0);
    EXPECT_EQ(find(1, 1, Family::minus).multiplier, 0);
}

TEST(EnumerateIdentities, SweepBothFamiliesAndWagonRow) {
    for (Int n = 2; n <= 1500; ++n)
        for (Int a : sqrt_minus_one_all(n)) {
            const EuclidTrace t = symmetric_trace(n, a);
            const Int s = *t.half_length;
            const auto all = enumerate_identities(t);  // throws on any mismatch
            ASSERT_EQ(static_cast<Int>(all.size()), (s + 1) * (s + 2));
            for (const auto& id : all) {
                ASSERT_EQ(id.lhs(), static_cast<__int128>(n) * id.multiplier);
                if (id.family == Family::minus && id.i == s) {
                    ASSERT_EQ(id.multiplier, 0);
                    ASSERT_TRUE(id.degenerate);
                }
                if (id.j == id.i) ASSERT_TRUE(id.degenerate);
            }
            for (Int i = 0; i <= s; ++i) {
                const Int x = t.remainder(i + 1), y = t.remainder(2 * s + 2 - i);
                ASSERT_EQ((x * x + y * y) % n, 0);
            }
            for (const auto& row : explicit_remainders(t)) ASSERT_TRUE(row.holds()) << n << " " << a;
        }
}

TEST(CorollaryStep, Examples) {
    EXPECT_EQ(corollary_step(829, 246), (CorollaryStep{73, 27}));
    EXPECT_EQ(corollary_step(73, 27), (CorollaryStep{10, 7}));
    EXPECT_EQ(corollary_step(10, 7), (CorollaryStep{5, 2}));
    EXPECT_EQ(corollary_step(5, 2), (CorollaryStep{1, 0}));
    try {
        corollary_step(7, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::domain);
    }
}

TEST(NestChain, Examples) {
    const NestChain chain = nest_chain(829, 246);
    EXPECT_EQ(chain.entries,
              (std::vector<ReducedFraction>{{829, 246}, {73, 27}, {10, 7}, {5, 2}}));
    EXPECT_EQ(chain.multipliers, (std::vector<Int>{73, 10, 5}));

    EXPECT_EQ(nest_chain(5, 2).entries, (std::vector<ReducedFraction>{{5, 2}}));
    EXPECT_EQ(nest_chain(2, 1).entries, (std::vector<ReducedFraction>{{2, 1}}));
    EXPECT_TRUE(nest_chain(2, 1).multipliers.empty());
}

TEST(NestChain, MatchesDirectPalindromeEvaluation) {
    for (Int n = 2; n <= 2000; ++n)
        for (Int a : sqrt_minus_one_all(n)) {
            const EuclidTrace t = symmetric_trace(n, a);
            const QuotientSequence half = t.half_quotients();
            const Int s = half.length();
            const NestChain chain = nest_chain(n, a);
            ASSERT_EQ(static_cast<Int>(chain.entries.size()), s);
            for (Int k = 1; k <= s; ++k)
                ASSERT_EQ(chain.entries[static_cast<std::size_t>(k - 1)], cf_eval(palindrome(half.slice(k, s))));
            // a^2 + 1 = n * (plus multiplier at i = 1, j = 0)
            ASSERT_EQ(a * a + 1, n * form_identity(t, 1, 0, Family::plus).multiplier);
        }
}

}  // namespace
}  // namespace symeuclid
