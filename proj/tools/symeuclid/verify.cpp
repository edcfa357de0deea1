#include "verify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <sstream>

#include "symeuclid/continuants.hpp"
#include "symeuclid/euclid.hpp"
#include "symeuclid/identities.hpp"
#include "symeuclid/oracle.hpp"
#include "symeuclid/two_squares.hpp"

namespace symeuclid::verify {

namespace {

/// Named tallies in a fixed order so output is stable.
class Suite {
public:
    PropertyResult& operator[](const std::string& name) {
        auto it = index_.find(name);
        if (it != index_.end()) return results_[it->second];
        index_.emplace(name, results_.size());
        results_.push_back({name, 0, std::nullopt});
        return results_.back();
    }

    /// Counts one instance; the first failure (false or a thrown Error) is kept.
    template <class Check, class Describe>
    void check(const std::string& name, Check&& holds, Describe&& describe) {
        check((*this)[name], std::forward<Check>(holds), std::forward<Describe>(describe));
    }

    template <class Check, class Describe>
    void check(PropertyResult& result, Check&& holds, Describe&& describe) {
        ++result.checked;
        if (result.reproducer) return;
        try {
            if (!holds()) result.reproducer = describe();
        } catch (const Error& e) {
            result.reproducer = describe() + " [" + std::string(to_string(e.code())) + ": " + e.what() + "]";
        }
    }

    std::vector<PropertyResult> take() { return {results_.begin(), results_.end()}; }

private:
    std::map<std::string, std::size_t> index_;
    std::deque<PropertyResult> results_;  // stable references for hot loops
};

/// Uniform draw on [lo, hi] from raw engine output so sequences are identical
/// across standard library implementations.
Int draw(std::mt19937_64& rng, Int lo, Int hi) {
    return lo + static_cast<Int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

QuotientSequence random_sequence(std::mt19937_64& rng, Int max_length, Int max_term = 9) {
    std::vector<Int> terms(static_cast<std::size_t>(draw(rng, 0, max_length)));
    for (Int& u : terms) u = draw(rng, 1, max_term);
    return QuotientSequence(std::move(terms));
}

std::string seq_text(const QuotientSequence& seq) { return "seq=" + seq.to_string(); }

std::string pair_text(Int n, Int a) {
    return "n=" + std::to_string(n) + " a=" + std::to_string(a);
}

bool same_or_both_overflow(const QuotientSequence& seq) {
    auto outcome = [](auto&& fn) -> std::optional<ReducedFraction> {
        try {
            return fn();
        } catch (const Error& e) {
            if (e.code() != ErrorCode::overflow) throw;
            return std::nullopt;
        }
    };
    auto main_route = outcome([&] { return cf_eval(seq); });
    auto fold_route = outcome([&] { return oracle::cf_eval_fold(seq); });
    return main_route == fold_route;
}

void fuzz_continuants(Suite& suite, std::mt19937_64& rng, Int cases) {
    for (Int c = 0; c < cases; ++c) {
        const QuotientSequence seq = random_sequence(rng, 10);
        const Int t = seq.length();
        for (Int i = 1; i <= t; ++i)
            for (Int j = i; j <= t; ++j)
                suite.check("continuant_vs_determinant",
                            [&] { return continuant(seq, i, j) == oracle::det_continuant(seq, i, j); },
                            [&] { return seq_text(seq) + " i=" + std::to_string(i) + " j=" + std::to_string(j); });
        suite.check("continuant_boundaries",
                    [&] {
                        for (Int j = 0; j <= t; ++j)
                            if (continuant(seq, j + 1, j) != 1) return false;
                        for (Int j = -1; j <= t; ++j)
                            if (continuant(seq, j + 2, j) != 0) return false;
                        return true;
                    },
                    [&] { return seq_text(seq); });
        suite.check("table_vs_continuant",
                    [&] {
                        const ContinuantTable table(seq);
                        for (Int j = -1; j <= t; ++j)
                            if (table.prefix(j) != continuant(seq, 1, j)) return false;
                        for (Int i = 1; i <= t + 2; ++i)
                            if (table.suffix(i) != continuant(seq, i, t)) return false;
                        for (Int i = 1; i <= t + 1 && t >= 1; ++i)
                            if (table.suffix_trimmed(i) != continuant(seq, i, t - 1)) return false;
                        return true;
                    },
                    [&] { return seq_text(seq); });
    }
}

void fuzz_euler(Suite& suite, std::mt19937_64& rng, Int cases) {
    for (Int c = 0; c < cases; ++c) {
        const QuotientSequence seq = random_sequence(rng, 12);
        const Int t = seq.length();
        auto cc = [&](Int a, Int b) { return continuant(seq, a, b); };

        const Int s = draw(rng, -1, t);
        const Int m = draw(rng, -1, s);
        const Int l = draw(rng, 1, m + 2);
        const Int i = draw(rng, 1, l);
        suite.check("euler_identity", [&] { return euler_identity_holds(seq, i, l, m, s); },
                    [&] {
                        std::ostringstream os;
                        os << seq_text(seq) << " (i,l,m,s)=(" << i << "," << l << "," << m << "," << s << ")";
                        return os.str();
                    });

        if (t < 1) continue;
        // first-row case: i = 1, m = s - 1
        {
            const Int s1 = draw(rng, 0, t);
            const Int l1 = draw(rng, 1, s1 + 1);
            suite.check("euler_case_first_row",
                        [&] {
                            Int d = checked::sub(checked::mul(cc(1, s1), cc(l1, s1 - 1)),
                                                 checked::mul(cc(1, s1 - 1), cc(l1, s1)));
                            return cc(1, l1 - 2) == ((l1 + s1) % 2 == 0 ? d : -d);
                        },
                        [&] { return seq_text(seq) + " l=" + std::to_string(l1) + " s=" + std::to_string(s1); });
        }
        // split case: l = m + 1, i <= m + 1 <= s
        {
            const Int s2 = draw(rng, 1, t);
            const Int m2 = draw(rng, 0, s2 - 1);
            const Int i2 = draw(rng, 1, m2 + 1);
            suite.check("euler_case_split",
                        [&] {
                            return cc(i2, s2) == checked::add(checked::mul(cc(i2, m2), cc(m2 + 1, s2)),
                                                              checked::mul(cc(i2, m2 - 1), cc(m2 + 2, s2)));
                        },
                        [&] {
                            return seq_text(seq) + " i=" + std::to_string(i2) + " m=" + std::to_string(m2) +
                                   " s=" + std::to_string(s2);
                        });
        }
        // front and back recurrences; 1 <= i <= s <= t
        {
            const Int s3 = draw(rng, 1, t);
            const Int i3 = draw(rng, 1, s3);
            auto where = [&] { return seq_text(seq) + " i=" + std::to_string(i3) + " s=" + std::to_string(s3); };
            suite.check("euler_case_front",
                        [&] { return cc(i3, s3) == checked::mul_add(seq.term(i3), cc(i3 + 1, s3), cc(i3 + 2, s3)); },
                        where);
            suite.check("euler_case_back",
                        [&] { return cc(i3, s3) == checked::mul_add(seq.term(s3), cc(i3, s3 - 1), cc(i3, s3 - 2)); },
                        where);
        }
    }
}

void fuzz_fractions(Suite& suite, std::mt19937_64& rng, Int cases) {
    for (Int c = 0; c < cases; ++c) {
        const QuotientSequence seq = random_sequence(rng, 20);
        suite.check("cf_eval_vs_fold", [&] { return same_or_both_overflow(seq); }, [&] { return seq_text(seq); });
        suite.check("cf_reverse_numerator",
                    [&] {
                        try {
                            return cf_eval(seq).numerator == cf_eval(reverse(seq)).numerator;
                        } catch (const Error& e) {
                            if (e.code() == ErrorCode::overflow) return true;
                            throw;
                        }
                    },
                    [&] { return seq_text(seq); });
        suite.check("cf_eval_reduced",
                    [&] {
                        try {
                            const ReducedFraction f = cf_eval(seq);
                            return gcd(f.numerator, f.denominator) == 1 && f.numerator >= f.denominator &&
                                   f.denominator >= 1;
                        } catch (const Error& e) {
                            if (e.code() == ErrorCode::overflow) return true;
                            throw;
                        }
                    },
                    [&] { return seq_text(seq); });
    }
}

bool division_identity(const EuclidTrace& trace) {
    for (Int k = 1; k <= static_cast<Int>(trace.quotients.size()); ++k)
        if (trace.remainder(k) != trace.quotient(k) * trace.remainder(k + 1) + trace.remainder(k + 2)) return false;
    return trace.remainders.back() == 0;
}

void sweep_pairs(Suite& suite, Int max_n) {
    PropertyResult& division = suite["division_identity"];
    PropertyResult& exclusive = suite["standard_split_exclusive"];
    PropertyResult& perron = suite["perron_criterion"];
    for (Int n = 2; n <= max_n; ++n) {
        for (Int a = 1; a < n; ++a) {
            if (gcd(n, a) != 1) continue;
            auto where = [&] { return pair_text(n, a); };
            const EuclidTrace standard = euclid_trace(n, a);
            std::optional<EuclidTrace> split;
            if (standard.quotients.back() >= 2) split = apply_convention(standard);

            suite.check(division, [&] { return division_identity(standard) && (!split || division_identity(*split)); },
                        where);
            suite.check(exclusive,
                        [&] { return !(is_even_palindrome(standard.quotients) && split && is_even_palindrome(split->quotients)); },
                        where);
            suite.check(perron, [&] { return try_symmetric_trace(n, a).has_value() == is_sqrt_minus_one(n, a); }, where);
        }
    }
}

void sweep_symmetric(Suite& suite, Int max_n) {
    for (Int n = 2; n <= max_n; ++n) {
        const std::vector<Int> roots = sqrt_minus_one_all(n, max_n);
        suite.check("sqrt_closure",
                    [&] {
                        for (Int a : roots)
                            if (!std::binary_search(roots.begin(), roots.end(), n - a)) return false;
                        return true;
                    },
                    [&] { return "n=" + std::to_string(n); });
        suite.check("representations_vs_oracle",
                    [&] {
                        auto reps = all_primitive_representations(n, max_n);
                        return reps == oracle::brute_two_squares(n) &&
                               reps.size() == (roots.size() + 1) / 2;
                    },
                    [&] { return "n=" + std::to_string(n); });

        for (Int a : roots) {
            auto where = [&] { return pair_text(n, a); };
            const EuclidTrace trace = symmetric_trace(n, a);
            const QuotientSequence half = trace.half_quotients();
            const Int s = half.length();

            suite.check("remainder_tail",
                        [&] {
                            for (Int k = -1; k <= s; ++k)
                                if (trace.remainder(trace.remainder_count() - 1 - k) != continuant(half, 1, k)) return false;
                            return true;
                        },
                        where);
            suite.check("brillhart_valid",
                        [&] {
                            const TwoSquares r = brillhart(n, a);
                            return r.x * r.x + r.y * r.y == n && gcd(r.x, r.y) == 1 && r.y >= 1 &&
                                   (r.x > r.y || n == 2);
                        },
                        where);
            suite.check("brillhart_pair_collapse", [&] { return brillhart(n, a) == brillhart(n, n - a); }, where);
            suite.check("brillhart_vs_full_trace",
                        [&] {
                            const TwoSquares r = brillhart(n, a);
                            return r.x == trace.remainder(s + 1) && r.y == trace.remainder(s + 2);
                        },
                        where);
            suite.check("remainder_formulas",
                        [&] {
                            const auto rows = explicit_remainders(trace);
                            return static_cast<Int>(rows.size()) == s + 1 &&
                                   std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.holds(); });
                        },
                        where);

            std::vector<FormIdentity> ids;
            suite.check("form_identities",
                        [&] {
                            ids = enumerate_identities(trace);
                            if (static_cast<Int>(ids.size()) != (s + 1) * (s + 2)) return false;
                            return std::all_of(ids.begin(), ids.end(),
                                               [&](const FormIdentity& id) { return id.lhs() == static_cast<__int128>(n) * id.multiplier; });
                        },
                        where);
            suite.check("minus_corner",
                        [&] {
                            for (Int j = 0; j <= s; ++j) {
                                const FormIdentity id = form_identity(trace, s, j, Family::minus);
                                if (id.multiplier != 0 || id.lhs() != 0 || !id.degenerate) return false;
                            }
                            return true;
                        },
                        where);
            suite.check("wagon_pairs",
                        [&] {
                            for (Int i = 0; i <= s; ++i) {
                                const __int128 r1 = trace.remainder(i + 1);
                                const __int128 r2 = trace.remainder(2 * s + 2 - i);
                                if ((r1 * r1 + r2 * r2) % n != 0) return false;
                            }
                            return true;
                        },
                        where);
            suite.check("corollary_multiplier",
                        [&] {
                            const FormIdentity id = form_identity(trace, 1, 0, Family::plus);
                            const CorollaryStep step = corollary_step(n, a);
                            return static_cast<__int128>(a) * a + 1 == static_cast<__int128>(n) * id.multiplier &&
                                   step.multiplier == id.multiplier;
                        },
                        where);
            suite.check("nest_chain",
                        [&] {
                            const NestChain chain = nest_chain(n, a);
                            if (static_cast<Int>(chain.entries.size()) != s) return false;
                            if (chain.multipliers.size() + 1 != chain.entries.size()) return false;
                            for (Int k = 1; k <= s; ++k)
                                if (chain.entries[static_cast<std::size_t>(k - 1)] != cf_eval(palindrome(half.slice(k, s))))
                                    return false;
                            return true;
                        },
                        where);
        }
    }
}

}  // namespace

Report run_all(const Options& options) {
    Suite suite;
    std::mt19937_64 rng(options.seed);
    fuzz_continuants(suite, rng, options.cases);
    fuzz_euler(suite, rng, options.cases);
    fuzz_fractions(suite, rng, options.cases);
    sweep_pairs(suite, options.max_n);
    sweep_symmetric(suite, options.max_n);
    return Report{suite.take()};
}

}  // namespace symeuclid::verify
