// Early-termination two-squares extraction against the full symmetric trace,
// plus the heavier identity enumeration.
#include <benchmark/benchmark.h>

#include "symeuclid/continuants.hpp"
#include "symeuclid/euclid.hpp"
#include "symeuclid/identities.hpp"
#include "symeuclid/two_squares.hpp"

namespace {

using symeuclid::Int;

// (n, a) pairs with a^2 = -1 mod n and growing trace lengths.
struct Case {
    Int n;
    Int a;
};
constexpr Case cases[] = {
    {829, 246},
    {1'000'000'009, 430'477'711},
    {4'611'686'018'427'387'817, 120'863'620'846'201'794},
};

Case resolved(std::size_t k) { return cases[k]; }

void BM_BrillhartEarlyExit(benchmark::State& state) {
    const Case c = resolved(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(symeuclid::brillhart(c.n, c.a));
}
BENCHMARK(BM_BrillhartEarlyExit)->DenseRange(0, 2);

void BM_FullSymmetricTrace(benchmark::State& state) {
    const Case c = resolved(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto t = symeuclid::symmetric_trace(c.n, c.a);
        benchmark::DoNotOptimize(t.remainders.data());
    }
}
BENCHMARK(BM_FullSymmetricTrace)->DenseRange(0, 2);

void BM_EnumerateIdentities(benchmark::State& state) {
    const Case c = resolved(static_cast<std::size_t>(state.range(0)));
    const auto trace = symeuclid::symmetric_trace(c.n, c.a);
    for (auto _ : state) {
        auto ids = symeuclid::enumerate_identities(trace);
        benchmark::DoNotOptimize(ids.data());
    }
}
BENCHMARK(BM_EnumerateIdentities)->DenseRange(0, 1);

void BM_ContinuantTable(benchmark::State& state) {
    const symeuclid::QuotientSequence seq(std::vector<Int>(static_cast<std::size_t>(state.range(0)), 1));
    for (auto _ : state) benchmark::DoNotOptimize(symeuclid::ContinuantTable(seq).prefix(seq.length()));
}
BENCHMARK(BM_ContinuantTable)->Arg(8)->Arg(32)->Arg(85);

}  // namespace
