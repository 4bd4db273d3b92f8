#include <benchmark/benchmark.h>

#include "betarith/reproduce.hpp"

using namespace betarith;

namespace {

const CubicPisotUnit& unit_5_5() {
    static const CubicPisotUnit u = classify_or_throw({-5, -5, -1});
    return u;
}

const CubicPisotUnit& unit_8_7() {
    static const CubicPisotUnit u = classify_or_throw({-8, -7, 1});
    return u;
}

}  // namespace

static void BM_Classify(benchmark::State& state) {
    for (auto _ : state) {
        auto v = classify({-9, 8, -1});
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_Classify);

static void BM_GreedyExpansion(benchmark::State& state) {
    const CubicPisotUnit& u = unit_5_5();
    const ZBeta x = value_of(DigitString::parse("5 0 5 0 5 0 5"), u) + value_of(DigitString::parse("5 0 5 0 5 0 5"), u);
    for (auto _ : state) {
        auto o = greedy_expansion(u, x);
        benchmark::DoNotOptimize(o);
    }
}
BENCHMARK(BM_GreedyExpansion);

static void BM_OpBetaMul(benchmark::State& state) {
    const CubicPisotUnit& u = unit_8_7();
    const DigitString x = DigitString::parse("7 1 0 7");
    const DigitString y = DigitString::parse("8 0 6");
    for (auto _ : state) {
        auto r = op_beta(x, y, Op::Mul, u);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_OpBetaMul);

static void BM_BruteForceAdd(benchmark::State& state) {
    const CubicPisotUnit u = classify_or_throw({-3, -1, 1});
    for (auto _ : state) {
        auto r = brute_force_L(u, Op::Add, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_BruteForceAdd)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_HKRefined(benchmark::State& state) {
    const CubicPisotUnit& u = unit_8_7();
    for (auto _ : state) {
        auto r = hk_upper(u, Op::Mul, HMode::AutomatonRefined);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_HKRefined)->Unit(benchmark::kMicrosecond);

static void BM_MinNormLevel(benchmark::State& state) {
    const CubicPisotUnit& u = unit_5_5();
    for (auto _ : state) {
        auto r = min_norm_at_level(u, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_MinNormLevel)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_Table6(benchmark::State& state) {
    for (auto _ : state) {
        auto t = reproduce_table(6);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_Table6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
