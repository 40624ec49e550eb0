#include "klr/blocks.hpp"
#include "klr/fock.hpp"
#include "klr/qdim.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace klr;

static void BM_standard_tableaux(benchmark::State& state) {
    const Partition la({4, 3, 2, 1});
    for (auto _ : state) {
        long long count = 0;
        for_each_standard_tableau(la, [&](const StandardTableau&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_standard_tableaux);

static void BM_kq_by_sequence(benchmark::State& state) {
    const Charge ch{1, 2};
    const Partition la({3, 3, 1, 1});
    for (auto _ : state) benchmark::DoNotOptimize(kq_by_sequence(ch, la));
}
BENCHMARK(BM_kq_by_sequence);

static void BM_graded_dim_block(benchmark::State& state) {
    const CartanDatum dd(2);
    const Charge ch{1, 2};
    const RootVector beta = 2 * delta(dd);
    for (auto _ : state) benchmark::DoNotOptimize(graded_dim_block(ch, beta));
}
BENCHMARK(BM_graded_dim_block);

// the largest single slot computed by the reference tables: 24 boxes
static void BM_witness_slot(benchmark::State& state) {
    const CartanDatum dd(8);
    const Charge ch{4, 8};
    const auto [e1, e2] = xi4_block_witness(dd, 4, Sign::minus);
    const RootVector beta = 2 * delta(dd) - xi(dd, 4, Sign::minus, 4);
    for (auto _ : state) benchmark::DoNotOptimize(graded_dim(ch, beta, e1, e2));
}
BENCHMARK(BM_witness_slot);

static void BM_crystal(benchmark::State& state) {
    const Charge ch{0, 3};
    for (auto _ : state)
        benchmark::DoNotOptimize(crystal(ch, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_crystal)->Arg(6)->Arg(9);

static void BM_classify_twisted(benchmark::State& state) {
    const CartanDatum dd(4);
    Weight w{0, 2 * delta(dd) - xi(dd, 0, Sign::plus, 4)};
    std::mt19937 rng(7);
    for (int t = 0; t < 30; ++t) w = reflect(dd, static_cast<int>(rng() % 5), w);
    for (auto _ : state) benchmark::DoNotOptimize(classify(dd, 0, w.beta));
}
BENCHMARK(BM_classify_twisted);

BENCHMARK_MAIN();
