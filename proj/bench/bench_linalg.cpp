// Serial vs parallel exact elimination on dense rational matrices whose
// entries have growing numerators, the shape produced by lattice
// membership systems.
#include <benchmark/benchmark.h>

#include <random>

#include "trigonal/linalg.hpp"

namespace {

trig::QMat random_matrix(int rows, int cols, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 12);
    trig::QMat M(static_cast<size_t>(rows));
    for (auto& row : M) {
        row.resize(static_cast<size_t>(cols));
        for (auto& e : row) e = trig::rat(num(rng), den(rng));
    }
    return M;
}

void run_rank(benchmark::State& state, trig::ElimMode mode) {
    const int n = static_cast<int>(state.range(0));
    trig::QMat M = random_matrix(n, n + n / 2, 20853);
    for (auto _ : state) {
        int r = trig::rank(M, mode);
        benchmark::DoNotOptimize(r);
    }
}

void BM_RankSerial(benchmark::State& state) {
    run_rank(state, trig::ElimMode::Serial);
}

void BM_RankParallel(benchmark::State& state) {
    run_rank(state, trig::ElimMode::Parallel);
}

BENCHMARK(BM_RankSerial)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankParallel)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
