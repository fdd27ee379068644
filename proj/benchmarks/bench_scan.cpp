#include <benchmark/benchmark.h>

#include "finsler/scan.hpp"

using namespace finsler;

namespace {

void BM_Scan(benchmark::State& state) {
    Vector b(2);
    b << 0.5, 0.0;
    const FinslerNorm norm = FinslerNorm::randers(Matrix::Identity(2, 2), b);
    const int resolution = static_cast<int>(state.range(0));
    const int restarts = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan(norm, resolution, restarts));
    }
}
BENCHMARK(BM_Scan)
    ->Args({90, 4})
    ->Args({90, 16})
    ->Args({360, 16})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
