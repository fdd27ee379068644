#include <benchmark/benchmark.h>

#include "finsler/certificate.hpp"
#include "finsler/dsl.hpp"
#include "finsler/ellipsoid_opt.hpp"
#include "finsler/indicatrix.hpp"

using namespace finsler;

namespace {

Vector vec2(double a, double b) {
    Vector v(2);
    v << a, b;
    return v;
}

const FinslerNorm& randers_norm() {
    static const FinslerNorm norm =
        FinslerNorm::randers(Matrix::Identity(2, 2), vec2(0.5, 0.0));
    return norm;
}

const FinslerNorm& dsl_norm() {
    static const FinslerNorm norm =
        dsl::to_norm(dsl::parse("sqrt(y1^2 + y2^2) + 0.5*y1", 2));
    return norm;
}

void BM_RandersEval(benchmark::State& state) {
    const Vector y = vec2(0.3, 1.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(randers_norm().eval(y));
    }
}
BENCHMARK(BM_RandersEval);

void BM_RandersJet(benchmark::State& state) {
    const Vector y = vec2(0.3, 1.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(randers_norm().jet(y));
    }
}
BENCHMARK(BM_RandersJet);

void BM_DslJet(benchmark::State& state) {
    const Vector y = vec2(0.3, 1.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dsl_norm().jet(y));
    }
}
BENCHMARK(BM_DslJet);

void BM_FundamentalTensor(benchmark::State& state) {
    const Vector y = vec2(0.3, 1.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fundamental_tensor(randers_norm(), y));
    }
}
BENCHMARK(BM_FundamentalTensor);

void BM_FdTensor(benchmark::State& state) {
    const Vector y = vec2(0.3, 1.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fd_fundamental_tensor(randers_norm(), y, 1e-5));
    }
}
BENCHMARK(BM_FdTensor);

void BM_MaxFOnEllipsoid(benchmark::State& state) {
    const Ellipsoid e = osculating_ellipsoid(randers_norm(), vec2(0.0, 1.0));
    const int restarts = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(max_F_on_ellipsoid(randers_norm(), e, restarts));
    }
}
BENCHMARK(BM_MaxFOnEllipsoid)->Arg(4)->Arg(16);

void BM_Certify(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(certify(randers_norm(), vec2(0.0, 1.0), vec2(1.0, 0.0)));
    }
}
BENCHMARK(BM_Certify);

void BM_SampleIndicatrix(benchmark::State& state) {
    const int resolution = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_indicatrix(randers_norm(), resolution));
    }
}
BENCHMARK(BM_SampleIndicatrix)->Arg(90)->Arg(360);

}  // namespace

BENCHMARK_MAIN();
