// OpenMP kernels against their serial references.

#include "dispkit/kernels.hpp"
#include "dispkit/structured.hpp"
#include "dispkit/suite.hpp"

#include <benchmark/benchmark.h>

using namespace dispkit;

namespace {

void BM_matmul_real(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    const auto a = random_uniform(rng, n, n), b = random_uniform(rng, n, n);
    for (auto _ : state)
        benchmark::DoNotOptimize(matmul(a, b));
}

void BM_matmul_real_serial(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    const auto a = random_uniform(rng, n, n), b = random_uniform(rng, n, n);
    for (auto _ : state)
        benchmark::DoNotOptimize(matmul_serial(a, b));
}

void BM_matmul_rational(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(2);
    const auto a = random_dense(rng, n, n), b = random_dense(rng, n, n);
    for (auto _ : state)
        benchmark::DoNotOptimize(matmul(a, b));
}

void BM_matmul_rational_serial(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(2);
    const auto a = random_dense(rng, n, n), b = random_dense(rng, n, n);
    for (auto _ : state)
        benchmark::DoNotOptimize(matmul_serial(a, b));
}

SuiteOptions suite_options(const benchmark::State& state)
{
    SuiteOptions o;
    o.trials = static_cast<std::size_t>(state.range(0));
    o.seed = 3;
    return o;
}

void BM_suite(benchmark::State& state)
{
    const auto o = suite_options(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(run_suite("pinv-psym", o));
}

void BM_suite_serial(benchmark::State& state)
{
    const auto o = suite_options(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(run_suite_serial("pinv-psym", o));
}

} // namespace

BENCHMARK(BM_matmul_real)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_matmul_real_serial)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_matmul_rational)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_matmul_rational_serial)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_suite)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_suite_serial)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
