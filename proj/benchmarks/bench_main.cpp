#include <benchmark/benchmark.h>

#include "ssz/divisor.hpp"
#include "ssz/qseries.hpp"
#include "ssz/quat.hpp"
#include "ssz/ssloc.hpp"

namespace {

void BM_SupersingularPoly(benchmark::State& state) {
    const std::uint64_t p = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ssz::supersingular_poly(p));
    }
}
BENCHMARK(BM_SupersingularPoly)->Arg(83)->Arg(389)->Arg(997);

void BM_BuildLocus(benchmark::State& state) {
    const std::uint64_t p = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        ssz::SsLocus locus(p);
        benchmark::DoNotOptimize(locus.n());
    }
}
BENCHMARK(BM_BuildLocus)->Arg(83)->Arg(389)->Arg(997);

void BM_BrandtPair(benchmark::State& state) {
    const std::uint64_t p = static_cast<std::uint64_t>(state.range(0));
    ssz::SsLocus locus(p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ssz::brandt_prime(locus, 2));
        benchmark::DoNotOptimize(ssz::brandt_prime(locus, 3));
    }
}
BENCHMARK(BM_BrandtPair)->Arg(83)->Arg(389)->Arg(997);

void BM_AnalyzeE83(benchmark::State& state) {
    ssz::CurveQ e83("e83", 1, 1, 1, 1, 0, 83, 1);
    ssz::SsLocus locus(83);
    ssz::BrandtCache cache(locus);
    ssz::Eigenform v = ssz::extract_eigenform(cache, e83);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ssz::analyze(e83, locus, v));
    }
}
BENCHMARK(BM_AnalyzeE83);

}  // namespace

BENCHMARK_MAIN();
