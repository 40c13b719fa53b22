#include <benchmark/benchmark.h>

#include "fracsum/constants.hpp"
#include "fracsum/summatory.hpp"

using namespace fracsum;

namespace {

const SieveTable& sieve() {
    static SieveTable s = build_sieve(2000000);
    return s;
}

void BM_DivisorSummatory(benchmark::State& state) {
    const u64 t = static_cast<u64>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(divisor_summatory(t));
}

void BM_Tau3Summatory(benchmark::State& state) {
    const u64 t = static_cast<u64>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tau3_summatory(t));
}

void BM_TwoOmegaSummatory(benchmark::State& state) {
    const u64 y = static_cast<u64>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(two_omega_summatory(y, sieve()));
}

void BM_FracsumBlocked(benchmark::State& state) {
    const u64 x = static_cast<u64>(state.range(0));
    SumQuery q{func_by_name("tau", &sieve()), 2, 1, x, {}, {}, {}};
    for (auto _ : state) benchmark::DoNotOptimize(fracsum::fracsum(q, Method::blocked, sieve()).approx);
}

void BM_FracsumStarBlocked(benchmark::State& state) {
    const u64 x = static_cast<u64>(state.range(0));
    SumQuery q{func_by_name("one", &sieve()), 2, 1, x, {}, {}, {}};
    for (auto _ : state)
        benchmark::DoNotOptimize(fracsum_star(q, Method::blocked, sieve()).approx);
}

void BM_SieveBuild(benchmark::State& state) {
    const u64 limit = static_cast<u64>(state.range(0));
    for (auto _ : state) {
        SieveTable s = build_sieve(limit);
        benchmark::DoNotOptimize(s.limit());
    }
}

BENCHMARK(BM_DivisorSummatory)->Arg(1000000)->Arg(100000000);
BENCHMARK(BM_Tau3Summatory)->Arg(100000)->Arg(10000000);
BENCHMARK(BM_TwoOmegaSummatory)->Arg(100000)->Arg(1000000);
BENCHMARK(BM_FracsumBlocked)->Arg(1000000)->Arg(10000000);
BENCHMARK(BM_FracsumStarBlocked)->Arg(1000000)->Arg(100000000);
BENCHMARK(BM_SieveBuild)->Arg(1000000);

} // namespace

BENCHMARK_MAIN();
