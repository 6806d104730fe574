// Serial reference vs OpenMP kernels for the two prime searches.
//
//   ./build/bench/skolem_bench --benchmark_filter=Density
//   OMP_NUM_THREADS=8 ./build/bench/skolem_bench

#include <benchmark/benchmark.h>

#include "skolem/certifier.hpp"
#include "skolem/density.hpp"

namespace {

using namespace skolem;

SearchPlan plan_for(const RatioPair& pair, std::uint64_t bound) {
    const SupportSet t = support_set(pair);
    return build_plan(std::get<Case3>(classify(pair, t)), pair, t, bound);
}

// u_{n+2} = -17/45 u_{n+1} + 23/20 u_n, u0 = -10/7, u1 = -6/11: the accepted
// prime is 60370571, well past the default bound.
SearchPlan wide_plan() {
    const ValidatedRecurrence rec =
        validate({Rat::parse("-17/45"), Rat::parse("23/20"), Rat::parse("-10/7"), Rat::parse("-6/11"), std::nullopt});
    const RatioPair pair = ratio_pair(rec.closed);
    const SupportSet t = support_set(rec);
    return build_plan(std::get<Case3>(classify(pair, t)), pair, t, 100'000'000);
}

SearchPlan instance_one_plan() { return plan_for({Rat(3), Rat(2)}, default_search_bound); }

void BM_Search(benchmark::State& state, Execution exec) {
    const SearchPlan plan = wide_plan();
    for (auto _ : state) {
        benchmark::DoNotOptimize(search_certificate_prime(plan, exec));
    }
}

void BM_Density(benchmark::State& state, Execution exec) {
    const SearchPlan plan = instance_one_plan();
    const auto max = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(density_count(plan, max, exec));
    }
}

void BM_Fallback(benchmark::State& state, Execution exec) {
    // u_n = 2^n + 3^n: the first zero-free prime is 19.
    const ValidatedRecurrence rec = validate({Rat(5), Rat(-6), Rat(2), Rat(5), std::nullopt});
    for (auto _ : state) {
        benchmark::DoNotOptimize(fallback_scan(rec, 1000, exec));
    }
}

}  // namespace

BENCHMARK_CAPTURE(BM_Search, serial, Execution::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Search, parallel, Execution::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Density, serial, Execution::serial)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Density, parallel, Execution::parallel)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Fallback, serial, Execution::serial);
BENCHMARK_CAPTURE(BM_Fallback, parallel, Execution::parallel);

BENCHMARK_MAIN();
