#include <benchmark/benchmark.h>

#include "corepath/bijection.hpp"
#include "corepath/core_maps.hpp"
#include "corepath/counting.hpp"

using namespace corepath;

namespace {

const PathWord kFreeWord = PathWord::parse("fduduufudfdduufudfdffdfufuddfuf");
const PathWord kPrefixWord = PathWord::parse("fufuuddfdufufudffduddfufudfduuf");

void BM_Phi(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(phi(kFreeWord));
}
BENCHMARK(BM_Phi);

void BM_Psi(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(psi(kPrefixWord));
}
BENCHMARK(BM_Psi);

void BM_OrdinaryCount(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(cc(11, m));
}
BENCHMARK(BM_OrdinaryCount)->Arg(8)->Arg(64);

void BM_SelfConjugateCount(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(scc(11, m));
}
BENCHMARK(BM_SelfConjugateCount)->Arg(8)->Arg(64);

void BM_CountFamily(benchmark::State& state) {
    FamilySpec spec{Family::FreeMotzkinTight, static_cast<int>(state.range(0)), 2, 4};
    for (auto _ : state)
        benchmark::DoNotOptimize(count_family(spec));
}
BENCHMARK(BM_CountFamily)->Arg(8)->Arg(12);

void BM_EnumerateFamily(benchmark::State& state) {
    FamilySpec spec{Family::CornerlessMotzkin, 8, 3, 0};
    for (auto _ : state) {
        long long seen = 0;
        enumerate_family(spec, [&](const PathWord&) {
            ++seen;
            return true;
        });
        benchmark::DoNotOptimize(seen);
    }
}
BENCHMARK(BM_EnumerateFamily);

void BM_ConvertChain(benchmark::State& state) {
    Partition p = Partition::parse("7,7,4,4,2,2,2");
    for (auto _ : state)
        benchmark::DoNotOptimize(convert_partition(p, 5, true));
}
BENCHMARK(BM_ConvertChain);

} // namespace

BENCHMARK_MAIN();
