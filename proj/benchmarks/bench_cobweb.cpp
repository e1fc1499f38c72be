#include <benchmark/benchmark.h>

#include "cobweb/charpoly.hpp"
#include "cobweb/oracle.hpp"
#include "cobweb/poset.hpp"
#include "cobweb/sequence.hpp"
#include "cobweb/verify.hpp"

namespace {

static void BM_MobiusTableAggregated(benchmark::State& state) {
    const auto spec = cobweb::parse_sequence("const:4");
    const cobweb::CobwebPoset poset(spec, static_cast<std::size_t>(state.range(0)));
    const cobweb::OracleLimits limits{1'000'000'000, 0};  // aggregation only
    for (auto _ : state) {
        auto table = cobweb::mobius_table_bruteforce(poset, limits);
        benchmark::DoNotOptimize(table);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MobiusTableAggregated)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

static void BM_MobiusPerVertex(benchmark::State& state) {
    const auto spec = cobweb::parse_sequence("const:4");
    const cobweb::CobwebPoset poset(spec, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto mu = cobweb::mobius_per_vertex(poset);
        benchmark::DoNotOptimize(mu);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MobiusPerVertex)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_CharpolyClosed(benchmark::State& state) {
    const auto spec = cobweb::parse_sequence("const:7");
    for (auto _ : state) {
        auto chi = cobweb::charpoly_closed(spec, static_cast<std::size_t>(state.range(0)));
        benchmark::DoNotOptimize(chi);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CharpolyClosed)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void BM_CharpolyRecurrence(benchmark::State& state) {
    const auto spec = cobweb::parse_sequence("const:7");
    for (auto _ : state) {
        auto chi = cobweb::charpoly_recurrence(spec, static_cast<std::size_t>(state.range(0)));
        benchmark::DoNotOptimize(chi);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CharpolyRecurrence)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void BM_VerifyThreeWay(benchmark::State& state) {
    const auto spec = cobweb::parse_sequence("odd");
    for (auto _ : state) {
        auto report = cobweb::verify(spec, static_cast<std::size_t>(state.range(0)));
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_VerifyThreeWay)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
