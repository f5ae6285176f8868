#include <benchmark/benchmark.h>

#include <omp.h>

#include "ulink/census.hpp"
#include "ulink/oracle.hpp"
#include "ulink/skein.hpp"

using namespace ulink;

namespace {

const std::vector<CensusEntry>& census() {
    static const auto c = load_census(default_census_path());
    return c;
}

LinkDiagram sized(int c) {
    for (std::uint64_t s = 1;; ++s) {
        auto d = random_diagram(s, c);
        if (d.crossing_count() == c) return d;
    }
}

void BM_BracketSerial(benchmark::State& st) {
    auto d = sized(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(bracket_state_sum_serial(d));
    st.counters["c"] = d.crossing_count();
}

void BM_BracketParallel(benchmark::State& st) {
    auto d = sized(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(bracket_state_sum(d));
    st.counters["c"] = d.crossing_count();
    st.counters["threads"] = omp_get_max_threads();
}

void BM_CensusB1(benchmark::State& st) {
    for (auto _ : st)
        for (const auto& e : census()) benchmark::DoNotOptimize(invariant_b1(e.diagram));
}

void BM_CensusJones(benchmark::State& st) {
    for (auto _ : st)
        for (const auto& e : census()) benchmark::DoNotOptimize(jones(e.diagram));
}

void BM_CensusJonesParallel(benchmark::State& st) {
    const auto& c = census();
    const int n = static_cast<int>(c.size());
    for (auto _ : st) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) benchmark::DoNotOptimize(jones(c[i].diagram));
    }
}

}  // namespace

BENCHMARK(BM_BracketSerial)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BracketParallel)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CensusB1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusJones)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusJonesParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
