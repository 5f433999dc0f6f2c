#include "brieskorn/classifier.hpp"
#include "brieskorn/contact.hpp"
#include "brieskorn/full_path.hpp"
#include "brieskorn/plumbing.hpp"
#include "brieskorn/seifert.hpp"

#include <benchmark/benchmark.h>

using namespace brieskorn;

namespace {

PlumbingGraph graph_of(std::vector<std::int64_t> e) { return standard_graph(from_brieskorn(BrieskornIndex(std::move(e)))); }

void BM_Inverse(benchmark::State& state) {
    const auto g = graph_of({2, 3, static_cast<std::int64_t>(state.range(0))});
    for (auto _ : state) benchmark::DoNotOptimize(exact_inverse(intersection_matrix(g)));
}
BENCHMARK(BM_Inverse)->Arg(11)->Arg(29)->Arg(59);

void BM_CanonicalD3(benchmark::State& state) {
    const auto g = graph_of({2, 3, 7, 41});
    const auto v = canonical_vector(g);
    for (auto _ : state) benchmark::DoNotOptimize(d3(g, v));
}
BENCHMARK(BM_CanonicalD3);

void BM_FullPath(benchmark::State& state) {
    const auto g = graph_of({3, 7, 19});
    std::vector<std::int64_t> k;
    for (auto m : g.framings()) k.push_back(-m);
    const CharVector start(k);
    for (auto _ : state) benchmark::DoNotOptimize(full_path(g, start));
}
BENCHMARK(BM_FullPath);

void BM_CorrectionTerm(benchmark::State& state) {
    const auto g = graph_of({2, 3, static_cast<std::int64_t>(state.range(0))});
    for (auto _ : state) benchmark::DoNotOptimize(correction_term(g, kDefaultBudget, {}, 1));
}
BENCHMARK(BM_CorrectionTerm)->Arg(7)->Arg(11)->Arg(17)->Unit(benchmark::kMillisecond);

void BM_Search(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(search_two_fillable(state.range(0)));
}
BENCHMARK(BM_Search)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
