// Compares the OpenMP kernels against their serial references.
#include <benchmark/benchmark.h>

#include "kmetric/families.hpp"
#include "kmetric/pair_profile.hpp"

using namespace kmetric;

namespace {

Graph bench_graph(int n) {
    // tree plus chords: sparse but far from a path
    Graph t = random_tree(n, 1234);
    auto edges = t.edges();
    SplitMix64 rng(99);
    for (int i = 0; i < n / 2; ++i) {
        int u = static_cast<int>(rng.below(n));
        int v = static_cast<int>(rng.below(n));
        if (u != v && !t.has_edge(u, v) && !t.has_edge(v, u)) {
            edges.emplace_back(std::min(u, v), std::max(u, v));
            t = Graph::from_edges(n, edges);
        }
    }
    return t;
}

void BM_all_pairs_serial(benchmark::State& state) {
    Graph g = bench_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances_serial(g));
}

void BM_all_pairs_omp(benchmark::State& state) {
    Graph g = bench_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances(g));
}

void BM_pair_profile_serial(benchmark::State& state) {
    Graph g = bench_graph(static_cast<int>(state.range(0)));
    DistanceMatrix dm = all_pairs_distances(g);
    for (auto _ : state) benchmark::DoNotOptimize(pair_profile_serial(dm));
}

void BM_pair_profile_omp(benchmark::State& state) {
    Graph g = bench_graph(static_cast<int>(state.range(0)));
    DistanceMatrix dm = all_pairs_distances(g);
    for (auto _ : state) benchmark::DoNotOptimize(pair_profile(dm));
}

}  // namespace

BENCHMARK(BM_all_pairs_serial)->Arg(256)->Arg(1024);
BENCHMARK(BM_all_pairs_omp)->Arg(256)->Arg(1024);
BENCHMARK(BM_pair_profile_serial)->Arg(128)->Arg(512);
BENCHMARK(BM_pair_profile_omp)->Arg(128)->Arg(512);

BENCHMARK_MAIN();
