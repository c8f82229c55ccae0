#include <unicolor/canonical.hh>
#include <unicolor/census.hh>
#include <unicolor/colouring.hh>
#include <unicolor/constructions.hh>
#include <unicolor/graph.hh>

#include <benchmark/benchmark.h>

#include <random>

using namespace unicolor;

namespace
{
    auto random_graph(int n, double p, std::uint64_t seed) -> Graph
    {
        std::mt19937_64 rng(seed);
        std::bernoulli_distribution edge(p);
        Graph g(n);
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (edge(rng))
                    g.add_edge(u, v);
        return g;
    }
}

static void canonical_labelling_random(benchmark::State & state)
{
    auto g = random_graph(static_cast<int>(state.range(0)), 0.3, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_labelling(g));
}
BENCHMARK(canonical_labelling_random)->Arg(12)->Arg(24)->Arg(32);

static void canonical_labelling_nu(benchmark::State & state)
{
    auto g = nu(catalog_graph("K3")).graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_labelling(g));
}
BENCHMARK(canonical_labelling_nu);

static void partition_count_figure1a(benchmark::State & state)
{
    auto g = catalog_graph("figure1a").graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(count_partitions(g, 3, 2));
}
BENCHMARK(partition_count_figure1a);

static void partition_count_nu_figure1a(benchmark::State & state)
{
    auto g = nu(catalog_graph("figure1a")).graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(count_partitions(g, 4, 2));
}
BENCHMARK(partition_count_nu_figure1a)->Unit(benchmark::kMicrosecond);

static void clique_number_random(benchmark::State & state)
{
    auto g = random_graph(static_cast<int>(state.range(0)), 0.5, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(clique_number(g));
}
BENCHMARK(clique_number_random)->Arg(16)->Arg(32)->Arg(64);

static void census_triangle_free(benchmark::State & state)
{
    CensusTask task;
    task.n = static_cast<int>(state.range(0));
    task.triangle_free = true;
    for (auto _ : state)
        benchmark::DoNotOptimize(generate(task, [] (const Graph &) { }));
}
BENCHMARK(census_triangle_free)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

static void witness_search_balanced_9(benchmark::State & state)
{
    CensusTask task;
    task.n = 9;
    task.k = 3;
    task.triangle_free = true;
    task.balanced = true;
    for (auto _ : state)
        benchmark::DoNotOptimize(find_unique_k_witnesses(task));
}
BENCHMARK(witness_search_balanced_9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
