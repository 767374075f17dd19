#include "mvis/builders.hpp"
#include "mvis/chromatic.hpp"
#include "mvis/geodesic.hpp"
#include "mvis/reference.hpp"
#include "mvis/visibility.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace mvis;

namespace
{

Graph bench_graph(std::int64_t n)
{
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    return random_connected_graph(rng, static_cast<std::size_t>(n), 6.0 / static_cast<double>(n));
}

VertexSet maximal_mv_set(const GeodesicIndex & gi)
{
    VisibilityKernel kernel(gi);
    IncrementalVisibleSet inc(kernel, false);
    for (Vertex v = 0; v < gi.order(); ++v)
        inc.add(v);
    return VertexSet(gi.order(), inc.members());
}

void BM_bfs_all_pairs(benchmark::State & state)
{
    auto g = bench_graph(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(bfs_all_pairs(g));
}

void BM_bfs_all_pairs_serial_reference(benchmark::State & state)
{
    auto g = bench_graph(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::bfs_all_pairs(g));
}

void BM_is_mv_set(benchmark::State & state, Execution exec)
{
    auto g = bench_graph(state.range(0));
    GeodesicIndex gi(g);
    auto x = maximal_mv_set(gi);
    state.counters["set_size"] = static_cast<double>(x.size());
    for (auto _ : state)
        benchmark::DoNotOptimize(is_mv_set(gi, x, exec));
}

void BM_chi_mu_i_strong_paths(benchmark::State & state)
{
    auto n = static_cast<std::size_t>(state.range(0));
    auto g = strong_product(path_graph(n), path_graph(n));
    for (auto _ : state)
        benchmark::DoNotOptimize(chi_mu_i(g));
}

}

BENCHMARK(BM_bfs_all_pairs)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_bfs_all_pairs_serial_reference)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK_CAPTURE(BM_is_mv_set, parallel, Execution::parallel)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK_CAPTURE(BM_is_mv_set, serial, Execution::serial)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_chi_mu_i_strong_paths)->Arg(5)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
