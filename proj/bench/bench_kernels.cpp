// Serial reference kernels against their OpenMP counterparts. The argument is the
// cyclic group order; g0 is the last element, which has the most vertices.
#include <benchmark/benchmark.h>

#include "mcp/graph.hpp"

using namespace mcp;

namespace {

Instance cyclic(int d) { return Instance{make_group({d}), d - 1}; }

void BM_Irreducible_Serial(benchmark::State& st) {
    auto inst = cyclic(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_irreducible_points_serial(inst));
}

void BM_Irreducible_Parallel(benchmark::State& st) {
    auto inst = cyclic(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_irreducible_points(inst));
}

void BM_Vertices_Serial(benchmark::State& st) {
    auto inst = cyclic(static_cast<int>(st.range(0)));
    auto irr = enumerate_irreducible_points(inst);
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_vertices_serial(inst, irr));
}

void BM_Vertices_Parallel(benchmark::State& st) {
    auto inst = cyclic(static_cast<int>(st.range(0)));
    auto irr = enumerate_irreducible_points(inst);
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_vertices(inst, irr));
}

void BM_Graph_Serial(benchmark::State& st) {
    auto model = build_model(cyclic(static_cast<int>(st.range(0))));
    for (auto _ : st) benchmark::DoNotOptimize(build_graph_serial(model));
}

void BM_Graph_Parallel(benchmark::State& st) {
    auto model = build_model(cyclic(static_cast<int>(st.range(0))));
    for (auto _ : st) benchmark::DoNotOptimize(build_graph(model));
}

}  // namespace

BENCHMARK(BM_Irreducible_Serial)->Arg(11)->Arg(13)->Arg(15)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Irreducible_Parallel)->Arg(11)->Arg(13)->Arg(15)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Vertices_Serial)->Arg(9)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Vertices_Parallel)->Arg(9)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Graph_Serial)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Graph_Parallel)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
