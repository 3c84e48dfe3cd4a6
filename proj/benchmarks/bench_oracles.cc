#include <pinched/generators.hh>
#include <pinched/graph6.hh>
#include <pinched/oracles.hh>

#include <benchmark/benchmark.h>

using namespace pinched;

namespace
{
    // PD_s has no (3,1) pinch, so the search runs to completion
    auto BM_pinch_none_pd(benchmark::State & state) -> void
    {
        auto g = gen_pd(int(state.range(0))).graph;
        for (auto _ : state)
            benchmark::DoNotOptimize(find_pinch_witness(g, 3, 1).status);
        state.SetLabel(std::to_string(g.order()) + " vertices");
    }
    BENCHMARK(BM_pinch_none_pd)->DenseRange(3, 6);

    auto BM_pinch_found_expansion(benchmark::State & state) -> void
    {
        auto g = gen_pd_expansion(int(state.range(0)), random_pd_expansion_spec(int(state.range(0)), 2, 7)).graph;
        for (auto _ : state)
            benchmark::DoNotOptimize(find_pinch_witness(g, 2, 1).status);
    }
    BENCHMARK(BM_pinch_found_expansion)->DenseRange(3, 6);

    auto BM_treewidth_exact_wall(benchmark::State & state) -> void
    {
        auto g = gen_wall(int(state.range(0)));
        for (auto _ : state)
            benchmark::DoNotOptimize(treewidth_exact(g, 30).width);
        state.SetLabel(std::to_string(g.order()) + " vertices");
    }
    BENCHMARK(BM_treewidth_exact_wall)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

    auto BM_treewidth_exact_pd(benchmark::State & state) -> void
    {
        auto g = gen_pd(3).graph;
        for (auto _ : state)
            benchmark::DoNotOptimize(treewidth_exact(g).width);
    }
    BENCHMARK(BM_treewidth_exact_pd)->Unit(benchmark::kMillisecond);

    auto BM_treewidth_minfill_grid(benchmark::State & state) -> void
    {
        auto g = gen_grid(int(state.range(0)));
        for (auto _ : state)
            benchmark::DoNotOptimize(treewidth_upper_minfill(g).width);
    }
    BENCHMARK(BM_treewidth_minfill_grid)->RangeMultiplier(2)->Range(4, 32);

    // K_4 subdivision with at most one direct edge, absent from arrays
    auto BM_subdivision_none_array(benchmark::State & state) -> void
    {
        auto inst = gen_array_instance(random_array_profile(int(state.range(0)), 2, 3), 3);
        SubdivisionBounds b;
        b.max_unsubdivided = 1;
        auto k4 = gen_complete(4);
        for (auto _ : state)
            benchmark::DoNotOptimize(find_induced_subdivision(inst.graph, k4, 30, {}, b).status);
        state.SetLabel(std::to_string(inst.graph.order()) + " vertices");
    }
    BENCHMARK(BM_subdivision_none_array)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

    auto BM_subdivision_found_wall(benchmark::State & state) -> void
    {
        auto w = gen_wall(int(state.range(0)));
        auto k4 = gen_complete(4);
        for (auto _ : state)
            benchmark::DoNotOptimize(find_induced_subdivision(w, k4, w.order()).status);
    }
    BENCHMARK(BM_subdivision_found_wall)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

    auto BM_disjoint_paths_grid(benchmark::State & state) -> void
    {
        auto g = gen_grid(int(state.range(0)));
        int last = g.order() - 1;
        for (auto _ : state)
            benchmark::DoNotOptimize(internally_disjoint_paths(g, 0, last, 2).value);
    }
    BENCHMARK(BM_disjoint_paths_grid)->RangeMultiplier(2)->Range(4, 32);

    auto BM_graph6_round_trip(benchmark::State & state) -> void
    {
        auto g = gen_grid(int(state.range(0)));
        for (auto _ : state)
            benchmark::DoNotOptimize(graph6_parse(graph6_emit(g)).size());
    }
    BENCHMARK(BM_graph6_round_trip)->RangeMultiplier(4)->Range(4, 64);
}
