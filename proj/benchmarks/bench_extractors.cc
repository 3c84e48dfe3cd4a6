#include <pinched/bounds.hh>
#include <pinched/extractors.hh>
#include <pinched/generators.hh>

#include <benchmark/benchmark.h>

using namespace pinched;

namespace
{
    auto single_path(const ArrayInstance & pd) -> Constellation
    {
        return Constellation{ pd.graph.fingerprint(), pd.array.order, { pd.array.paths.front() } };
    }

    auto BM_alignment_or_constellation(benchmark::State & state) -> void
    {
        int s = int(state.range(0));
        auto pd = gen_pd(s);
        auto c0 = single_path(pd);
        for (auto _ : state)
            benchmark::DoNotOptimize(alignment_or_constellation(pd.graph, c0, s, 1, s, 1).outcome);
    }
    BENCHMARK(BM_alignment_or_constellation)->RangeMultiplier(2)->Range(4, 64);

    // random 2-meager single path at the exact bound
    auto BM_pinched_alignment_or_witness(benchmark::State & state) -> void
    {
        int a = int(state.range(0));
        int n = int(lemma43_bound(a, 1, 2, 1));
        auto inst = gen_random_constellation({ n, 1, n / 2, n, 2, true }, 5);
        for (auto _ : state)
            benchmark::DoNotOptimize(pinched_alignment_or_witness(inst.graph, inst.constellation, a, 1, 2, 1).outcome);
        state.SetLabel(std::to_string(n) + " stable vertices");
    }
    BENCHMARK(BM_pinched_alignment_or_witness)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

    auto BM_meager_or_biclique(benchmark::State & state) -> void
    {
        int t = int(state.range(0));
        int paths = int(lemma44_bound(t, 2, t));
        auto inst = gen_random_constellation({ t, paths, 2, 4, t, true }, 11);
        for (auto _ : state)
            benchmark::DoNotOptimize(meager_or_biclique(inst.graph, inst.constellation, 2, t).outcome);
        state.SetLabel(std::to_string(paths) + " paths");
    }
    BENCHMARK(BM_meager_or_biclique)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

    auto BM_array_or_witness_relaxed(benchmark::State & state) -> void
    {
        int s = int(state.range(0));
        auto pd = gen_pd(s);
        auto con = array_as_constellation(pd.array);
        ExtractOptions opt;
        opt.relaxed = true;
        for (auto _ : state)
            benchmark::DoNotOptimize(array_or_witness(pd.graph, con, 3, 1, s, 2, opt).outcome);
    }
    BENCHMARK(BM_array_or_witness_relaxed)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

    auto BM_certify_pd(benchmark::State & state) -> void
    {
        auto pd = gen_pd(int(state.range(0)));
        for (auto _ : state)
            benchmark::DoNotOptimize(certify_array_properties(pd.graph, pd.array, CertifyOptions{ 20, {} }).all_pass());
    }
    BENCHMARK(BM_certify_pd)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

    auto BM_lambda(benchmark::State & state) -> void
    {
        int c = int(state.range(0));
        for (auto _ : state)
            benchmark::DoNotOptimize(lambda(c, 1, 2, 2).str().size());
    }
    BENCHMARK(BM_lambda)->DenseRange(1, 3);
}
