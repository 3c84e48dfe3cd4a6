#ifndef PINCHED_TESTS_FIXTURES_HH
#define PINCHED_TESTS_FIXTURES_HH 1

#include <pinched/graph.hh>
#include <pinched/structures.hh>

#include <cstdint>
#include <utility>
#include <vector>

namespace fixtures
{
    using namespace pinched;

    struct Instance
    {
        Graph graph;
        Constellation constellation;
    };

    auto path_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;

    /// k triangles sharing vertex 0
    auto friendship(int k) -> Graph;

    /// G(n, p) with p = num / den, from a fixed seed
    auto random_graph(int n, int num, int den, std::uint64_t seed) -> Graph;

    /// Random tree on n vertices
    auto random_tree(int n, std::uint64_t seed) -> Graph;

    /// Five stable vertices on one 12-vertex path, 3-meager (one vertex sees
    /// three of them), longest gap 5 (x_3's), so 6-hollow but not 5-hollow.
    /// Stable vertices are 0..4 (x_1..x_5), the path 5..16.
    auto meager_hollow_example() -> Instance;

    /// Five stable vertices whose neighbourhoods sit in consecutive blocks
    /// along one path, in order 0..4; the path read from its first vertex.
    auto five_alignment_example() -> std::pair<Graph, Alignment>;

    /// hub 0 and r paths x_i - a - b - y_i, with y_i ~ hub and x_i in X.
    struct PatchExample
    {
        Graph graph;
        PatchWitness patch;
        VertexList X;
    };
    auto patch_example(int r, int d) -> PatchExample;

    /// r anticomplete paths of the given length with both ends in X.
    struct MatchExample
    {
        Graph graph;
        MatchWitness match;
        VertexList X;
    };
    auto match_example(int r, int length) -> MatchExample;

    /// Single-path constellation on which every level of the split recursion
    /// is forced: m nested vertices at the bottom, then l - 1 layers that each
    /// add one split vertex. |S| = m + l - 1, every path vertex sees at most
    /// one stable vertex. Paths of the constellation answer are sub-paths.
    auto layered(int m, int l) -> Instance;

    /// A (t, heavy + light)-constellation: the first `heavy` paths are single
    /// vertices complete to S = {0..t-1}, pairwise adjacent when `clique`
    /// (otherwise pairwise non-adjacent); the other paths are 1-meager.
    auto planted_heavy(int t, int heavy, int light, bool clique) -> Instance;

    /// Plain single-vertex-path constellation: hub 0 plus `stable` - 1 other
    /// stable vertices, and c paths on which hub 0 has a gap of length `gap`.
    /// Other stable vertices attach once per path.
    auto planted_long_gaps(int stable, int c, int gap) -> Instance;
}

#endif
