#ifndef PINCHED_TESTS_NAIVE_HH
#define PINCHED_TESTS_NAIVE_HH 1

// Deliberately simple reference implementations. Nothing here shares code
// with the library beyond Graph adjacency queries.

#include <pinched/graph.hh>

#include <vector>

namespace naive
{
    using pinched::Graph;
    using pinched::Vertex;
    using pinched::VertexList;

    /// Every induced cycle, as a vertex subset (sorted), found by testing
    /// each subset of at least 3 vertices for "connected and 2-regular".
    /// Only for n <= 12 or so.
    auto induced_cycles(const Graph &) -> std::vector<VertexList>;

    /// Does G contain c induced cycles of >= h + 2 vertices through one hub,
    /// pairwise meeting only in the hub and pairwise anticomplete apart from it?
    auto has_pinch(const Graph &, int c, int h) -> bool;

    /// Max number of internally disjoint x-y paths by Menger: the smallest
    /// vertex set separating x from y once a direct xy edge is deleted,
    /// plus one for that edge. Enumerates subsets by increasing size.
    auto min_vertex_cut(const Graph &, Vertex x, Vertex y) -> int;

    auto is_clique(const Graph &, const VertexList &) -> bool;
    auto is_stable(const Graph &, const VertexList &) -> bool;

    /// Induced subgraph test by trying every ordered injection; tiny only.
    auto has_induced(const Graph & g, const Graph & pattern) -> bool;

    /// Checks that `map` carries pattern adjacency and non-adjacency exactly.
    auto is_induced_copy(const Graph & g, const Graph & pattern, const VertexList & map) -> bool;
}

#endif
