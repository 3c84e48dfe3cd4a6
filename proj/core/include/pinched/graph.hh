#ifndef PINCHED_GRAPH_HH
#define PINCHED_GRAPH_HH 1

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pinched
{
    using Vertex = int;
    using VertexList = std::vector<Vertex>;
    using Edge = std::pair<Vertex, Vertex>;
    using VertexSet = boost::dynamic_bitset<std::uint64_t>;

    class GraphError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// Identifies the exact graph value a witness was produced against. Two
    /// graphs share a fingerprint iff they have the same order, size and
    /// adjacency-matrix hash (FNV-1a 64 over the graph6 encoding).
    struct Fingerprint
    {
        int n = 0;
        std::int64_t m = 0;
        std::uint64_t hash = 0;

        auto operator== (const Fingerprint &) const -> bool = default;
    };

    auto to_string(const Fingerprint &) -> std::string;

    /// Immutable simple undirected graph on vertices 0..n-1. Adjacency is held
    /// both as bitset rows and as sorted neighbour lists.
    class Graph
    {
        private:
            int _n = 0;
            std::int64_t _m = 0;
            std::vector<VertexSet> _rows;
            std::vector<VertexList> _adj;
            std::vector<std::string> _labels;
            Fingerprint _fingerprint;

        public:
            Graph();

            /// Duplicate edges are merged; self-loops and out-of-range ends throw.
            Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels = {});
            Graph(int n, std::initializer_list<Edge> edges);

            auto order() const noexcept -> int { return _n; }
            auto size() const noexcept -> std::int64_t { return _m; }

            auto adjacent(Vertex u, Vertex v) const -> bool { return _rows[u].test(v); }
            auto row(Vertex v) const -> const VertexSet & { return _rows[v]; }
            auto neighbours(Vertex v) const -> const VertexList & { return _adj[v]; }
            auto degree(Vertex v) const -> int { return int(_adj[v].size()); }
            auto max_degree() const -> int;

            auto has_labels() const noexcept -> bool { return ! _labels.empty(); }
            auto label(Vertex v) const -> std::string;
            auto labels() const -> const std::vector<std::string> & { return _labels; }

            /// Edges (u, v) with u < v, sorted lexicographically.
            auto edges() const -> std::vector<Edge>;

            auto fingerprint() const -> const Fingerprint & { return _fingerprint; }

            auto contains(Vertex v) const noexcept -> bool { return v >= 0 && v < _n; }

            /// Bitset over this graph's vertices with the given members set.
            auto make_set(std::span<const Vertex> vs) const -> VertexSet;
            auto empty_set() const -> VertexSet { return VertexSet(std::size_t(_n)); }

            auto operator== (const Graph & other) const -> bool;
    };

    struct InducedSubgraph
    {
        Graph graph;
        /// to_parent[i] is the vertex of the original graph that became vertex i.
        VertexList to_parent;
    };

    /// Vertex i of the result is X[i]. Throws GraphError on unknown or repeated ids.
    auto induced_subgraph(const Graph &, std::span<const Vertex> X) -> InducedSubgraph;

    /// Throws GraphError if X and Y overlap.
    auto are_anticomplete(const Graph &, std::span<const Vertex> X, std::span<const Vertex> Y) -> bool;
    auto are_complete(const Graph &, std::span<const Vertex> X, std::span<const Vertex> Y) -> bool;
    auto is_stable(const Graph &, std::span<const Vertex> X) -> bool;
    auto is_clique(const Graph &, std::span<const Vertex> X) -> bool;

    /// p_i ~ p_j iff |i - j| = 1. Throws GraphError on empty or repeated input.
    auto is_induced_path(const Graph &, std::span<const Vertex> seq) -> bool;

    /// c_i ~ c_j iff |i - j| in {1, k-1}; needs at least three vertices.
    auto is_induced_cycle(const Graph &, std::span<const Vertex> seq) -> bool;

    /// Connectedness of G[X]; the empty set counts as disconnected.
    auto is_connected_subset(const Graph &, std::span<const Vertex> X) -> bool;

    struct LineGraph
    {
        Graph graph;
        /// edge_of[i] is the edge of the root graph represented by vertex i.
        std::vector<Edge> edge_of;
    };

    auto line_graph(const Graph &) -> LineGraph;

    /// Graphviz export. Labels default to the graph's own labels, then to ids.
    auto dot_emit(const Graph &, const std::vector<std::string> & labels = {}) -> std::string;
}

#endif
