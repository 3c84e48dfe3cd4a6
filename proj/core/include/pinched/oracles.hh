#ifndef PINCHED_ORACLES_HH
#define PINCHED_ORACLES_HH 1

#include <pinched/graph.hh>
#include <pinched/structures.hh>

#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pinched
{
    /// Cooperative limits for the backtracking searches. A zero node limit
    /// means unlimited. The cancel flag is polled once per search node.
    struct SearchLimits
    {
        std::uint64_t node_limit = 0;
        const std::atomic<bool> * cancel = nullptr;
    };

    /// none means the search finished without finding anything; exhausted
    /// means it stopped early because of a limit, and is not an answer.
    enum class SearchStatus
    {
        found,
        none,
        exhausted
    };

    auto to_string(SearchStatus) -> std::string;

    template <typename Witness_>
    struct SearchResult
    {
        SearchStatus status = SearchStatus::none;
        std::optional<Witness_> witness;
        std::uint64_t nodes = 0;
    };

    auto find_induced_embedding(const Graph & g, const Graph & pattern, SearchLimits = {}) -> SearchResult<EmbeddingWitness>;

    /// Hubs are tried in decreasing degree (ties by id); candidate cycles are
    /// ordered by length, then lexicographically.
    auto find_pinch_witness(const Graph & g, int c, int h, SearchLimits = {}) -> SearchResult<PinchWitness>;

    /// Optional per-edge bounds on path lengths (in edges), indexed like
    /// base.edges(). Empty vectors mean no bound. max_unsubdivided caps how
    /// many base edges may be realised by a single edge (negative: no cap);
    /// it needs a base graph without degree-2 vertices.
    struct SubdivisionBounds
    {
        std::vector<int> min_length;
        std::vector<int> max_length;
        int max_unsubdivided = -1;
    };

    /// Searches for an induced subdivision of `base` on at most vertex_budget
    /// vertices. `none` only speaks for that budget.
    auto find_induced_subdivision(const Graph & g, const Graph & base, int vertex_budget,
            SearchLimits = {}, const SubdivisionBounds & = {}) -> SearchResult<SubdivisionEmbedding>;

    /// Same, for an induced copy of the line graph of a subdivision of `base`.
    /// Bounds count line-graph vertices per base edge, which equals the edge
    /// count of the subdivided edge.
    auto find_induced_line_subdivision(const Graph & g, const Graph & base, int vertex_budget,
            SearchLimits = {}, const SubdivisionBounds & = {}) -> SearchResult<LineSubdivisionEmbedding>;

    enum class CleanStatus
    {
        clean_within_budget,
        obstruction,
        exhausted
    };

    auto to_string(CleanStatus) -> std::string;

    /// Outcome of a bounded cleanness check. K_t and K_{t,t} are decided
    /// exactly; the wall-based obstructions only up to vertex_budget.
    struct CleanVerdict
    {
        CleanStatus status = CleanStatus::clean_within_budget;
        int t = 0;
        int vertex_budget = 0;
        std::string obstruction;
        std::optional<EmbeddingWitness> embedding;
        std::optional<SubdivisionEmbedding> wall;
        std::optional<LineSubdivisionEmbedding> line_wall;
    };

    auto is_t_clean_bounded(const Graph & g, int t, int vertex_budget, SearchLimits = {}) -> CleanVerdict;

    class TreewidthCapExceeded : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    struct TreewidthResult
    {
        int width = 0;
        TreeDecompositionWitness decomposition;
        VertexList elimination_order;
    };

    inline constexpr int default_treewidth_cap = 18;

    /// Subset dynamic programme over elimination orderings; exact.
    auto treewidth_exact(const Graph &, int cap = default_treewidth_cap) -> TreewidthResult;

    /// Min-fill elimination, ties broken by smallest id.
    auto treewidth_upper_minfill(const Graph &) -> TreewidthResult;

    /// Decomposition induced by eliminating vertices in the given order.
    auto decomposition_from_order(const Graph &, const VertexList & order) -> TreewidthResult;

    /// Lower bound from a validated minor model: min(a, b) for a K_{a,b}
    /// target, t - 1 for K_t, otherwise the exact treewidth of the target
    /// when it is small enough. Throws InvalidWitness on a bad model.
    auto treewidth_lower_via_minor(const Graph &, const MinorModelWitness &) -> int;

    /// Canonical K_{s,s} model of an array: singletons for the stable set,
    /// one branch set per path.
    auto array_minor_model(const Graph &, const Array &) -> MinorModelWitness;

    struct DisjointPaths
    {
        /// Maximum number of internally disjoint x-y paths.
        int value = 0;
        /// k of them when value >= k, otherwise empty.
        std::vector<VertexList> paths;
    };

    /// Unit-capacity max flow on the vertex-split graph, then each flow path is
    /// shortcut inside its own vertex set. Paths are therefore induced apart
    /// from a possible x-y chord when x and y are adjacent.
    auto internally_disjoint_paths(const Graph &, Vertex x, Vertex y, int k) -> DisjointPaths;
}

#endif
