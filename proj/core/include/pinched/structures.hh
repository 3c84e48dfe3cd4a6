#ifndef PINCHED_STRUCTURES_HH
#define PINCHED_STRUCTURES_HH 1

#include <pinched/graph.hh>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pinched
{
    /// Raised when a witness cites a different graph than the one it is
    /// checked against. Distinct from a failed validation.
    class FingerprintMismatch : public std::runtime_error
    {
        public:
            FingerprintMismatch(const Fingerprint & expected, const Fingerprint & cited);
    };

    /// Raised by predicates that are only defined on valid structures
    /// (e.g. hollowness of something that is not a constellation).
    class InvalidWitness : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// Validation outcome. On failure, clause names the first violated
    /// condition, e.g. "(AL)", "(P3)" or "S stable".
    struct Verdict
    {
        bool ok = true;
        std::string clause;
        std::string detail;

        explicit operator bool() const noexcept { return ok; }

        static auto pass() -> Verdict { return Verdict{}; }
        static auto fail(std::string clause, std::string detail = "") -> Verdict
        {
            return Verdict{ false, std::move(clause), std::move(detail) };
        }
    };

    auto to_string(const Verdict &) -> std::string;

    /// A stable-set side and a polypath. Used both for bundles and for
    /// constellations; which definition applies depends on the validator.
    struct Bundle
    {
        Fingerprint graph;
        VertexList stable;
        std::vector<VertexList> paths;
    };

    using Constellation = Bundle;

    /// (S, L, pi) with pi(i) = order[i - 1]; end is the end of L that the
    /// ordering is read from.
    struct Alignment
    {
        Fingerprint graph;
        VertexList order;
        VertexList path;
        Vertex end = -1;
    };

    /// Plain h-hollow (s,s)-constellation aligned on every path under the one
    /// ordering `order`; ends[i] is the end of paths[i] the alignment uses.
    struct Array
    {
        Fingerprint graph;
        VertexList order;
        std::vector<VertexList> paths;
        VertexList ends;
        int h = 1;
    };

    /// Cycles through a common hub. Each cycle lists the hub first.
    struct PinchWitness
    {
        Fingerprint graph;
        Vertex hub = -1;
        std::vector<VertexList> cycles;
    };

    struct PathFamily
    {
        Vertex x = -1, y = -1;
        std::vector<VertexList> paths;
    };

    struct BlockWitness
    {
        Fingerprint graph;
        VertexList block;
        int k = 1;
        std::vector<PathFamily> families;
    };

    /// A (1, r)-bundle whose single stable vertex is the hub.
    struct PatchWitness
    {
        Fingerprint graph;
        Vertex hub = -1;
        std::vector<VertexList> paths;
    };

    struct MatchWitness
    {
        Fingerprint graph;
        std::vector<VertexList> paths;
    };

    struct MinorModelWitness
    {
        Fingerprint graph;
        Graph target;
        std::vector<VertexList> branch_sets;
    };

    struct TreeDecompositionWitness
    {
        Fingerprint graph;
        std::vector<VertexList> bags;
        std::vector<Edge> tree_edges;
        int width = 0;
    };

    /// Induced embedding: map[i] is the image of pattern vertex i.
    struct EmbeddingWitness
    {
        Fingerprint graph;
        Graph pattern;
        VertexList map;
    };

    /// Induced subdivision of `base`: edge_paths[i] realises base.edges()[i],
    /// running from branch[u] to branch[v].
    struct SubdivisionEmbedding
    {
        Fingerprint graph;
        Graph base;
        VertexList branch;
        std::vector<VertexList> edge_paths;
    };

    /// Induced copy of the line graph of a subdivision of `base`:
    /// edge_paths[i] is the (non-empty) path of line-graph vertices that comes
    /// from subdividing base.edges()[i] = (u, v), listed from the u-end.
    struct LineSubdivisionEmbedding
    {
        Fingerprint graph;
        Graph base;
        std::vector<VertexList> edge_paths;
    };

    auto require_fingerprint(const Graph &, const Fingerprint & cited) -> void;

    auto validate_bundle(const Graph &, const Bundle &, bool plain = false) -> Verdict;
    auto validate_constellation(const Graph &, const Constellation &, bool plain = false) -> Verdict;

    /// Maximal x-gaps on the given path, in path order: one per pair of
    /// consecutive neighbours of x. Throws InvalidWitness if x is not in S.
    auto gaps_of(const Graph &, const Constellation &, Vertex x, std::size_t path_index = 0) -> std::vector<VertexList>;

    /// Number of edges on a path witness.
    inline auto path_length(const VertexList & p) -> int { return p.empty() ? 0 : int(p.size()) - 1; }

    auto is_hollow(const Graph &, const Constellation &, int d) -> bool;
    auto is_meager(const Graph &, const Constellation &, int d) -> bool;

    /// Largest number of S-neighbours of any path vertex.
    auto meagerness(const Graph &, const Constellation &) -> int;

    auto validate_alignment(const Graph &, const Alignment &) -> Verdict;

    /// (AL) may hold from either end; returns the end that works, if any.
    auto alignment_end(const Graph &, const VertexList & order, const VertexList & path) -> std::optional<Vertex>;
    auto validate_alignment_any_end(const Graph &, const Alignment &) -> Verdict;

    auto validate_array(const Graph &, const Array &) -> Verdict;
    auto array_as_constellation(const Array &) -> Constellation;

    auto validate_pinch_witness(const Graph &, const PinchWitness &, int c, int h) -> Verdict;

    auto validate_block(const Graph &, const BlockWitness &, bool strong) -> Verdict;
    auto validate_patch(const Graph &, const PatchWitness &, const VertexList & X, int d, int r, bool plain = false) -> Verdict;
    auto validate_match(const Graph &, const MatchWitness &, const VertexList & X, int d, int r, bool plain = false) -> Verdict;
    auto validate_minor_model(const Graph &, const MinorModelWitness &) -> Verdict;
    auto validate_tree_decomposition(const Graph &, const TreeDecompositionWitness &) -> Verdict;
    auto validate_embedding(const Graph &, const EmbeddingWitness &) -> Verdict;

    /// With max_extra = r, additionally checks it is a (<= r)-subdivision.
    auto validate_subdivision_embedding(const Graph &, const SubdivisionEmbedding &,
            std::optional<int> max_extra = std::nullopt) -> Verdict;
    auto validate_line_subdivision_embedding(const Graph &, const LineSubdivisionEmbedding &) -> Verdict;
}

#endif
