#ifndef PINCHED_EXTRACTORS_HH
#define PINCHED_EXTRACTORS_HH 1

#include <pinched/bounds.hh>
#include <pinched/graph.hh>
#include <pinched/oracles.hh>
#include <pinched/structures.hh>

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace pinched
{
    /// An input does not meet an extractor's precondition. clause() names
    /// it, e.g. "(not d-meager)" or "(too small S_0)".
    class PreconditionFailed : public std::invalid_argument
    {
        private:
            std::string _clause;

        public:
            PreconditionFailed(std::string clause, const std::string & detail);

            auto clause() const -> const std::string & { return _clause; }
    };

    /// relaxed: accept inputs below the size bound. Below the bound the
    /// extractor may end with no_alternative instead of a certificate; what
    /// it does return is still validated.
    struct ExtractOptions
    {
        bool relaxed = false;
        SearchLimits limits;
    };

    struct StableSetWitness
    {
        Fingerprint graph;
        VertexList vertices;
    };

    struct NoAlternative
    {
        std::string reason;
    };

    enum class Outcome
    {
        alignment,
        constellation,
        array,
        clique,
        biclique,
        pinch,
        stable_set,
        no_alternative
    };

    auto to_string(Outcome) -> std::string;

    using ExtractionPayload = std::variant<Alignment, Constellation, Array, EmbeddingWitness,
          PinchWitness, StableSetWitness, NoAlternative>;

    struct ExtractionResult
    {
        Outcome outcome = Outcome::no_alternative;
        ExtractionPayload payload = NoAlternative{};
        /// end of the input path the procedure oriented itself from, or -1
        Vertex oriented_from = -1;

        template <typename T_>
        auto get() const -> const T_ & { return std::get<T_>(payload); }
    };

    /// Clique of size c (as an induced K_c embedding) or stable set of size
    /// s, among `within` (all of G when empty). Needs |within| >= c^s.
    auto ramsey_clique_or_stable(const Graph &, int c, int s, const ExtractOptions & = {},
            const VertexList & within = {}) -> ExtractionResult;

    /// a-alignment (S, L, pi) with S in S_0 and L a subpath of L_0, or a
    /// plain (s,l)-constellation on S_0 and subpaths of L_0.
    auto alignment_or_constellation(const Graph &, const Constellation & c0, int a, int d, int s, int l,
            const ExtractOptions & = {}) -> ExtractionResult;

    /// a-alignment inside (S_0, L_0), or c induced cycles of length >= h+2
    /// through one vertex of S_0, otherwise disjoint and anticomplete.
    auto pinched_alignment_or_witness(const Graph &, const Constellation & c0, int a, int c, int d, int h,
            const ExtractOptions & = {}) -> ExtractionResult;

    /// K_t or K_{t,t}, else the first l paths (in input order) on which no
    /// vertex has t neighbours in S; on those the constellation is t-meager.
    auto meager_or_biclique(const Graph &, const Constellation &, int l, int t,
            const ExtractOptions & = {}) -> ExtractionResult;

    /// (s,h)-array inside a plain constellation, or K_t / K_{t,t}, or a
    /// (c,h) pinch witness.
    auto array_or_witness(const Graph &, const Constellation &, int c, int h, int s, int t,
            const ExtractOptions & = {}) -> ExtractionResult;

    struct CertifyOptions
    {
        int vertex_budget = 30;
        SearchLimits limits;
    };

    enum class CheckStatus
    {
        pass,
        fail,
        exhausted
    };

    auto to_string(CheckStatus) -> std::string;

    struct CertifyCheck
    {
        std::string name;
        CheckStatus status = CheckStatus::pass;
        /// vertex budget for the bounded checks, 0 for exact ones
        int budget = 0;
        std::string detail;
    };

    struct CertifyReport
    {
        Fingerprint graph;
        int s = 0, h = 0;
        /// vertices of J = G[V(arr)], as ids of G
        VertexList vertices;
        std::vector<CertifyCheck> checks;
        int treewidth_lower_bound = 0;

        auto all_pass() const -> bool;
    };

    /// Runs the cleanness, pinch and treewidth checks on G[V(arr)]. Throws
    /// InvalidWitness if arr is not an array of G.
    auto certify_array_properties(const Graph &, const Array &, const CertifyOptions & = {}) -> CertifyReport;

    /// Fragment: graph J on a strong block B, x ~ y iff some x-y path of the
    /// block has length at most h. Returns either m vertices pairwise joined
    /// by such short paths (one per pair, so a subgraph that is a (<= h-1)
    /// subdivision of K_m), or q vertices pairwise joined only by longer ones.
    struct BlockRamseyResult
    {
        bool clique = false;
        VertexList vertices;
        /// clique case: one short path per pair of vertices, pairs in
        /// lexicographic order of their positions in `vertices`
        std::vector<VertexList> paths;
    };

    auto block_short_path_ramsey(const Graph &, const BlockWitness &, int h, int m, int q,
            const ExtractOptions & = {}) -> std::variant<BlockRamseyResult, NoAlternative>;

    /// Fragment: for plain, disentangled polypaths first and second, a path
    /// of `first` no vertex of which has neighbours in more than l-1 paths of
    /// `second`, or a plain (s,l)-constellation with one vertex from each of
    /// s paths of `first` and l paths of `second`.
    struct NonRigidResult
    {
        /// index into first, or -1 when a constellation was found
        int path_index = -1;
        std::optional<Constellation> constellation;
    };

    auto nonrigid_path_or_constellation(const Graph &, const std::vector<VertexList> & first,
            const std::vector<VertexList> & second, int l, int s,
            const ExtractOptions & = {}) -> std::variant<NonRigidResult, NoAlternative>;
}

#endif
