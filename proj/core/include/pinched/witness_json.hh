#ifndef PINCHED_WITNESS_JSON_HH
#define PINCHED_WITNESS_JSON_HH 1

#include <pinched/extractors.hh>
#include <pinched/graph.hh>
#include <pinched/oracles.hh>
#include <pinched/structures.hh>

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace pinched
{
    using Json = nlohmann::ordered_json;

    inline constexpr int schema_version = 1;

    /// Malformed or unsupported witness JSON (wrong version, unknown kind,
    /// missing field). Distinct from a well-formed witness that is invalid.
    class SchemaError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    // Every document is an envelope
    //   { "schema_version": 1, "kind": ..., "graph_fingerprint": {n, m, hash},
    //     "parameters": {...}, "payload": {...} }
    // with hash a 16-digit lowercase hex string. Kinds and payloads:
    //   bundle, constellation   stable: [v], paths: [[v]]
    //                           (parameters: plain, optional meager / hollow d)
    //   alignment               order: [v], path: [v], end: v
    //   array                   order, paths, ends, h
    //   pinch                   hub, cycles: [[hub, ...]]        (parameters: c, h)
    //   block                   block: [v], k, families: [{x, y, paths}]  (strong)
    //   patch                   hub, paths        (parameters: X, d, r, plain)
    //   match                   paths             (parameters: X, d, r, plain)
    //   minor-model             target: graph6, branch_sets: [[v]]
    //   tree-decomposition      bags: [[v]], tree_edges: [[i, j]], width
    //   embedding               pattern: graph6, map: [v]
    //   subdivision             base: graph6, branch: [v], edge_paths: [[v]]
    //                           (parameters: optional max_extra, max_unsubdivided)
    //   line-subdivision        base: graph6, edge_paths: [[v]]
    //   stable-set              vertices: [v]
    //   treewidth-lower-bound   model: <minor-model payload>, bound
    //   certify-report          vertices, checks: [{name, status, budget, detail}],
    //                           treewidth_lower_bound, array  (parameters: s, h, vertex_budget)
    //   no-witness              a search that found nothing  (parameters: query, status)
    //   no-alternative          reason: a relaxed extraction without a certificate
    // no-witness and no-alternative claim nothing and always validate.

    auto fingerprint_json(const Fingerprint &) -> Json;
    auto fingerprint_from_json(const Json &) -> Fingerprint;

    auto envelope(const std::string & kind, const Fingerprint &, Json parameters, Json payload) -> Json;

    auto to_json(const Bundle &, bool plain = false) -> Json;
    auto to_json(const Alignment &) -> Json;
    auto to_json(const Array &) -> Json;
    auto to_json(const PinchWitness &, int c, int h) -> Json;
    auto to_json(const BlockWitness &, bool strong) -> Json;
    auto to_json(const PatchWitness &, const VertexList & X, int d, int r, bool plain = false) -> Json;
    auto to_json(const MatchWitness &, const VertexList & X, int d, int r, bool plain = false) -> Json;
    auto to_json(const MinorModelWitness &) -> Json;
    auto to_json(const TreeDecompositionWitness &) -> Json;
    auto to_json(const EmbeddingWitness &) -> Json;
    auto to_json(const SubdivisionEmbedding &, const SubdivisionBounds & = {}) -> Json;
    auto to_json(const LineSubdivisionEmbedding &) -> Json;
    auto to_json(const StableSetWitness &) -> Json;
    auto to_json(const CertifyReport &, const Array &, int vertex_budget) -> Json;
    auto treewidth_lower_json(const MinorModelWitness &, int bound) -> Json;
    auto no_witness_json(const Fingerprint &, Json query, const std::string & status) -> Json;

    /// The alternative an extractor returned, as its own witness kind, with
    /// `parameters` extended by the outcome name.
    auto to_json(const ExtractionResult &, const Fingerprint &, Json parameters) -> Json;

    /// Readers; throw SchemaError on a malformed envelope or the wrong kind.
    auto check_envelope(const Json &) -> void;
    auto bundle_from_json(const Json &) -> Bundle;
    auto alignment_from_json(const Json &) -> Alignment;
    auto array_from_json(const Json &) -> Array;
    auto pinch_from_json(const Json &) -> PinchWitness;
    auto minor_model_from_json(const Json &) -> MinorModelWitness;
    auto tree_decomposition_from_json(const Json &) -> TreeDecompositionWitness;
    auto embedding_from_json(const Json &) -> EmbeddingWitness;
    auto subdivision_from_json(const Json &) -> SubdivisionEmbedding;

    /// Dispatches on kind and runs the matching validator. Throws
    /// FingerprintMismatch for a stale witness, SchemaError for bad JSON.
    auto validate_witness_json(const Graph &, const Json &) -> Verdict;
}

#endif
