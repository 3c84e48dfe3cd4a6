#ifndef PINCHED_SRC_LEMMAS_HH
#define PINCHED_SRC_LEMMAS_HH 1

#include <pinched/extractors.hh>

#include <optional>
#include <variant>
#include <vector>

// Unvalidated cores of the extractors, shared by the public entry points.
namespace pinched::detail
{
    /// The path read from its smaller end id.
    auto oriented(const VertexList & path) -> VertexList;

    struct RamseyCore
    {
        bool clique = false;
        VertexList vertices;
    };

    /// nullopt only when the pool is too small for the recursion to finish.
    auto ramsey(const Graph &, VertexList pool, int c, int s) -> std::optional<RamseyCore>;

    auto clique_embedding(const Graph &, VertexList clique) -> EmbeddingWitness;
    auto biclique_embedding(const Graph &, const VertexList & left, const VertexList & right) -> EmbeddingWitness;

    using Lemma42Core = std::variant<Alignment, Constellation, NoAlternative>;

    /// S listed in input order, path already oriented.
    auto lemma42(const Graph &, const VertexList & S, const VertexList & path, int a, int d, int s, int l) -> Lemma42Core;

    using Lemma43Core = std::variant<Alignment, PinchWitness, NoAlternative>;

    auto lemma43(const Graph &, const VertexList & S, const VertexList & path, int a, int c, int d, int h) -> Lemma43Core;

    /// Indices of paths on which no vertex has t neighbours in S.
    struct LightPaths
    {
        std::vector<std::size_t> indices;
    };

    using Lemma44Core = std::variant<EmbeddingWitness, LightPaths, NoAlternative>;

    /// heavy_quota: the number of heavy paths that forces the biclique branch
    /// ((st)^t); with opportunistic, fewer heavy paths are tried as well when
    /// the light ones do not reach `want`.
    auto lemma44(const Graph &, const Constellation &, std::size_t want, int t, long long heavy_quota,
            bool opportunistic) -> Lemma44Core;
}

#endif
