#ifndef PINCHED_GENERATORS_HH
#define PINCHED_GENERATORS_HH 1

#include <pinched/graph.hh>
#include <pinched/structures.hh>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace pinched
{
    class GeneratorError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    auto gen_complete(int t) -> Graph;

    /// Sides are 0..a-1 and a..a+b-1.
    auto gen_biclique(int a, int b) -> Graph;

    /// t-by-t square lattice; vertex r * t + c.
    auto gen_grid(int t) -> Graph;

    /// Brick wall. Start from t rows of 2t vertices, (r, c) with 0 <= c < 2t.
    /// Every row is a horizontal path; rows r and r + 1 are joined at every
    /// column c with c = r (mod 2). The two corners left with degree one are
    /// deleted, leaving 2t^2 - 2 vertices and 3t^2 - 2t - 2 edges. Surviving
    /// vertices are numbered row-major.
    auto gen_wall(int t) -> Graph;

    /// Extra-vertex count per edge of the base graph, indexed like H.edges().
    struct SubdivisionSpec
    {
        std::vector<int> extra;
    };

    struct SubdivisionResult
    {
        Graph graph;
        SubdivisionEmbedding embedding;
    };

    auto random_subdivision_spec(const Graph & h, int max_extra, std::uint64_t seed) -> SubdivisionSpec;

    /// Base vertices keep their ids; subdivision vertices follow in edge order.
    /// A nonzero seed additionally applies a seeded relabelling of all ids.
    auto gen_subdivision(const Graph & h, const SubdivisionSpec & spec, std::uint64_t seed = 0) -> SubdivisionResult;

    struct ArrayInstance
    {
        Graph graph;
        Array array;
    };

    /// x_j = j for j < s; path i holds s + i*s .. s + i*s + s - 1 in order, and
    /// x_j sees exactly the j-th vertex of every path.
    auto gen_pd(int s) -> ArrayInstance;

    /// Extra vertices per path edge of gen_pd(s), keyed by that graph's edge
    /// (u < v). Absent edges stay unsubdivided.
    using PdExpansionSpec = std::map<Edge, int>;

    auto random_pd_expansion_spec(int s, int max_extra, std::uint64_t seed) -> PdExpansionSpec;

    /// Same layout as gen_pd except each path carries its subdivision vertices
    /// in place; the all-zero spec reproduces gen_pd(s) exactly.
    auto gen_pd_expansion(int s, const PdExpansionSpec & spec) -> ArrayInstance;

    /// Per-path attachment plan. paths[i][k] labels the k-th vertex of path i:
    /// -1 for a vertex with no stable neighbour, otherwise j for a neighbour of
    /// pi(j + 1). Each label sequence must list every j, be non-decreasing
    /// once the -1 entries are dropped, and keep consecutive occurrences of
    /// the same j fewer than h positions apart.
    struct ArrayProfile
    {
        int s = 1;
        int h = 1;
        std::vector<std::vector<int>> paths;
    };

    /// Empty string when consistent, else the reason.
    auto check_profile(const ArrayProfile &) -> std::string;

    auto pd_profile(int s) -> ArrayProfile;

    /// 1..3 attachments per stable vertex per path (exactly one when h = 1),
    /// same-vertex attachments spaced by 0..h-2 idle vertices, 0..2 idle
    /// vertices between blocks.
    auto random_array_profile(int s, int h, std::uint64_t seed) -> ArrayProfile;

    /// Layout as gen_pd (stable vertices first, then each path in order);
    /// with a relabel seed the ids are additionally shuffled.
    auto gen_array_instance(const ArrayProfile &, std::optional<std::uint64_t> relabel = std::nullopt) -> ArrayInstance;

    struct ConstellationParams
    {
        int s = 1, l = 1;
        int min_path = 1, max_path = 1;
        int d = 1;
        bool plain = true;
    };

    struct ConstellationInstance
    {
        Graph graph;
        Constellation constellation;
    };

    /// S = 0..s-1, then the paths. d-meager by construction; every path gets
    /// at least ceil(s/d) vertices. Non-plain requests with l >= 2 always get
    /// at least one edge between paths.
    auto gen_random_constellation(const ConstellationParams &, std::uint64_t seed) -> ConstellationInstance;

    /// Relabels g by perm (new id of v is perm[v]).
    auto relabel(const Graph & g, const VertexList & perm) -> Graph;
}

#endif
