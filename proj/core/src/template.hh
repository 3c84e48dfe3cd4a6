#ifndef PINCHED_SRC_TEMPLATE_HH
#define PINCHED_SRC_TEMPLATE_HH 1

#include <pinched/oracles.hh>

#include <climits>
#include <utility>
#include <vector>

namespace pinched::detail
{
    /// A base graph with its degree-2 vertices suppressed. Each template edge
    /// stands for a chain of base edges; its length bounds are the sums of
    /// the chain's per-edge bounds. Parallel template edges are allowed.
    struct TemplateEdge
    {
        int a = 0, b = 0;
        int min_length = 1;
        int max_length = INT_MAX;
        /// base vertices from the a-end to the b-end
        VertexList chain;
        /// base.edges() index of each chain step, with its own bounds
        std::vector<std::size_t> base_edge;
        std::vector<int> step_min, step_max;
    };

    struct Template
    {
        /// base vertex of each template vertex
        VertexList vertex;
        std::vector<TemplateEdge> edges;
        std::vector<std::vector<std::size_t>> incident;
        /// symmetry breaking: img[first] < img[second]
        std::vector<std::pair<int, int>> less_than;

        auto order() const -> std::size_t { return vertex.size(); }
    };

    /// With drop_isolated, base vertices of degree zero get no template vertex.
    auto make_template(const Graph & base, const SubdivisionBounds &, bool drop_isolated) -> Template;

    /// Splits a path of `total` units over the chain steps within their bounds.
    auto split_lengths(const TemplateEdge &, int total) -> std::vector<int>;

    auto expand_subdivision(const Graph & g, const Graph & base, const Template &,
            const VertexList & img, const std::vector<VertexList> & route) -> SubdivisionEmbedding;
}

#endif
