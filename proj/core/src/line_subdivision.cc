#include <pinched/oracles.hh>

#include "search_budget.hh"
#include "template.hh"

#include <algorithm>

namespace pinched
{
    using detail::Budget;
    using detail::Exhausted;
    using detail::Template;

    namespace
    {
        /// Builds the line graph of a subdivision as vertex-disjoint induced
        /// paths Q_e, one per template edge, whose ends at a common template
        /// vertex form a clique and which see nothing else. Lengths are counted
        /// in vertices here: a base edge subdivided into k edges contributes k.
        struct LineEngine
        {
            const Graph & g;
            const Template & t;
            int vertex_budget;
            Budget & budget;

            VertexSet used;
            int used_count = 0;
            std::vector<bool> routed;
            std::vector<VertexList> route;
            std::vector<VertexList> ends_at;
            int max_direct = -1;
            int direct_count = 0;

            LineEngine(const Graph & g_, const Template & t_, int vb, Budget & b) :
                g(g_), t(t_), vertex_budget(vb), budget(b), used(g_.empty_set()),
                routed(t_.edges.size(), false), route(t_.edges.size()), ends_at(t_.order())
            {
            }

            auto pending_lower_bound(std::size_t except) const -> int
            {
                int lb = 0;
                for (std::size_t e = 0 ; e < t.edges.size() ; ++e)
                    if (e != except && ! routed[e])
                        lb += t.edges[e].min_length;
                return lb;
            }

            /// N(w) inside U is exactly `expected`.
            auto sees_exactly(Vertex w, const VertexSet & expected) const -> bool
            {
                return (g.row(w) & used) == expected;
            }

            auto ends_set(int z) const -> VertexSet
            {
                return g.make_set(ends_at[z]);
            }

            auto checkpoint() -> bool
            {
                budget.tick();
                if (used_count + pending_lower_bound(t.edges.size()) > vertex_budget)
                    return false;

                std::size_t pick = t.edges.size();
                int pick_score = -1;
                for (std::size_t e = 0 ; e < t.edges.size() ; ++e) {
                    if (routed[e])
                        continue;
                    int score = ! ends_at[t.edges[e].a].empty() + ! ends_at[t.edges[e].b].empty();
                    if (score > pick_score) {
                        pick = e;
                        pick_score = score;
                    }
                }
                if (pick == t.edges.size())
                    return true;

                auto & te = t.edges[pick];
                int from = te.a, to = te.b;
                if (ends_at[from].empty() && ! ends_at[to].empty())
                    std::swap(from, to);

                auto from_ends = ends_set(from), to_ends = ends_set(to);
                VertexSet cand = ~used;
                for (auto v : ends_at[from])
                    cand &= g.row(v);

                for (auto w = cand.find_first() ; w != VertexSet::npos ; w = cand.find_next(w)) {
                    auto v = Vertex(w);
                    budget.tick();
                    // single-vertex path: both clique conditions at once
                    if (te.min_length <= 1 && sees_exactly(v, from_ends | to_ends)) {
                        if (finish(pick, from, to, VertexList{ v }))
                            return true;
                    }
                    if (te.max_length >= 2 && sees_exactly(v, from_ends)) {
                        VertexList cur{ v };
                        used.set(v);
                        ++used_count;
                        if (extend(pick, from, to, cur, to_ends))
                            return true;
                        used.reset(v);
                        --used_count;
                    }
                }
                return false;
            }

            auto finish(std::size_t e, int from, int to, VertexList cur) -> bool
            {
                // a single line-graph vertex is an unsubdivided base edge
                int direct = cur.size() == 1;
                if (max_direct >= 0 && direct_count + direct > max_direct)
                    return false;
                direct_count += direct;
                VertexList added;
                for (auto v : cur)
                    if (! used.test(v)) {
                        used.set(v);
                        ++used_count;
                        added.push_back(v);
                    }
                ends_at[from].push_back(cur.front());
                ends_at[to].push_back(cur.back());
                if (from != t.edges[e].a)
                    std::reverse(cur.begin(), cur.end());
                route[e] = std::move(cur);
                routed[e] = true;

                if (checkpoint())
                    return true;

                routed[e] = false;
                route[e].clear();
                ends_at[from].pop_back();
                ends_at[to].pop_back();
                for (auto v : added) {
                    used.reset(v);
                    --used_count;
                }
                direct_count -= direct;
                return false;
            }

            auto extend(std::size_t e, int from, int to, VertexList & cur, const VertexSet & to_ends) -> bool
            {
                budget.tick();
                auto & te = t.edges[e];
                int count = int(cur.size());
                if (used_count + std::max(0, te.min_length - count) + pending_lower_bound(e) > vertex_budget)
                    return false;

                auto last = cur.back();
                auto only_last = g.empty_set();
                only_last.set(last);
                auto final_view = only_last | to_ends;

                for (auto w : g.neighbours(last)) {
                    if (used.test(w))
                        continue;
                    budget.tick();
                    if (count + 1 >= te.min_length && count + 1 <= te.max_length && sees_exactly(w, final_view)) {
                        auto path = cur;
                        path.push_back(w);
                        if (finish(e, from, to, path))
                            return true;
                    }
                    if (count + 2 <= te.max_length && sees_exactly(w, only_last)) {
                        cur.push_back(w);
                        used.set(w);
                        ++used_count;
                        if (extend(e, from, to, cur, to_ends))
                            return true;
                        used.reset(w);
                        --used_count;
                        cur.pop_back();
                    }
                }
                return false;
            }
        };
    }

    auto find_induced_line_subdivision(const Graph & g, const Graph & base, int vertex_budget,
            SearchLimits limits, const SubdivisionBounds & bounds) -> SearchResult<LineSubdivisionEmbedding>
    {
        SearchResult<LineSubdivisionEmbedding> result;
        auto t = detail::make_template(base, bounds, true);
        if (bounds.max_unsubdivided >= 0) {
            for (auto & te : t.edges)
                if (te.chain.size() != 2)
                    throw std::invalid_argument("find_induced_line_subdivision: max_unsubdivided needs a base without degree-2 vertices");
        }
        if (base.size() > vertex_budget || base.size() > g.order())
            return result;

        Budget budget(limits);
        LineEngine engine(g, t, vertex_budget, budget);
        engine.max_direct = bounds.max_unsubdivided;
        try {
            if (engine.checkpoint()) {
                auto base_edges = base.edges();
                LineSubdivisionEmbedding emb{ g.fingerprint(), base, std::vector<VertexList>(base_edges.size()) };
                for (std::size_t e = 0 ; e < t.edges.size() ; ++e) {
                    auto & te = t.edges[e];
                    auto & path = engine.route[e];
                    auto parts = detail::split_lengths(te, int(path.size()));
                    int pos = 0;
                    for (std::size_t k = 0 ; k < parts.size() ; ++k) {
                        VertexList piece(path.begin() + pos, path.begin() + pos + parts[k]);
                        if (te.chain[k] > te.chain[k + 1])
                            std::reverse(piece.begin(), piece.end());
                        emb.edge_paths[te.base_edge[k]] = std::move(piece);
                        pos += parts[k];
                    }
                }
                if (auto v = validate_line_subdivision_embedding(g, emb) ; ! v)
                    throw std::logic_error("find_induced_line_subdivision produced an invalid embedding: " + to_string(v));
                result.status = SearchStatus::found;
                result.witness = std::move(emb);
            }
        }
        catch (const Exhausted &) {
            result.status = SearchStatus::exhausted;
        }
        result.nodes = budget.nodes();
        return result;
    }
}
