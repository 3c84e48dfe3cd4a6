#include <pinched/oracles.hh>

#include "search_budget.hh"
#include "template.hh"

#include <algorithm>
#include <climits>
#include <numeric>

namespace pinched
{
    using detail::Budget;
    using detail::Exhausted;
    using detail::Template;

    namespace
    {
        /// Depth-first construction of an induced subdivision of a template,
        /// one template edge at a time. At every node G[U] equals the partial
        /// structure exactly: each added vertex is checked to see precisely its
        /// intended neighbours inside U.
        struct Engine
        {
            const Graph & g;
            const Template & t;
            int vertex_budget;
            Budget & budget;

            VertexList img;
            VertexSet used;
            /// closed neighbourhoods of finished interior vertices
            VertexSet dead;
            int used_count = 0;
            std::vector<bool> routed;
            std::vector<VertexList> route;
            int unplaced;
            int max_direct = -1;
            int direct_count = 0;

            Engine(const Graph & g_, const Template & t_, int vb, Budget & b) :
                g(g_), t(t_), vertex_budget(vb), budget(b),
                img(t_.order(), -1), used(g_.empty_set()), dead(g_.empty_set()),
                routed(t_.edges.size(), false), route(t_.edges.size()),
                unplaced(int(t_.order()))
            {
            }

            auto other_end(std::size_t e, int a) const -> int
            {
                return t.edges[e].a == a ? t.edges[e].b : t.edges[e].a;
            }

            auto symmetry_ok(int z, Vertex w) const -> bool
            {
                for (auto [lo, hi] : t.less_than) {
                    if (lo == z && img[hi] != -1 && ! (w < img[hi]))
                        return false;
                    if (hi == z && img[lo] != -1 && ! (img[lo] < w))
                        return false;
                }
                return true;
            }

            /// Internal vertices still needed by unrouted edges, by length alone.
            auto pending_lower_bound(std::size_t except) const -> int
            {
                int lb = 0;
                for (std::size_t e = 0 ; e < t.edges.size() ; ++e)
                    if (e != except && ! routed[e])
                        lb += std::max(0, t.edges[e].min_length - 1);
                return lb;
            }

            auto set_route(std::size_t e, VertexList path, int from) -> void
            {
                if (from != t.edges[e].a)
                    std::reverse(path.begin(), path.end());
                route[e] = std::move(path);
                routed[e] = true;
            }

            /// Vertices outside U and not dead whose neighbours in U all lie in
            /// `ends`; BFS distance in edges from p to q through them.
            auto free_distance(Vertex p, Vertex q, const VertexSet & avoid) const -> int
            {
                auto seen = g.empty_set();
                VertexList layer{ p };
                seen.set(p);
                int dist = 0;
                while (! layer.empty()) {
                    ++dist;
                    VertexList next;
                    for (auto v : layer)
                        for (auto w : g.neighbours(v)) {
                            if (w == q && v != p)
                                return dist;
                            if (seen.test(w) || used.test(w) || dead.test(w) || g.row(w).intersects(avoid))
                                continue;
                            seen.set(w);
                            next.push_back(w);
                        }
                    layer = std::move(next);
                }
                return -1;
            }

            auto checkpoint() -> bool
            {
                budget.tick();

                int lb = used_count + unplaced;
                for (std::size_t e = 0 ; e < t.edges.size() ; ++e) {
                    if (routed[e])
                        continue;
                    auto & te = t.edges[e];
                    int need = std::max(0, te.min_length - 1);
                    if (img[te.a] != -1 && img[te.b] != -1) {
                        auto avoid = used;
                        avoid.reset(img[te.a]);
                        avoid.reset(img[te.b]);
                        int d = free_distance(img[te.a], img[te.b], avoid);
                        if (d < 0 || d > te.max_length)
                            return false;
                        need = std::max(need, d - 1);
                    }
                    lb += need;
                }
                if (lb > vertex_budget)
                    return false;

                for (int z = 0 ; z < int(t.order()) ; ++z) {
                    if (img[z] == -1)
                        continue;
                    int need = 0;
                    for (auto e : t.incident[z])
                        need += ! routed[e];
                    if (need == 0)
                        continue;
                    int have = 0;
                    for (auto w : g.neighbours(img[z]))
                        have += ! used.test(w) && ! dead.test(w);
                    if (have < need)
                        return false;
                }

                // next action: close a cycle, else grow from the placed side,
                // else seed a new component
                for (std::size_t e = 0 ; e < t.edges.size() ; ++e)
                    if (! routed[e] && img[t.edges[e].a] != -1 && img[t.edges[e].b] != -1)
                        return start_route(e, t.edges[e].a);

                int best_b = -1, best_links = -1;
                std::size_t best_e = 0;
                for (std::size_t e = 0 ; e < t.edges.size() ; ++e) {
                    if (routed[e])
                        continue;
                    auto & te = t.edges[e];
                    int b = -1;
                    if (img[te.a] != -1 && img[te.b] == -1)
                        b = te.b;
                    else if (img[te.b] != -1 && img[te.a] == -1)
                        b = te.a;
                    if (b == -1)
                        continue;
                    int links = 0;
                    for (auto f : t.incident[b])
                        links += img[other_end(f, b)] != -1;
                    if (links > best_links) {
                        best_links = links;
                        best_b = b;
                        best_e = e;
                    }
                }
                if (best_b != -1)
                    return start_route(best_e, other_end(best_e, best_b));

                if (unplaced == 0)
                    return true;

                int seed = -1;
                for (int z = 0 ; z < int(t.order()) ; ++z)
                    if (img[z] == -1 && (seed == -1 || t.incident[z].size() > t.incident[seed].size()))
                        seed = z;
                for (Vertex v = 0 ; v < g.order() ; ++v) {
                    if (used.test(v) || dead.test(v) || g.row(v).intersects(used))
                        continue;
                    if (g.degree(v) < int(t.incident[seed].size()) || ! symmetry_ok(seed, v))
                        continue;
                    place(seed, v);
                    if (checkpoint())
                        return true;
                    unplace(seed, v);
                }
                return false;
            }

            auto place(int z, Vertex v) -> void
            {
                img[z] = v;
                used.set(v);
                ++used_count;
                --unplaced;
            }

            auto unplace(int z, Vertex v) -> void
            {
                img[z] = -1;
                used.reset(v);
                --used_count;
                ++unplaced;
            }

            auto start_route(std::size_t e, int from) -> bool
            {
                VertexList cur{ img[from] };
                return extend(e, from, other_end(e, from), cur);
            }

            /// Finishes a route: interior vertices poison their neighbourhoods.
            auto finish_and_continue(std::size_t e, int from, const VertexList & cur) -> bool
            {
                auto saved_dead = dead;
                for (std::size_t i = 1 ; i + 1 < cur.size() ; ++i) {
                    dead |= g.row(cur[i]);
                    dead.set(cur[i]);
                }
                set_route(e, cur, from);
                bool ok = checkpoint();
                if (! ok) {
                    routed[e] = false;
                    route[e].clear();
                    dead = saved_dead;
                }
                return ok;
            }

            auto extend(std::size_t e, int from, int to, VertexList & cur) -> bool
            {
                budget.tick();
                auto & te = t.edges[e];
                auto last = cur.back();
                int edges = int(cur.size()) - 1;

                int rest = used_count + unplaced + pending_lower_bound(e) + std::max(0, te.min_length - edges - 1);
                if (rest > vertex_budget)
                    return false;

                auto forbid_internal = used;
                forbid_internal.reset(last);

                if (img[to] != -1) {
                    auto target = img[to];
                    auto forbid = forbid_internal;
                    forbid.reset(target);
                    for (auto w : g.neighbours(last)) {
                        if (used.test(w) || dead.test(w) || g.row(w).intersects(forbid))
                            continue;
                        if (g.adjacent(w, target)) {
                            int length = edges + 2;
                            if (length < te.min_length || length > te.max_length)
                                continue;
                            if (used_count + 1 + unplaced + pending_lower_bound(e) > vertex_budget)
                                continue;
                            cur.push_back(w);
                            used.set(w);
                            ++used_count;
                            cur.push_back(target);
                            bool ok = finish_and_continue(e, from, cur);
                            cur.pop_back();
                            if (ok)
                                return true;
                            used.reset(w);
                            --used_count;
                            cur.pop_back();
                        }
                        else {
                            if (edges + 3 > te.max_length)
                                continue;
                            cur.push_back(w);
                            used.set(w);
                            ++used_count;
                            if (extend(e, from, to, cur))
                                return true;
                            used.reset(w);
                            --used_count;
                            cur.pop_back();
                        }
                    }
                    return false;
                }

                // far end unplaced: each step either places it or continues
                auto allowed = g.empty_set();
                for (auto f : t.incident[to]) {
                    if (f == e || routed[f] || t.edges[f].min_length > 1)
                        continue;
                    auto z = other_end(f, to);
                    if (img[z] != -1)
                        allowed.set(img[z]);
                }
                auto forbid_branch = forbid_internal - allowed;
                int want_degree = int(t.incident[to].size());

                for (auto w : g.neighbours(last)) {
                    if (used.test(w) || dead.test(w))
                        continue;
                    int length = edges + 1;
                    if (length >= te.min_length && length <= te.max_length && g.degree(w) >= want_degree
                            && ! g.row(w).intersects(forbid_branch) && symmetry_ok(to, w)) {
                        if (try_place_end(e, from, to, w, cur, allowed))
                            return true;
                    }
                    if (edges + 2 <= te.max_length && ! g.row(w).intersects(forbid_internal)) {
                        cur.push_back(w);
                        used.set(w);
                        ++used_count;
                        if (extend(e, from, to, cur))
                            return true;
                        used.reset(w);
                        --used_count;
                        cur.pop_back();
                    }
                }
                return false;
            }

            auto try_place_end(std::size_t e, int from, int to, Vertex w, VertexList & cur, const VertexSet & allowed) -> bool
            {
                // adjacency to another placed template neighbour forces that
                // edge to be realised directly
                std::vector<std::size_t> direct;
                auto touching = g.row(w) & allowed;
                touching.reset(cur.back());
                bool feasible = true;
                detail::for_each_bit(touching, [&] (Vertex zimg) {
                    if (! feasible)
                        return;
                    for (auto f : t.incident[to]) {
                        if (f == e || routed[f] || t.edges[f].min_length > 1)
                            continue;
                        if (std::find(direct.begin(), direct.end(), f) != direct.end())
                            continue;
                        if (img[other_end(f, to)] == zimg) {
                            direct.push_back(f);
                            return;
                        }
                    }
                    feasible = false;
                });
                if (! feasible)
                    return false;
                int added = int(direct.size()) + (cur.size() == 1);
                if (max_direct >= 0 && direct_count + added > max_direct)
                    return false;

                direct_count += added;
                place(to, w);
                for (auto f : direct)
                    set_route(f, VertexList{ w, img[other_end(f, to)] }, to);
                cur.push_back(w);
                bool ok = finish_and_continue(e, from, cur);
                cur.pop_back();
                if (ok)
                    return true;
                for (auto f : direct) {
                    routed[f] = false;
                    route[f].clear();
                }
                unplace(to, w);
                direct_count -= added;
                return false;
            }
        };
    }

    auto find_induced_subdivision(const Graph & g, const Graph & base, int vertex_budget,
            SearchLimits limits, const SubdivisionBounds & bounds) -> SearchResult<SubdivisionEmbedding>
    {
        SearchResult<SubdivisionEmbedding> result;
        auto t = detail::make_template(base, bounds, false);
        if (bounds.max_unsubdivided >= 0 && t.order() != std::size_t(base.order()))
            throw std::invalid_argument("find_induced_subdivision: max_unsubdivided needs a base without degree-2 vertices");

        if (t.order() > std::size_t(g.order()) || base.order() > vertex_budget)
            return result;

        Budget budget(limits);
        Engine engine(g, t, vertex_budget, budget);
        engine.max_direct = bounds.max_unsubdivided;
        try {
            if (engine.checkpoint()) {
                auto emb = detail::expand_subdivision(g, base, t, engine.img, engine.route);
                if (auto v = validate_subdivision_embedding(g, emb) ; ! v)
                    throw std::logic_error("find_induced_subdivision produced an invalid embedding: " + to_string(v));
                if (bounds.max_unsubdivided >= 0 && std::count_if(emb.edge_paths.begin(), emb.edge_paths.end(),
                            [] (const VertexList & p) { return p.size() == 2; }) > bounds.max_unsubdivided)
                    throw std::logic_error("find_induced_subdivision exceeded max_unsubdivided");
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
