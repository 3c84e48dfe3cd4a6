#include <pinched/oracles.hh>

#include "search_budget.hh"

#include <algorithm>

namespace pinched
{
    using detail::Budget;
    using detail::Exhausted;

    auto to_string(SearchStatus s) -> std::string
    {
        switch (s) {
            case SearchStatus::found:     return "found";
            case SearchStatus::none:      return "none";
            case SearchStatus::exhausted: return "exhausted";
        }
        return "?";
    }

    namespace
    {
        /// Pattern vertices in an order where each vertex after the first of its
        /// component has an earlier neighbour; within that, higher degree first.
        auto pattern_order(const Graph & p) -> VertexList
        {
            VertexList order;
            std::vector<bool> taken(std::size_t(p.order()), false);
            while (int(order.size()) < p.order()) {
                // seed a new component with its highest-degree vertex
                Vertex best = -1;
                for (Vertex v = 0 ; v < p.order() ; ++v)
                    if (! taken[v] && (best == -1 || p.degree(v) > p.degree(best)))
                        best = v;
                taken[best] = true;
                order.push_back(best);
                while (true) {
                    // next: most connections to already-ordered vertices
                    Vertex next = -1;
                    int next_links = 0;
                    for (Vertex v = 0 ; v < p.order() ; ++v) {
                        if (taken[v])
                            continue;
                        int links = 0;
                        for (auto o : order)
                            links += p.adjacent(v, o);
                        if (links > next_links || (links == next_links && links > 0 && p.degree(v) > p.degree(next))) {
                            next = v;
                            next_links = links;
                        }
                    }
                    if (next == -1)
                        break;
                    taken[next] = true;
                    order.push_back(next);
                }
            }
            return order;
        }

        struct EmbeddingSearch
        {
            const Graph & g;
            const Graph & p;
            Budget & budget;
            VertexList order;
            VertexList map;
            VertexSet used;

            auto search(std::size_t depth) -> bool
            {
                budget.tick();
                if (depth == order.size())
                    return true;

                auto pv = order[depth];
                VertexSet cand = ~used;
                for (std::size_t i = 0 ; i < depth ; ++i) {
                    auto image = map[order[i]];
                    if (p.adjacent(pv, order[i]))
                        cand &= g.row(image);
                    else
                        cand -= g.row(image);
                }

                for (auto v = cand.find_first() ; v != VertexSet::npos ; v = cand.find_next(v)) {
                    if (g.degree(Vertex(v)) < p.degree(pv))
                        continue;
                    map[pv] = Vertex(v);
                    used.set(v);
                    if (search(depth + 1))
                        return true;
                    used.reset(v);
                }
                map[pv] = -1;
                return false;
            }
        };
    }

    auto find_induced_embedding(const Graph & g, const Graph & pattern, SearchLimits limits) -> SearchResult<EmbeddingWitness>
    {
        SearchResult<EmbeddingWitness> result;
        if (pattern.order() > g.order() || pattern.size() > g.size())
            return result;

        Budget budget(limits);
        EmbeddingSearch s{ g, pattern, budget, pattern_order(pattern),
            VertexList(static_cast<std::size_t>(pattern.order()), -1), g.empty_set() };
        try {
            if (s.search(0)) {
                result.status = SearchStatus::found;
                result.witness = EmbeddingWitness{ g.fingerprint(), pattern, s.map };
            }
        }
        catch (const Exhausted &) {
            result.status = SearchStatus::exhausted;
        }
        result.nodes = budget.nodes();
        return result;
    }
}
