#include <pinched/oracles.hh>

#include "search_budget.hh"

#include <algorithm>
#include <numeric>

namespace pinched
{
    using detail::Budget;
    using detail::Exhausted;

    namespace
    {
        struct Candidate
        {
            VertexList path;
            /// N[path] in G - x
            VertexSet closed;
        };

        struct Prefix
        {
            VertexList path;
            /// N[path minus its last vertex], plus x: where the next vertex may not go
            VertexSet forbid;
            /// N[path] - x
            VertexSet closed;
        };

        auto dominated(const VertexSet & closed, const std::vector<Candidate> & kept) -> bool
        {
            return std::any_of(kept.begin(), kept.end(), [&] (const Candidate & q) { return q.closed.is_subset_of(closed); });
        }

        /// All x-cycle paths (ends in N(x), interior outside N[x], at least h
        /// edges) that are not dominated: Q is dropped when some kept P has
        /// N[P] contained in N[Q], since any selection using Q may use P
        /// instead. Generated by increasing length, then lexicographically.
        auto candidates_for(const Graph & g, Vertex x, int h, Budget & budget) -> std::vector<Candidate>
        {
            auto nx = g.row(x);
            auto closed_row = [&] (Vertex v) {
                auto r = g.row(v);
                r.set(v);
                r.reset(x);
                return r;
            };

            std::vector<Candidate> kept;
            std::vector<Prefix> frontier;
            for (auto a : g.neighbours(x)) {
                auto f = g.empty_set();
                f.set(x);
                frontier.push_back(Prefix{ { a }, f, closed_row(a) });
            }

            int length = 0;
            while (! frontier.empty()) {
                ++length;
                std::vector<Prefix> next;
                std::vector<Candidate> complete;
                for (auto & pre : frontier) {
                    auto last = pre.path.back();
                    auto forbid_next = pre.forbid | closed_row(last);
                    forbid_next.set(x);
                    for (auto w : g.neighbours(last)) {
                        if (w == x || pre.forbid.test(w))
                            continue;
                        budget.tick();
                        if (nx.test(w)) {
                            if (w > pre.path.front() && length >= h) {
                                auto path = pre.path;
                                path.push_back(w);
                                complete.push_back(Candidate{ std::move(path), pre.closed | closed_row(w) });
                            }
                            continue;
                        }
                        auto path = pre.path;
                        path.push_back(w);
                        next.push_back(Prefix{ std::move(path), forbid_next, pre.closed | closed_row(w) });
                    }
                }

                std::sort(complete.begin(), complete.end(), [] (const Candidate & a, const Candidate & b) { return a.path < b.path; });
                for (auto & cand : complete)
                    if (! dominated(cand.closed, kept))
                        kept.push_back(std::move(cand));

                frontier.clear();
                for (auto & pre : next)
                    if (! dominated(pre.closed, kept))
                        frontier.push_back(std::move(pre));
            }
            return kept;
        }

        struct CliqueSearch
        {
            const std::vector<VertexSet> & compat;
            Budget & budget;
            int want;
            std::vector<std::size_t> chosen;

            auto search(const VertexSet & allowed) -> bool
            {
                budget.tick();
                if (int(chosen.size()) == want)
                    return true;
                if (int(allowed.count()) < want - int(chosen.size()))
                    return false;
                for (auto i = allowed.find_first() ; i != VertexSet::npos ; i = allowed.find_next(i)) {
                    chosen.push_back(i);
                    auto rest = allowed & compat[i];
                    // only later indices, so each selection is tried once
                    for (auto j = rest.find_first() ; j != VertexSet::npos && j <= i ; j = rest.find_next(j))
                        rest.reset(j);
                    if (search(rest))
                        return true;
                    chosen.pop_back();
                }
                return false;
            }
        };
    }

    auto find_pinch_witness(const Graph & g, int c, int h, SearchLimits limits) -> SearchResult<PinchWitness>
    {
        if (c < 1 || h < 1)
            throw std::invalid_argument("find_pinch_witness: need c >= 1 and h >= 1");

        SearchResult<PinchWitness> result;
        Budget budget(limits);

        VertexList hubs(static_cast<std::size_t>(g.order()));
        std::iota(hubs.begin(), hubs.end(), 0);
        std::stable_sort(hubs.begin(), hubs.end(), [&] (Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

        try {
            for (auto x : hubs) {
                if (g.degree(x) < 2 * c)
                    break;
                auto cands = candidates_for(g, x, h, budget);
                if (int(cands.size()) < c)
                    continue;

                std::vector<VertexSet> compat(cands.size(), VertexSet(cands.size()));
                for (std::size_t i = 0 ; i < cands.size() ; ++i)
                    for (std::size_t j = i + 1 ; j < cands.size() ; ++j) {
                        bool ok = std::none_of(cands[j].path.begin(), cands[j].path.end(),
                                [&] (Vertex v) { return cands[i].closed.test(v); });
                        compat[i][j] = ok;
                        compat[j][i] = ok;
                    }

                CliqueSearch cs{ compat, budget, c, {} };
                VertexSet all(cands.size());
                all.set();
                if (cs.search(all)) {
                    PinchWitness w{ g.fingerprint(), x, {} };
                    for (auto i : cs.chosen) {
                        VertexList cycle{ x };
                        cycle.insert(cycle.end(), cands[i].path.begin(), cands[i].path.end());
                        w.cycles.push_back(std::move(cycle));
                    }
                    result.status = SearchStatus::found;
                    result.witness = std::move(w);
                    break;
                }
            }
        }
        catch (const Exhausted &) {
            result.status = SearchStatus::exhausted;
            result.witness.reset();
        }
        result.nodes = budget.nodes();
        return result;
    }
}
