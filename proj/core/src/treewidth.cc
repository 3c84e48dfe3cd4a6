#include <pinched/generators.hh>
#include <pinched/oracles.hh>

#include <algorithm>
#include <bit>
#include <cstdint>

namespace pinched
{
    auto decomposition_from_order(const Graph & g, const VertexList & order) -> TreewidthResult
    {
        int n = g.order();
        if (int(order.size()) != n)
            throw std::invalid_argument("decomposition_from_order: order must list every vertex once");
        std::vector<int> position(std::size_t(n), -1);
        for (std::size_t i = 0 ; i < order.size() ; ++i) {
            auto v = order[i];
            if (! g.contains(v) || position[v] != -1)
                throw std::invalid_argument("decomposition_from_order: order must list every vertex once");
            position[v] = int(i);
        }

        TreewidthResult result;
        result.elimination_order = order;
        auto & td = result.decomposition;
        td.graph = g.fingerprint();
        if (n == 0) {
            td.bags.push_back({});
            return result;
        }

        std::vector<VertexSet> adj;
        for (Vertex v = 0 ; v < n ; ++v)
            adj.push_back(g.row(v));

        std::vector<int> parent(std::size_t(n), -1);
        td.bags.resize(std::size_t(n));
        for (std::size_t i = 0 ; i < order.size() ; ++i) {
            auto v = order[i];
            auto nb = adj[v];
            VertexList bag{ v };
            int earliest = -1;
            for (auto w = nb.find_first() ; w != VertexSet::npos ; w = nb.find_next(w)) {
                bag.push_back(Vertex(w));
                if (earliest == -1 || position[w] < position[earliest])
                    earliest = int(w);
                adj[w] |= nb;
                adj[w].reset(w);
                adj[w].reset(v);
            }
            std::sort(bag.begin(), bag.end());
            result.width = std::max(result.width, int(bag.size()) - 1);
            td.bags[i] = std::move(bag);
            if (earliest != -1)
                parent[i] = position[earliest];
        }

        int previous_root = -1;
        for (int i = 0 ; i < n ; ++i) {
            if (parent[i] != -1)
                td.tree_edges.emplace_back(parent[i], i);
            else {
                if (previous_root != -1)
                    td.tree_edges.emplace_back(previous_root, i);
                previous_root = i;
            }
        }
        td.width = result.width;
        return result;
    }

    auto treewidth_exact(const Graph & g, int cap) -> TreewidthResult
    {
        int n = g.order();
        if (cap > 30)
            cap = 30;
        if (n > cap)
            throw TreewidthCapExceeded("treewidth_exact: " + std::to_string(n) + " vertices exceeds the cap of " + std::to_string(cap));
        if (n == 0)
            return decomposition_from_order(g, {});

        using Mask = std::uint32_t;
        std::vector<Mask> adj(std::size_t(n), 0);
        for (auto [u, v] : g.edges()) {
            adj[u] |= Mask(1) << v;
            adj[v] |= Mask(1) << u;
        }

        // |Q(S, v)|: vertices outside S + v reachable from v through S
        auto q_size = [&] (Mask s, int v) -> int {
            Mask inside = 0, todo = adj[v] & s;
            Mask seen = adj[v];
            while (todo) {
                int u = std::countr_zero(todo);
                todo &= todo - 1;
                inside |= Mask(1) << u;
                seen |= adj[u];
                todo |= adj[u] & s & ~inside;
            }
            return std::popcount(seen & ~s & ~(Mask(1) << v));
        };

        Mask full = (n == 32) ? ~Mask(0) : ((Mask(1) << n) - 1);
        std::vector<std::int8_t> tw(std::size_t(full) + 1, 0);
        tw[0] = -1;
        for (Mask s = 1 ; s <= full && s != 0 ; ++s) {
            int best = 127;
            for (Mask rest = s ; rest ; rest &= rest - 1) {
                int v = std::countr_zero(rest);
                Mask without = s & ~(Mask(1) << v);
                int prev = tw[without];
                if (prev >= best)
                    continue;
                int val = std::max(prev, q_size(without, v));
                best = std::min(best, val);
            }
            tw[s] = std::int8_t(best);
            if (s == full)
                break;
        }

        VertexList reversed;
        Mask s = full;
        while (s) {
            for (Mask rest = s ; rest ; rest &= rest - 1) {
                int v = std::countr_zero(rest);
                Mask without = s & ~(Mask(1) << v);
                if (std::max<int>(tw[without], q_size(without, v)) == tw[s]) {
                    reversed.push_back(v);
                    s = without;
                    break;
                }
            }
        }
        VertexList order(reversed.rbegin(), reversed.rend());
        auto result = decomposition_from_order(g, order);
        if (result.width != tw[full])
            throw std::logic_error("treewidth_exact: reconstructed width disagrees with the programme");
        return result;
    }

    auto treewidth_upper_minfill(const Graph & g) -> TreewidthResult
    {
        int n = g.order();
        std::vector<VertexSet> adj;
        for (Vertex v = 0 ; v < n ; ++v)
            adj.push_back(g.row(v));
        auto alive = g.empty_set();
        alive.set();

        VertexList order;
        for (int step = 0 ; step < n ; ++step) {
            Vertex best = -1;
            long best_fill = -1;
            for (auto v = alive.find_first() ; v != VertexSet::npos ; v = alive.find_next(v)) {
                auto nb = adj[v] & alive;
                long fill = 0;
                for (auto a = nb.find_first() ; a != VertexSet::npos ; a = nb.find_next(a))
                    fill += long((nb - adj[a]).count()) - 1;
                fill /= 2;
                if (best == -1 || fill < best_fill) {
                    best = Vertex(v);
                    best_fill = fill;
                }
            }
            auto nb = adj[best] & alive;
            for (auto a = nb.find_first() ; a != VertexSet::npos ; a = nb.find_next(a)) {
                adj[a] |= nb;
                adj[a].reset(a);
            }
            alive.reset(best);
            order.push_back(best);
        }
        return decomposition_from_order(g, order);
    }

    namespace
    {
        auto biclique_sides(const Graph & t) -> std::optional<std::pair<int, int>>
        {
            if (t.order() < 2)
                return std::nullopt;
            std::vector<int> side(std::size_t(t.order()), -1);
            side[0] = 0;
            VertexList stack{ 0 };
            while (! stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                for (auto w : t.neighbours(v)) {
                    if (side[w] == -1) {
                        side[w] = 1 - side[v];
                        stack.push_back(w);
                    }
                    else if (side[w] == side[v])
                        return std::nullopt;
                }
            }
            if (std::count(side.begin(), side.end(), -1))
                return std::nullopt;
            auto a = int(std::count(side.begin(), side.end(), 0));
            auto b = t.order() - a;
            if (t.size() != std::int64_t(a) * b)
                return std::nullopt;
            return std::pair{ a, b };
        }

        /// Degeneracy: a lower bound on treewidth.
        auto degeneracy(const Graph & t) -> int
        {
            std::vector<int> deg(std::size_t(t.order()));
            std::vector<bool> gone(std::size_t(t.order()), false);
            for (Vertex v = 0 ; v < t.order() ; ++v)
                deg[v] = t.degree(v);
            int result = 0;
            for (int step = 0 ; step < t.order() ; ++step) {
                Vertex pick = -1;
                for (Vertex v = 0 ; v < t.order() ; ++v)
                    if (! gone[v] && (pick == -1 || deg[v] < deg[pick]))
                        pick = v;
                result = std::max(result, deg[pick]);
                gone[pick] = true;
                for (auto w : t.neighbours(pick))
                    if (! gone[w])
                        --deg[w];
            }
            return result;
        }
    }

    auto treewidth_lower_via_minor(const Graph & g, const MinorModelWitness & m) -> int
    {
        if (auto v = validate_minor_model(g, m) ; ! v)
            throw InvalidWitness("treewidth_lower_via_minor: " + to_string(v));
        auto & t = m.target;
        auto n = std::int64_t(t.order());
        if (n == 0)
            return 0;
        if (t.size() == n * (n - 1) / 2)
            return int(n) - 1;
        if (auto sides = biclique_sides(t))
            return std::min(sides->first, sides->second);
        if (t.order() <= default_treewidth_cap)
            return treewidth_exact(t).width;
        return degeneracy(t);
    }

    auto array_minor_model(const Graph & g, const Array & arr) -> MinorModelWitness
    {
        auto s = int(arr.order.size());
        MinorModelWitness m{ g.fingerprint(), gen_biclique(s, s), {} };
        for (auto x : arr.order)
            m.branch_sets.push_back({ x });
        for (auto & p : arr.paths)
            m.branch_sets.push_back(p);
        return m;
    }
}
