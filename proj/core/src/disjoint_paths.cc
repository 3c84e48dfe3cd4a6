#include <pinched/oracles.hh>

#include <algorithm>
#include <queue>

namespace pinched
{
    namespace
    {
        struct Arc
        {
            int to;
            int cap;
            std::size_t rev;
        };

        struct Network
        {
            std::vector<std::vector<Arc>> out;

            explicit Network(int nodes) : out(std::size_t(nodes)) {}

            auto add(int a, int b, int cap) -> void
            {
                out[a].push_back(Arc{ b, cap, out[b].size() });
                out[b].push_back(Arc{ a, 0, out[a].size() - 1 });
            }

            /// One shortest augmenting path; false if none.
            auto augment(int s, int t) -> bool
            {
                std::vector<std::pair<int, std::size_t>> via(out.size(), { -1, 0 });
                std::queue<int> q;
                q.push(s);
                via[s] = { s, 0 };
                while (! q.empty() && via[t].first == -1) {
                    auto a = q.front();
                    q.pop();
                    for (std::size_t i = 0 ; i < out[a].size() ; ++i) {
                        auto & arc = out[a][i];
                        if (arc.cap > 0 && via[arc.to].first == -1) {
                            via[arc.to] = { a, i };
                            q.push(arc.to);
                        }
                    }
                }
                if (via[t].first == -1)
                    return false;
                for (int b = t ; b != s ; ) {
                    auto [a, i] = via[b];
                    auto & arc = out[a][i];
                    arc.cap -= 1;
                    out[b][arc.rev].cap += 1;
                    b = a;
                }
                return true;
            }
        };

        /// Farthest-adjacent jumps inside the path's own vertices. The x-y jump
        /// is only taken when the path is the direct edge.
        auto shortcut(const Graph & g, const VertexList & p) -> VertexList
        {
            VertexList result{ p.front() };
            std::size_t i = 0, last = p.size() - 1;
            while (i < last) {
                std::size_t j = i + 1;
                for (std::size_t k = last ; k > i + 1 ; --k) {
                    if (i == 0 && k == last)
                        continue;
                    if (g.adjacent(p[i], p[k])) {
                        j = k;
                        break;
                    }
                }
                result.push_back(p[j]);
                i = j;
            }
            return result;
        }
    }

    auto internally_disjoint_paths(const Graph & g, Vertex x, Vertex y, int k) -> DisjointPaths
    {
        if (! g.contains(x) || ! g.contains(y))
            throw std::invalid_argument("internally_disjoint_paths: unknown vertex");
        if (x == y)
            throw std::invalid_argument("internally_disjoint_paths: x and y must differ");

        int n = g.order();
        auto in = [] (Vertex v) { return 2 * v; };
        auto out = [] (Vertex v) { return 2 * v + 1; };

        Network net(2 * n);
        for (Vertex v = 0 ; v < n ; ++v)
            if (v != x && v != y)
                net.add(in(v), out(v), 1);
        for (auto [u, v] : g.edges()) {
            for (auto [a, b] : { Edge{ u, v }, Edge{ v, u } }) {
                if (b == x || a == y)
                    continue;
                net.add(out(a), in(b), 1);
            }
        }

        DisjointPaths result;
        while (net.augment(out(x), in(y)))
            ++result.value;

        if (result.value < k)
            return result;

        // each unit of flow leaving x traces one path
        for (auto & first : net.out[out(x)]) {
            if (int(result.paths.size()) == k)
                break;
            if (first.to % 2 != 0 || first.cap != 0 || first.to / 2 == x)
                continue;
            // an arc with spent capacity from out(x) carries flow (reverse arcs
            // start at zero capacity but point into out(x)'s in-list, not here)
            VertexList path{ x };
            int node = first.to;
            while (true) {
                auto v = node / 2;
                path.push_back(v);
                if (v == y)
                    break;
                // in(v) -> out(v) then the one used forward arc out of out(v)
                int next = -1;
                for (auto & arc : net.out[out(v)])
                    if (arc.to % 2 == 0 && arc.cap == 0 && net.out[arc.to][arc.rev].cap == 1 && arc.to / 2 != v) {
                        next = arc.to;
                        break;
                    }
                if (next == -1)
                    throw std::logic_error("internally_disjoint_paths: broken flow decomposition");
                node = next;
            }
            result.paths.push_back(shortcut(g, path));
        }
        return result;
    }
}
