#include "fixtures.hh"

#include <pinched/random.hh>

#include <algorithm>

namespace fixtures
{
    auto path_graph(int n) -> Graph
    {
        std::vector<Edge> e;
        for (int i = 0 ; i + 1 < n ; ++i)
            e.emplace_back(i, i + 1);
        return Graph(n, e);
    }

    auto cycle_graph(int n) -> Graph
    {
        std::vector<Edge> e;
        for (int i = 0 ; i < n ; ++i)
            e.emplace_back(i, (i + 1) % n);
        return Graph(n, e);
    }

    auto friendship(int k) -> Graph
    {
        std::vector<Edge> e;
        for (int i = 0 ; i < k ; ++i) {
            e.emplace_back(0, 2 * i + 1);
            e.emplace_back(0, 2 * i + 2);
            e.emplace_back(2 * i + 1, 2 * i + 2);
        }
        return Graph(2 * k + 1, e);
    }

    auto random_graph(int n, int num, int den, std::uint64_t seed) -> Graph
    {
        Rng rng(seed);
        std::vector<Edge> e;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (rng.chance(num, den))
                    e.emplace_back(u, v);
        return Graph(n, e);
    }

    auto random_tree(int n, std::uint64_t seed) -> Graph
    {
        Rng rng(seed);
        std::vector<Edge> e;
        for (int v = 1 ; v < n ; ++v)
            e.emplace_back(rng.uniform_int(0, v - 1), v);
        return Graph(n, e);
    }

    namespace
    {
        struct Builder
        {
            int n = 0;
            std::vector<Edge> edges;

            auto add() -> Vertex { return n++; }

            auto path(int k) -> VertexList
            {
                VertexList p;
                for (int i = 0 ; i < k ; ++i) {
                    p.push_back(add());
                    if (i)
                        edges.emplace_back(p[i - 1], p[i]);
                }
                return p;
            }

            auto build() const -> Graph { return Graph(n, edges); }
        };
    }

    auto meager_hollow_example() -> Instance
    {
        Builder b;
        VertexList S;
        for (int i = 0 ; i < 5 ; ++i)
            S.push_back(b.add());
        auto p = b.path(12);
        auto att = [&] (int x, std::initializer_list<int> at) {
            for (auto k : at)
                b.edges.emplace_back(S[x], p[k]);
        };
        att(0, { 0, 1 });        // gap length 1
        att(1, { 1, 3 });        // 2
        att(2, { 2, 7 });        // x_3: 5
        att(3, { 7, 9 });        // 2
        att(4, { 7, 10, 11 });   // 3 and 1; p[7] sees x_3, x_4, x_5
        auto g = b.build();
        return Instance{ g, Constellation{ g.fingerprint(), S, { p } } };
    }

    auto five_alignment_example() -> std::pair<Graph, Alignment>
    {
        Builder b;
        VertexList S;
        for (int i = 0 ; i < 5 ; ++i)
            S.push_back(b.add());
        auto p = b.path(14);
        // blocks: x1 {0,1}, x2 {3}, x3 {4,6}, x4 {8,9,10}, x5 {12}
        std::vector<std::vector<int>> at{ { 0, 1 }, { 3 }, { 4, 6 }, { 8, 9, 10 }, { 12 } };
        for (int x = 0 ; x < 5 ; ++x)
            for (auto k : at[x])
                b.edges.emplace_back(S[x], p[k]);
        auto g = b.build();
        return { g, Alignment{ g.fingerprint(), S, p, p.front() } };
    }

    auto patch_example(int r, int d) -> PatchExample
    {
        Builder b;
        auto hub = b.add();
        PatchExample out;
        std::vector<VertexList> paths;
        for (int i = 0 ; i < r ; ++i) {
            auto p = b.path(d + 1);
            out.X.push_back(p.front());
            b.edges.emplace_back(hub, p.back());
            paths.push_back(p);
        }
        out.graph = b.build();
        out.patch = PatchWitness{ out.graph.fingerprint(), hub, paths };
        return out;
    }

    auto match_example(int r, int length) -> MatchExample
    {
        Builder b;
        MatchExample out;
        std::vector<VertexList> paths;
        for (int i = 0 ; i < r ; ++i) {
            auto p = b.path(length + 1);
            out.X.push_back(p.front());
            out.X.push_back(p.back());
            paths.push_back(p);
        }
        out.graph = b.build();
        out.match = MatchWitness{ out.graph.fingerprint(), paths };
        return out;
    }

    auto layered(int m, int l) -> Instance
    {
        // positions on one path; the bottom level is nested, each later
        // level adds a split vertex followed by one private tail vertex per
        // stable vertex so far
        std::vector<std::pair<int, int>> att;
        VertexList S;
        int nx = 0;
        for (int i = 0 ; i < m ; ++i) {
            att.emplace_back(nx, i);
            att.emplace_back(nx, 2 * m - 1 - i);
            S.push_back(nx++);
        }
        int pos = 2 * m;
        for (int k = 2 ; k <= l ; ++k) {
            int star = nx++;
            att.emplace_back(star, pos++);
            S.push_back(star);
            for (auto x : S)
                att.emplace_back(x, pos++);
        }
        std::vector<Edge> e;
        VertexList path;
        for (int i = 0 ; i < pos ; ++i) {
            path.push_back(nx + i);
            if (i)
                e.emplace_back(nx + i - 1, nx + i);
        }
        for (auto [x, p] : att)
            e.emplace_back(x, nx + p);
        Graph g(nx + pos, e);
        return Instance{ g, Constellation{ g.fingerprint(), S, { path } } };
    }

    auto planted_heavy(int t, int heavy, int light, bool clique) -> Instance
    {
        Builder b;
        VertexList S;
        for (int i = 0 ; i < t ; ++i)
            S.push_back(b.add());
        int paths = heavy + light;
        std::vector<VertexList> ps;
        VertexList hubs;
        for (int i = 0 ; i < paths ; ++i) {
            if (i < heavy) {
                auto p = b.path(1);
                for (auto x : S)
                    b.edges.emplace_back(x, p[0]);
                hubs.push_back(p[0]);
                ps.push_back(p);
            }
            else {
                auto p = b.path(t);
                for (int j = 0 ; j < t ; ++j)
                    b.edges.emplace_back(S[j], p[j]);
                ps.push_back(p);
            }
        }
        if (clique)
            for (std::size_t i = 0 ; i < hubs.size() ; ++i)
                for (std::size_t j = i + 1 ; j < hubs.size() ; ++j)
                    b.edges.emplace_back(hubs[i], hubs[j]);
        auto g = b.build();
        return Instance{ g, Constellation{ g.fingerprint(), S, ps } };
    }

    auto planted_long_gaps(int stable, int c, int gap) -> Instance
    {
        Builder b;
        VertexList S;
        for (int i = 0 ; i < stable ; ++i)
            S.push_back(b.add());
        std::vector<VertexList> ps;
        for (int i = 0 ; i < c ; ++i) {
            auto p = b.path(gap + 1);
            b.edges.emplace_back(S[0], p.front());
            b.edges.emplace_back(S[0], p.back());
            for (int x = 1 ; x < stable ; ++x)
                b.edges.emplace_back(S[x], p[1 + (x - 1) % std::max(1, gap - 1)]);
            ps.push_back(p);
        }
        auto g = b.build();
        return Instance{ g, Constellation{ g.fingerprint(), S, ps } };
    }
}
