#include "lemmas.hh"

#include <pinched/generators.hh>

#include <algorithm>
#include <climits>
#include <cmath>
#include <map>

namespace pinched::detail
{
    namespace
    {
        auto sat_pow(long long base, int exp) -> long long
        {
            long long r = 1;
            for (int i = 0 ; i < exp ; ++i) {
                if (base != 0 && r > LLONG_MAX / base)
                    return LLONG_MAX;
                r *= base;
            }
            return r;
        }

        auto positions(const Graph & g, const VertexList & path) -> std::vector<int>
        {
            std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
            for (std::size_t i = 0 ; i < path.size() ; ++i)
                pos[path[i]] = int(i);
            return pos;
        }
    }

    auto oriented(const VertexList & path) -> VertexList
    {
        if (! path.empty() && path.back() < path.front())
            return VertexList(path.rbegin(), path.rend());
        return path;
    }

    auto ramsey(const Graph & g, VertexList pool, int c, int s) -> std::optional<RamseyCore>
    {
        std::sort(pool.begin(), pool.end());
        VertexList clique, stable;
        while (! pool.empty()) {
            if (c == 1) {
                clique.push_back(pool.front());
                return RamseyCore{ true, clique };
            }
            if (s == 1) {
                stable.push_back(pool.front());
                return RamseyCore{ false, stable };
            }
            auto v = pool.front();
            VertexList in, out;
            for (std::size_t i = 1 ; i < pool.size() ; ++i)
                (g.adjacent(v, pool[i]) ? in : out).push_back(pool[i]);

            auto need_in = sat_pow(c - 1, s), need_out = sat_pow(c, s - 1);
            bool go_in;
            if (std::ssize(in) >= need_in)
                go_in = true;
            else if (std::ssize(out) >= need_out)
                go_in = false;
            else
                // below the bound: follow the side closer to its target
                go_in = (long double)(in.size()) / need_in >= (long double)(out.size()) / need_out;

            if (go_in) {
                clique.push_back(v);
                pool = std::move(in);
                --c;
            }
            else {
                stable.push_back(v);
                pool = std::move(out);
                --s;
            }
        }
        return std::nullopt;
    }

    auto clique_embedding(const Graph & g, VertexList clique) -> EmbeddingWitness
    {
        std::sort(clique.begin(), clique.end());
        return EmbeddingWitness{ g.fingerprint(), gen_complete(int(clique.size())), std::move(clique) };
    }

    auto biclique_embedding(const Graph & g, const VertexList & left, const VertexList & right) -> EmbeddingWitness
    {
        VertexList map = left;
        map.insert(map.end(), right.begin(), right.end());
        return EmbeddingWitness{ g.fingerprint(), gen_biclique(int(left.size()), int(right.size())), std::move(map) };
    }

    auto lemma42(const Graph & g, const VertexList & S, const VertexList & path, int a, int d, int s, int l) -> Lemma42Core
    {
        auto pos = positions(g, path);

        struct Span
        {
            Vertex x;
            int u, v;
        };
        std::vector<Span> spans;
        for (auto x : S) {
            Span sp{ x, INT_MAX, -1 };
            for (auto w : g.neighbours(x))
                if (pos[w] >= 0) {
                    sp.u = std::min(sp.u, pos[w]);
                    sp.v = std::max(sp.v, pos[w]);
                }
            if (sp.v < 0)
                return NoAlternative{ "vertex " + std::to_string(x) + " has no neighbour on the path" };
            spans.push_back(sp);
        }

        // latest-start greedy: a maximum family of disjoint spans which also
        // has the largest start positions; equal starts go to the smaller id
        auto by_start = spans;
        std::sort(by_start.begin(), by_start.end(), [] (const Span & p, const Span & q) {
                return p.u != q.u ? p.u > q.u : p.x < q.x; });
        std::vector<Span> Y;
        int limit = INT_MAX;
        for (auto & sp : by_start)
            if (sp.v < limit) {
                Y.push_back(sp);
                limit = sp.u;
            }
        std::reverse(Y.begin(), Y.end());

        if (std::ssize(Y) >= a) {
            Alignment al{ g.fingerprint(), {}, path, path.front() };
            for (int i = 0 ; i < a ; ++i)
                al.order.push_back(Y[i].x);
            return al;
        }

        if (l == 1) {
            if (std::ssize(S) < s)
                return NoAlternative{ "fewer than s stable vertices left" };
            return Constellation{ g.fingerprint(), VertexList(S.begin(), S.begin() + s), { path } };
        }

        if (Y.empty())
            return NoAlternative{ "no stable vertices left" };
        auto need = (S.size() + Y.size() - 1) / Y.size();
        int w = -1;
        for (auto & y : Y) {
            std::size_t count = 0;
            for (auto & sp : spans)
                count += sp.u <= y.u && y.u <= sp.v;
            if (count >= need) {
                w = y.u;
                break;
            }
        }
        if (w == -1)
            return NoAlternative{ "no start vertex lies in enough spans" };

        // those spanning w, not adjacent to it, seen on both sides of it
        VertexList B;
        for (auto & sp : spans) {
            if (! (sp.u <= w && w <= sp.v) || g.adjacent(sp.x, path[w]))
                continue;
            bool before = false, after = false;
            for (auto nb : g.neighbours(sp.x)) {
                before = before || (pos[nb] >= 0 && pos[nb] < w);
                after = after || pos[nb] > w;
            }
            if (before && after)
                B.push_back(sp.x);
        }
        if (B.empty())
            return NoAlternative{ "no stable vertex straddles the split vertex" };

        VertexList L1(path.begin(), path.begin() + w), L2(path.begin() + w + 1, path.end());
        auto r = lemma42(g, B, L1, a, d, s, l - 1);
        if (auto c1 = std::get_if<Constellation>(&r))
            c1->paths.push_back(std::move(L2));
        return r;
    }

    auto lemma43(const Graph & g, const VertexList & S, const VertexList & path, int a, int c, int d, int h) -> Lemma43Core
    {
        auto r = lemma42(g, S, path, a, d, d * h, 2 * c * d * h);
        if (auto al = std::get_if<Alignment>(&r))
            return *al;
        if (auto no = std::get_if<NoAlternative>(&r))
            return *no;

        auto & con = std::get<Constellation>(r);
        auto pos = positions(g, path);
        auto paths = con.paths;
        for (auto & p : paths)
            if (pos[p.front()] > pos[p.back()])
                std::reverse(p.begin(), p.end());
        std::sort(paths.begin(), paths.end(), [&] (const VertexList & p, const VertexList & q) {
                return pos[p.front()] < pos[q.front()]; });

        auto stable_set = g.make_set(con.stable);
        auto hubs = con.stable;
        std::sort(hubs.begin(), hubs.end());

        // R_i: shortest piece ending at v_i that every stable vertex sees
        std::vector<Vertex> w_of, x_of;
        for (auto & p : paths) {
            auto seen = g.empty_set();
            int k = int(p.size()) - 1;
            for ( ; k >= 0 ; --k) {
                seen |= g.row(p[k]) & stable_set;
                if (seen == stable_set)
                    break;
            }
            if (k < 0)
                return NoAlternative{ "a path misses a stable vertex" };
            Vertex pick = -1;
            for (auto x : hubs) {
                if (! g.adjacent(x, p[k]))
                    continue;
                bool clear = true;
                for (std::size_t j = k + 1 ; j < p.size() && clear ; ++j)
                    clear = ! g.adjacent(x, p[j]);
                if (clear) {
                    pick = x;
                    break;
                }
            }
            if (pick == -1)
                throw std::logic_error("lemma43: minimal piece without a private end neighbour");
            w_of.push_back(p[k]);
            x_of.push_back(pick);
        }

        for (auto x : hubs) {
            std::vector<std::size_t> idx;
            for (std::size_t i = 0 ; i < paths.size() ; ++i)
                if (x_of[i] == x)
                    idx.push_back(i);
            if (std::ssize(idx) < 2 * c)
                continue;

            PinchWitness pw{ g.fingerprint(), x, {} };
            for (int k = 0 ; k < c ; ++k) {
                auto i = idx[2 * k], j = idx[2 * k + 1];
                int from = pos[w_of[i]], start = pos[paths[i].back()] + 1, stop = pos[w_of[j]];
                int close = -1;
                for (int p = start ; p <= stop && close == -1 ; ++p)
                    if (g.adjacent(x, path[p]))
                        close = p;
                if (close == -1)
                    throw std::logic_error("lemma43: no closing neighbour");
                VertexList cycle{ x };
                cycle.insert(cycle.end(), path.begin() + from, path.begin() + close + 1);
                pw.cycles.push_back(std::move(cycle));
            }
            return pw;
        }
        return NoAlternative{ "no stable vertex is the private neighbour of 2c pieces" };
    }

    auto lemma44(const Graph & g, const Constellation & con, std::size_t want, int t, long long heavy_quota,
            bool opportunistic) -> Lemma44Core
    {
        auto stable_set = g.make_set(con.stable);
        std::vector<std::size_t> heavy;
        std::vector<Vertex> hub_of;
        LightPaths light;
        for (std::size_t i = 0 ; i < con.paths.size() ; ++i) {
            Vertex hub = -1;
            for (auto v : con.paths[i])
                if (int((g.row(v) & stable_set).count()) >= t) {
                    hub = v;
                    break;
                }
            if (hub == -1)
                light.indices.push_back(i);
            else {
                heavy.push_back(i);
                hub_of.push_back(hub);
            }
        }

        bool forced = std::ssize(heavy) >= heavy_quota;
        if (forced || (opportunistic && light.indices.size() < want && ! heavy.empty())) {
            auto take = forced ? std::size_t(heavy_quota) : heavy.size();
            std::map<VertexList, VertexList> buckets;
            for (std::size_t k = 0 ; k < take ; ++k) {
                auto nb = g.row(hub_of[k]) & stable_set;
                VertexList T;
                for (auto x = nb.find_first() ; x != VertexSet::npos && std::ssize(T) < t ; x = nb.find_next(x))
                    T.push_back(Vertex(x));
                buckets[T].push_back(hub_of[k]);
            }
            auto quota = sat_pow(t, t);
            for (auto & [T, U] : buckets) {
                if (std::ssize(U) < quota && ! opportunistic)
                    continue;
                VertexList pool(U.begin(), U.begin() + std::min<long long>(quota, std::ssize(U)));
                auto r = ramsey(g, pool, t, t);
                if (! r)
                    continue;
                if (r->clique)
                    return clique_embedding(g, r->vertices);
                return biclique_embedding(g, T, r->vertices);
            }
        }
        if (light.indices.size() >= want)
            return light;
        return NoAlternative{ "too few light paths and no biclique among the heavy ones" };
    }
}
