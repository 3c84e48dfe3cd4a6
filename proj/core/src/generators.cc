#include <pinched/generators.hh>
#include <pinched/random.hh>

#include <algorithm>
#include <numeric>
#include <set>

namespace pinched
{
    namespace
    {
        auto require(bool cond, const std::string & what) -> void
        {
            if (! cond)
                throw GeneratorError(what);
        }

        auto random_perm(int n, std::uint64_t seed) -> VertexList
        {
            VertexList perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            Rng rng(seed);
            rng.shuffle(perm);
            return perm;
        }

        auto map_list(const VertexList & vs, const VertexList & perm) -> VertexList
        {
            VertexList result;
            result.reserve(vs.size());
            for (auto v : vs)
                result.push_back(perm[v]);
            return result;
        }
    }

    auto relabel(const Graph & g, const VertexList & perm) -> Graph
    {
        require(int(perm.size()) == g.order(), "relabel: permutation has the wrong size");
        std::vector<Edge> edges;
        for (auto [u, v] : g.edges())
            edges.emplace_back(perm[u], perm[v]);
        std::vector<std::string> labels;
        if (g.has_labels()) {
            labels.resize(std::size_t(g.order()));
            for (int v = 0 ; v < g.order() ; ++v)
                labels[perm[v]] = g.label(v);
        }
        return Graph(g.order(), edges, std::move(labels));
    }

    auto gen_complete(int t) -> Graph
    {
        require(t >= 1, "gen_complete: need t >= 1");
        std::vector<Edge> edges;
        for (int u = 0 ; u < t ; ++u)
            for (int v = u + 1 ; v < t ; ++v)
                edges.emplace_back(u, v);
        return Graph(t, edges);
    }

    auto gen_biclique(int a, int b) -> Graph
    {
        require(a >= 1 && b >= 1, "gen_biclique: need a, b >= 1");
        std::vector<Edge> edges;
        for (int u = 0 ; u < a ; ++u)
            for (int v = 0 ; v < b ; ++v)
                edges.emplace_back(u, a + v);
        return Graph(a + b, edges);
    }

    auto gen_grid(int t) -> Graph
    {
        require(t >= 1, "gen_grid: need t >= 1");
        std::vector<Edge> edges;
        for (int r = 0 ; r < t ; ++r)
            for (int c = 0 ; c < t ; ++c) {
                if (c + 1 < t)
                    edges.emplace_back(r * t + c, r * t + c + 1);
                if (r + 1 < t)
                    edges.emplace_back(r * t + c, (r + 1) * t + c);
            }
        return Graph(t * t, edges);
    }

    auto gen_wall(int t) -> Graph
    {
        require(t >= 2, "gen_wall: need t >= 2");
        int cols = 2 * t;
        auto at = [&] (int r, int c) { return r * cols + c; };

        std::vector<Edge> raw;
        for (int r = 0 ; r < t ; ++r)
            for (int c = 0 ; c < cols ; ++c) {
                if (c + 1 < cols)
                    raw.emplace_back(at(r, c), at(r, c + 1));
                if (r + 1 < t && c % 2 == r % 2)
                    raw.emplace_back(at(r, c), at(r + 1, c));
            }

        std::vector<int> degree(std::size_t(t * cols), 0);
        for (auto [u, v] : raw) {
            ++degree[u];
            ++degree[v];
        }

        std::vector<int> id(std::size_t(t * cols), -1);
        int n = 0;
        for (int v = 0 ; v < t * cols ; ++v)
            if (degree[v] > 1)
                id[v] = n++;

        std::vector<Edge> edges;
        std::vector<std::string> labels(static_cast<std::size_t>(n));
        for (int v = 0 ; v < t * cols ; ++v)
            if (id[v] >= 0)
                labels[id[v]] = std::to_string(v / cols) + "," + std::to_string(v % cols);
        for (auto [u, v] : raw)
            if (id[u] >= 0 && id[v] >= 0)
                edges.emplace_back(id[u], id[v]);
        return Graph(n, edges, std::move(labels));
    }

    auto random_subdivision_spec(const Graph & h, int max_extra, std::uint64_t seed) -> SubdivisionSpec
    {
        require(max_extra >= 0, "random_subdivision_spec: negative bound");
        Rng rng(seed);
        SubdivisionSpec spec;
        for (std::size_t i = 0 ; i < std::size_t(h.size()) ; ++i)
            spec.extra.push_back(rng.uniform_int(0, max_extra));
        return spec;
    }

    auto gen_subdivision(const Graph & h, const SubdivisionSpec & spec, std::uint64_t seed) -> SubdivisionResult
    {
        auto base_edges = h.edges();
        require(spec.extra.size() == base_edges.size(), "gen_subdivision: spec must cover every edge of H exactly once");
        for (auto e : spec.extra)
            require(e >= 0, "gen_subdivision: negative extra-vertex count");

        int n = h.order();
        std::vector<Edge> edges;
        std::vector<VertexList> paths;
        for (std::size_t i = 0 ; i < base_edges.size() ; ++i) {
            auto [u, v] = base_edges[i];
            VertexList p{ u };
            for (int k = 0 ; k < spec.extra[i] ; ++k)
                p.push_back(n++);
            p.push_back(v);
            for (std::size_t k = 0 ; k + 1 < p.size() ; ++k)
                edges.emplace_back(p[k], p[k + 1]);
            paths.push_back(std::move(p));
        }

        VertexList branch(std::size_t(h.order()));
        std::iota(branch.begin(), branch.end(), 0);

        Graph g(n, edges);
        if (seed != 0) {
            auto perm = random_perm(n, seed);
            g = relabel(g, perm);
            branch = map_list(branch, perm);
            for (auto & p : paths)
                p = map_list(p, perm);
        }
        auto fp = g.fingerprint();
        return SubdivisionResult{ std::move(g), SubdivisionEmbedding{ fp, h, std::move(branch), std::move(paths) } };
    }

    auto pd_profile(int s) -> ArrayProfile
    {
        require(s >= 1, "pd_profile: need s >= 1");
        ArrayProfile p{ s, 1, {} };
        for (int i = 0 ; i < s ; ++i) {
            std::vector<int> labels(static_cast<std::size_t>(s));
            std::iota(labels.begin(), labels.end(), 0);
            p.paths.push_back(std::move(labels));
        }
        return p;
    }

    auto gen_pd(int s) -> ArrayInstance
    {
        require(s >= 1, "gen_pd: need s >= 1");
        return gen_array_instance(pd_profile(s));
    }

    auto random_pd_expansion_spec(int s, int max_extra, std::uint64_t seed) -> PdExpansionSpec
    {
        require(s >= 1 && max_extra >= 0, "random_pd_expansion_spec: need s >= 1 and max_extra >= 0");
        Rng rng(seed);
        PdExpansionSpec spec;
        for (int i = 0 ; i < s ; ++i)
            for (int k = 0 ; k + 1 < s ; ++k)
                spec[Edge{ s + i * s + k, s + i * s + k + 1 }] = rng.uniform_int(0, max_extra);
        return spec;
    }

    auto gen_pd_expansion(int s, const PdExpansionSpec & spec) -> ArrayInstance
    {
        require(s >= 1, "gen_pd_expansion: need s >= 1");
        auto is_path_edge = [&] (Edge e) {
            auto [u, v] = e;
            if (u < s || v != u + 1)
                return false;
            return (u - s) / s == (v - s) / s;
        };
        for (auto & [e, count] : spec) {
            require(e.first < e.second && e.first >= 0 && e.second < s + s * s, "gen_pd_expansion: spec names a pair that is not an edge of PD_s");
            require(e.first >= s, "gen_pd_expansion: spec subdivides an edge incident to the stable set");
            require(is_path_edge(e), "gen_pd_expansion: spec names a pair that is not an edge of PD_s");
            require(count >= 0, "gen_pd_expansion: negative extra-vertex count");
        }

        auto profile = pd_profile(s);
        for (int i = 0 ; i < s ; ++i) {
            std::vector<int> labels;
            for (int k = 0 ; k < s ; ++k) {
                labels.push_back(k);
                if (k + 1 < s) {
                    auto it = spec.find(Edge{ s + i * s + k, s + i * s + k + 1 });
                    if (it != spec.end())
                        labels.insert(labels.end(), std::size_t(it->second), -1);
                }
            }
            profile.paths[i] = std::move(labels);
        }
        return gen_array_instance(profile);
    }

    auto check_profile(const ArrayProfile & p) -> std::string
    {
        if (p.s < 1 || p.h < 1)
            return "need s >= 1 and h >= 1";
        if (int(p.paths.size()) != p.s)
            return "need exactly s paths";
        for (std::size_t i = 0 ; i < p.paths.size() ; ++i) {
            auto & labels = p.paths[i];
            std::vector<int> last_pos(std::size_t(p.s), -1);
            int current = -1;
            for (std::size_t k = 0 ; k < labels.size() ; ++k) {
                auto j = labels[k];
                if (j == -1)
                    continue;
                if (j < -1 || j >= p.s)
                    return "path " + std::to_string(i) + ": label out of range";
                if (j < current)
                    return "path " + std::to_string(i) + ": attachments out of order (AL)";
                if (last_pos[j] >= 0 && int(k) - last_pos[j] >= p.h)
                    return "path " + std::to_string(i) + ": gap of length at least h";
                current = j;
                last_pos[j] = int(k);
            }
            for (int j = 0 ; j < p.s ; ++j)
                if (last_pos[j] < 0)
                    return "path " + std::to_string(i) + ": stable vertex " + std::to_string(j) + " has no neighbour";
        }
        return "";
    }

    auto random_array_profile(int s, int h, std::uint64_t seed) -> ArrayProfile
    {
        require(s >= 1 && h >= 1, "random_array_profile: need s, h >= 1");
        Rng rng(seed);
        ArrayProfile p{ s, h, {} };
        for (int i = 0 ; i < s ; ++i) {
            auto path_rng = rng.split(std::uint64_t(i));
            std::vector<int> labels;
            labels.insert(labels.end(), std::size_t(path_rng.uniform_int(0, 1)), -1);
            for (int j = 0 ; j < s ; ++j) {
                if (j > 0)
                    labels.insert(labels.end(), std::size_t(path_rng.uniform_int(0, 2)), -1);
                int count = (h == 1) ? 1 : path_rng.uniform_int(1, 3);
                for (int k = 0 ; k < count ; ++k) {
                    if (k > 0)
                        labels.insert(labels.end(), std::size_t(path_rng.uniform_int(0, h - 2)), -1);
                    labels.push_back(j);
                }
            }
            labels.insert(labels.end(), std::size_t(path_rng.uniform_int(0, 1)), -1);
            p.paths.push_back(std::move(labels));
        }
        return p;
    }

    auto gen_array_instance(const ArrayProfile & p, std::optional<std::uint64_t> relabel_seed) -> ArrayInstance
    {
        if (auto why = check_profile(p) ; ! why.empty())
            throw GeneratorError("gen_array_instance: " + why);

        int n = p.s;
        VertexList order(std::size_t(p.s));
        std::iota(order.begin(), order.end(), 0);
        std::vector<VertexList> paths;
        std::vector<Edge> edges;
        for (auto & labels : p.paths) {
            VertexList path;
            for (auto j : labels) {
                auto v = n++;
                if (! path.empty())
                    edges.emplace_back(path.back(), v);
                if (j >= 0)
                    edges.emplace_back(order[j], v);
                path.push_back(v);
            }
            paths.push_back(std::move(path));
        }

        Graph g(n, edges);
        if (relabel_seed) {
            auto perm = random_perm(n, *relabel_seed);
            g = relabel(g, perm);
            order = map_list(order, perm);
            for (auto & path : paths)
                path = map_list(path, perm);
        }
        VertexList ends;
        for (auto & path : paths)
            ends.push_back(path.front());
        auto fp = g.fingerprint();
        return ArrayInstance{ std::move(g), Array{ fp, std::move(order), std::move(paths), std::move(ends), p.h } };
    }

    auto gen_random_constellation(const ConstellationParams & p, std::uint64_t seed) -> ConstellationInstance
    {
        require(p.s >= 1 && p.l >= 1, "gen_random_constellation: need s, l >= 1");
        require(p.d >= 1, "gen_random_constellation: need d >= 1");
        require(p.min_path >= 1 && p.min_path <= p.max_path, "gen_random_constellation: bad path-length range");
        int need = (p.s + p.d - 1) / p.d;
        require(p.max_path >= need, "gen_random_constellation: paths of at most " + std::to_string(p.max_path)
                + " vertices cannot host " + std::to_string(p.s) + " attachments at meagerness " + std::to_string(p.d));

        Rng rng(seed);
        auto lengths_rng = rng.split(0), attach_rng = rng.split(1), cross_rng = rng.split(2);

        int n = p.s;
        std::vector<VertexList> paths;
        std::vector<Edge> edges;
        for (int i = 0 ; i < p.l ; ++i) {
            int len = lengths_rng.uniform_int(std::max(p.min_path, need), p.max_path);
            VertexList path;
            for (int k = 0 ; k < len ; ++k) {
                if (! path.empty())
                    edges.emplace_back(path.back(), n);
                path.push_back(n++);
            }
            paths.push_back(std::move(path));
        }

        std::vector<int> load(std::size_t(n), 0);
        std::set<Edge> attached;
        auto attach = [&] (const VertexList & path, Vertex x) {
            VertexList spare;
            for (auto v : path)
                if (load[v] < p.d && ! attached.contains(Edge{ x, v }))
                    spare.push_back(v);
            if (spare.empty())
                return;
            auto v = spare[std::size_t(attach_rng.uniform(0, std::int64_t(spare.size()) - 1))];
            ++load[v];
            attached.insert(Edge{ x, v });
            edges.emplace_back(x, v);
        };
        for (auto & path : paths) {
            // mandatory attachments first, so the extras cannot use up the
            // capacity the length bound reserves for them
            std::vector<int> extra(std::size_t(p.s));
            for (int x = 0 ; x < p.s ; ++x) {
                extra[x] = attach_rng.chance(1, 3) ? attach_rng.uniform_int(1, 2) : 0;
                attach(path, x);
            }
            for (int x = 0 ; x < p.s ; ++x)
                for (int k = 0 ; k < extra[x] ; ++k)
                    attach(path, x);
        }

        if (! p.plain && p.l >= 2) {
            int count = cross_rng.uniform_int(1, p.l);
            for (int k = 0 ; k < count ; ++k) {
                auto i = std::size_t(cross_rng.uniform(0, p.l - 1));
                auto j = std::size_t(cross_rng.uniform(0, p.l - 2));
                if (j >= i)
                    ++j;
                auto u = paths[i][std::size_t(cross_rng.uniform(0, std::int64_t(paths[i].size()) - 1))];
                auto v = paths[j][std::size_t(cross_rng.uniform(0, std::int64_t(paths[j].size()) - 1))];
                edges.emplace_back(u, v);
            }
        }

        VertexList stable(std::size_t(p.s));
        std::iota(stable.begin(), stable.end(), 0);
        Graph g(n, edges);
        auto fp = g.fingerprint();
        return ConstellationInstance{ std::move(g), Constellation{ fp, std::move(stable), std::move(paths) } };
    }
}
