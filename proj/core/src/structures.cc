#include <pinched/structures.hh>

#include <algorithm>
#include <map>
#include <set>

namespace pinched
{
    namespace
    {
        auto num(long long v) -> std::string { return std::to_string(v); }

        auto ids_ok(const Graph & g, const VertexList & vs) -> bool
        {
            return std::all_of(vs.begin(), vs.end(), [&] (Vertex v) { return g.contains(v); });
        }

        auto distinct(const VertexList & vs) -> bool
        {
            VertexList sorted = vs;
            std::sort(sorted.begin(), sorted.end());
            return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        }

        /// Well-formed induced path: ids valid, distinct, non-empty, induced.
        auto check_path(const Graph & g, const VertexList & p, const std::string & what) -> Verdict
        {
            if (p.empty())
                return Verdict::fail("path non-empty", what + " is empty");
            if (! ids_ok(g, p))
                return Verdict::fail("vertex ids", what + " cites an unknown vertex");
            if (! distinct(p))
                return Verdict::fail("path distinct", what + " repeats a vertex");
            if (! is_induced_path(g, p))
                return Verdict::fail("path induced", what + " is not an induced path");
            return Verdict::pass();
        }

        /// Positions on `path` (read from its front) of the neighbours of x.
        auto neighbour_positions(const Graph & g, const VertexList & path, Vertex x) -> std::vector<int>
        {
            std::vector<int> result;
            for (std::size_t i = 0 ; i < path.size() ; ++i)
                if (g.adjacent(x, path[i]))
                    result.push_back(int(i));
            return result;
        }

        auto check_al(const Graph & g, const VertexList & order, const VertexList & path, Vertex end) -> Verdict
        {
            bool from_front = (end == path.front());
            int last = -1;
            for (std::size_t i = 0 ; i < order.size() ; ++i) {
                auto positions = neighbour_positions(g, path, order[i]);
                if (positions.empty())
                    return Verdict::fail("neighbor in every path", "pi(" + num(long(i + 1)) + ") has no neighbour on the path");
                if (! from_front)
                    for (auto & p : positions)
                        p = int(path.size()) - 1 - p;
                auto [lo, hi] = std::minmax_element(positions.begin(), positions.end());
                if (*lo <= last)
                    return Verdict::fail("(AL)", "a neighbour of pi(" + num(long(i + 1)) + ") does not come after all neighbours of pi(" + num(long(i)) + ")");
                last = *hi;
            }
            return Verdict::pass();
        }
    }

    FingerprintMismatch::FingerprintMismatch(const Fingerprint & expected, const Fingerprint & cited) :
        std::runtime_error("witness cites graph " + to_string(cited) + " but was checked against " + to_string(expected))
    {
    }

    auto to_string(const Verdict & v) -> std::string
    {
        if (v.ok)
            return "valid";
        return "violated " + v.clause + (v.detail.empty() ? "" : ": " + v.detail);
    }

    auto require_fingerprint(const Graph & g, const Fingerprint & cited) -> void
    {
        if (! (g.fingerprint() == cited))
            throw FingerprintMismatch(g.fingerprint(), cited);
    }

    auto validate_bundle(const Graph & g, const Bundle & b, bool plain) -> Verdict
    {
        require_fingerprint(g, b.graph);
        if (! ids_ok(g, b.stable))
            return Verdict::fail("vertex ids", "S cites an unknown vertex");
        if (! distinct(b.stable))
            return Verdict::fail("S distinct", "S repeats a vertex");

        auto used = g.empty_set();
        for (std::size_t i = 0 ; i < b.paths.size() ; ++i) {
            if (auto v = check_path(g, b.paths[i], "path " + num(long(i))) ; ! v)
                return v;
            for (auto v : b.paths[i]) {
                if (used.test(v))
                    return Verdict::fail("paths disjoint", "vertex " + num(v) + " lies on two paths");
                used.set(v);
            }
        }

        if (plain)
            for (std::size_t i = 0 ; i < b.paths.size() ; ++i)
                for (std::size_t j = i + 1 ; j < b.paths.size() ; ++j)
                    if (! are_anticomplete(g, b.paths[i], b.paths[j]))
                        return Verdict::fail("plain", "paths " + num(long(i)) + " and " + num(long(j)) + " are joined by an edge");

        return Verdict::pass();
    }

    auto validate_constellation(const Graph & g, const Constellation & c, bool plain) -> Verdict
    {
        if (auto v = validate_bundle(g, c, plain) ; ! v)
            return v;

        auto on_paths = g.empty_set();
        for (auto & p : c.paths)
            for (auto v : p)
                on_paths.set(v);
        for (auto x : c.stable)
            if (on_paths.test(x))
                return Verdict::fail("S disjoint from paths", "vertex " + num(x) + " is in S and on a path");

        if (! is_stable(g, c.stable))
            return Verdict::fail("S stable", "S contains an edge");

        for (auto x : c.stable)
            for (std::size_t i = 0 ; i < c.paths.size() ; ++i)
                if (! g.row(x).intersects(g.make_set(c.paths[i])))
                    return Verdict::fail("neighbor in every path", "vertex " + num(x) + " has no neighbour on path " + num(long(i)));

        return Verdict::pass();
    }

    auto gaps_of(const Graph & g, const Constellation & c, Vertex x, std::size_t path_index) -> std::vector<VertexList>
    {
        require_fingerprint(g, c.graph);
        if (std::find(c.stable.begin(), c.stable.end(), x) == c.stable.end())
            throw InvalidWitness("gaps_of: vertex " + num(x) + " is not in S");
        if (path_index >= c.paths.size())
            throw InvalidWitness("gaps_of: no path with index " + num(long(path_index)));

        auto & path = c.paths[path_index];
        auto positions = neighbour_positions(g, path, x);
        std::vector<VertexList> result;
        for (std::size_t i = 0 ; i + 1 < positions.size() ; ++i)
            result.emplace_back(path.begin() + positions[i], path.begin() + positions[i + 1] + 1);
        return result;
    }

    auto is_hollow(const Graph & g, const Constellation & c, int d) -> bool
    {
        if (auto v = validate_constellation(g, c) ; ! v)
            throw InvalidWitness("is_hollow: " + to_string(v));
        for (std::size_t i = 0 ; i < c.paths.size() ; ++i)
            for (auto x : c.stable) {
                auto positions = neighbour_positions(g, c.paths[i], x);
                for (std::size_t k = 0 ; k + 1 < positions.size() ; ++k)
                    if (positions[k + 1] - positions[k] >= d)
                        return false;
            }
        return true;
    }

    auto meagerness(const Graph & g, const Constellation & c) -> int
    {
        auto s = g.make_set(c.stable);
        int worst = 0;
        for (auto & p : c.paths)
            for (auto v : p)
                worst = std::max(worst, int((g.row(v) & s).count()));
        return worst;
    }

    auto is_meager(const Graph & g, const Constellation & c, int d) -> bool
    {
        if (auto v = validate_constellation(g, c) ; ! v)
            throw InvalidWitness("is_meager: " + to_string(v));
        return meagerness(g, c) <= d;
    }

    auto validate_alignment(const Graph & g, const Alignment & a) -> Verdict
    {
        require_fingerprint(g, a.graph);
        Constellation c{ a.graph, a.order, { a.path } };
        if (auto v = validate_constellation(g, c) ; ! v)
            return v;
        if (a.order.empty())
            return Verdict::fail("bijection", "empty ordering");
        if (a.end != a.path.front() && a.end != a.path.back())
            return Verdict::fail("end", "vertex " + num(a.end) + " is not an end of the path");
        return check_al(g, a.order, a.path, a.end);
    }

    auto alignment_end(const Graph & g, const VertexList & order, const VertexList & path) -> std::optional<Vertex>
    {
        if (path.empty() || ! ids_ok(g, order) || ! ids_ok(g, path))
            return std::nullopt;
        if (check_al(g, order, path, path.front()))
            return path.front();
        if (check_al(g, order, path, path.back()))
            return path.back();
        return std::nullopt;
    }

    auto validate_alignment_any_end(const Graph & g, const Alignment & a) -> Verdict
    {
        if (a.path.empty())
            return validate_alignment(g, a);
        auto first = Alignment{ a.graph, a.order, a.path, a.path.front() };
        auto v = validate_alignment(g, first);
        if (v || v.clause != "(AL)")
            return v;
        auto second = Alignment{ a.graph, a.order, a.path, a.path.back() };
        return validate_alignment(g, second);
    }

    auto array_as_constellation(const Array & arr) -> Constellation
    {
        return Constellation{ arr.graph, arr.order, arr.paths };
    }

    auto validate_array(const Graph & g, const Array & arr) -> Verdict
    {
        require_fingerprint(g, arr.graph);
        if (arr.h < 1)
            return Verdict::fail("parameters", "h must be positive");
        if (arr.order.empty())
            return Verdict::fail("(s,s)", "empty stable set");
        if (arr.paths.size() != arr.order.size())
            return Verdict::fail("(s,s)", num(long(arr.order.size())) + " stable vertices but " + num(long(arr.paths.size())) + " paths");
        if (arr.ends.size() != arr.paths.size())
            return Verdict::fail("ends", "one recorded end per path is required");

        auto c = array_as_constellation(arr);
        if (auto v = validate_constellation(g, c, true) ; ! v)
            return v;
        if (! is_hollow(g, c, arr.h))
            return Verdict::fail("h-hollow", "some x-gap has length at least " + num(arr.h));

        for (std::size_t i = 0 ; i < arr.paths.size() ; ++i) {
            auto v = validate_alignment(g, Alignment{ arr.graph, arr.order, arr.paths[i], arr.ends[i] });
            if (! v) {
                // the failing clause is the alignment one, on this path
                v.detail = "path " + num(long(i)) + ": " + v.detail;
                return v;
            }
        }
        return Verdict::pass();
    }

    auto validate_pinch_witness(const Graph & g, const PinchWitness & w, int c, int h) -> Verdict
    {
        require_fingerprint(g, w.graph);
        if (c < 1 || h < 1)
            return Verdict::fail("parameters", "c and h must be positive");
        if (! g.contains(w.hub))
            return Verdict::fail("vertex ids", "unknown hub");
        if (int(w.cycles.size()) < c)
            return Verdict::fail("c cycles", "found " + num(long(w.cycles.size())) + " cycles, need " + num(c));

        std::vector<VertexSet> rests;
        for (std::size_t i = 0 ; i < w.cycles.size() ; ++i) {
            auto & cyc = w.cycles[i];
            if (! ids_ok(g, cyc) || ! distinct(cyc) || cyc.size() < 3)
                return Verdict::fail("cycle induced", "cycle " + num(long(i)) + " is malformed");
            if (! is_induced_cycle(g, cyc))
                return Verdict::fail("cycle induced", "cycle " + num(long(i)) + " is not an induced cycle");
            if (std::find(cyc.begin(), cyc.end(), w.hub) == cyc.end())
                return Verdict::fail("common vertex", "cycle " + num(long(i)) + " misses the hub");
            if (int(cyc.size()) < h + 2)
                return Verdict::fail("length at least h+2", "cycle " + num(long(i)) + " has length " + num(long(cyc.size())));
            auto rest = g.make_set(cyc);
            rest.reset(w.hub);
            rests.push_back(std::move(rest));
        }

        for (std::size_t i = 0 ; i < rests.size() ; ++i)
            for (std::size_t j = i + 1 ; j < rests.size() ; ++j) {
                if (rests[i].intersects(rests[j]))
                    return Verdict::fail("pairwise disjoint", "cycles " + num(long(i)) + " and " + num(long(j)) + " meet outside the hub");
                for (auto v = rests[i].find_first() ; v != VertexSet::npos ; v = rests[i].find_next(v))
                    if (g.row(Vertex(v)).intersects(rests[j]))
                        return Verdict::fail("pairwise anticomplete", "cycles " + num(long(i)) + " and " + num(long(j)) + " are joined outside the hub");
            }
        return Verdict::pass();
    }

    auto validate_block(const Graph & g, const BlockWitness & b, bool strong) -> Verdict
    {
        require_fingerprint(g, b.graph);
        if (! ids_ok(g, b.block) || ! distinct(b.block))
            return Verdict::fail("vertex ids", "block vertices malformed");
        if (int(b.block.size()) < b.k)
            return Verdict::fail("|B| >= k", "block has " + num(long(b.block.size())) + " vertices");

        std::map<Edge, const PathFamily *> by_pair;
        for (auto & f : b.families) {
            auto key = std::minmax(f.x, f.y);
            if (by_pair.contains(key))
                return Verdict::fail("families", "pair listed twice");
            by_pair[key] = &f;
        }

        std::vector<std::pair<Edge, VertexSet>> used;
        for (std::size_t i = 0 ; i < b.block.size() ; ++i)
            for (std::size_t j = i + 1 ; j < b.block.size() ; ++j) {
                auto key = std::minmax(b.block[i], b.block[j]);
                auto it = by_pair.find(key);
                if (it == by_pair.end())
                    return Verdict::fail("families", "no paths for pair {" + num(key.first) + "," + num(key.second) + "}");
                auto & fam = *it->second;
                if (int(fam.paths.size()) < b.k)
                    return Verdict::fail("at least k paths", "pair {" + num(key.first) + "," + num(key.second) + "} has " + num(long(fam.paths.size())));

                auto interiors = g.empty_set();
                auto all = g.empty_set();
                std::set<VertexList> seen;
                for (auto & p : fam.paths) {
                    if (auto v = check_path(g, p, "block path") ; ! v)
                        return v;
                    auto ends = std::minmax(p.front(), p.back());
                    if (ends != key || p.size() < 2)
                        return Verdict::fail("path ends", "a path does not join its pair");
                    if (! seen.insert(p.front() == key.first ? p : VertexList(p.rbegin(), p.rend())).second)
                        return Verdict::fail("internally disjoint", "a path is listed twice");
                    for (std::size_t t = 1 ; t + 1 < p.size() ; ++t) {
                        if (interiors.test(p[t]))
                            return Verdict::fail("internally disjoint", "vertex " + num(p[t]) + " is interior to two paths");
                        interiors.set(p[t]);
                    }
                    for (auto v : p)
                        all.set(v);
                }
                used.emplace_back(key, std::move(all));
            }

        if (strong)
            for (std::size_t i = 0 ; i < used.size() ; ++i)
                for (std::size_t j = i + 1 ; j < used.size() ; ++j) {
                    auto common = used[i].second & used[j].second;
                    auto [a, b2] = used[i].first;
                    auto [c, d] = used[j].first;
                    auto allowed = g.empty_set();
                    if (a == c || a == d)
                        allowed.set(a);
                    if (b2 == c || b2 == d)
                        allowed.set(b2);
                    if (common != allowed)
                        return Verdict::fail("strong", "families of two pairs share a vertex outside their common ends");
                }

        return Verdict::pass();
    }

    auto validate_patch(const Graph & g, const PatchWitness & p, const VertexList & X, int d, int r, bool plain) -> Verdict
    {
        require_fingerprint(g, p.graph);
        if (! g.contains(p.hub) || ! ids_ok(g, X))
            return Verdict::fail("vertex ids", "unknown hub or target vertex");
        if (int(p.paths.size()) != r)
            return Verdict::fail("r paths", "patch has " + num(long(p.paths.size())) + " paths, expected " + num(r));
        if (auto v = validate_bundle(g, Bundle{ p.graph, { p.hub }, p.paths }, plain) ; ! v)
            return v;

        auto xs = g.make_set(X);
        for (auto & path : p.paths)
            if (std::find(path.begin(), path.end(), p.hub) != path.end())
                return Verdict::fail("(P1)", "the hub lies on a path");

        for (std::size_t i = 0 ; i < p.paths.size() ; ++i)
            if (path_length(p.paths[i]) < d)
                return Verdict::fail("(P2)", "path " + num(long(i)) + " has length " + num(path_length(p.paths[i])));

        for (std::size_t i = 0 ; i < p.paths.size() ; ++i) {
            auto & path = p.paths[i];
            VertexList in_x, hub_nbrs;
            for (auto v : path) {
                if (xs.test(v))
                    in_x.push_back(v);
                if (g.adjacent(p.hub, v))
                    hub_nbrs.push_back(v);
            }
            auto fits = [&] (Vertex xl, Vertex yl) {
                return in_x == VertexList{ xl } && hub_nbrs == VertexList{ yl };
            };
            if (! fits(path.front(), path.back()) && ! fits(path.back(), path.front()))
                return Verdict::fail("(P3)", "path " + num(long(i)) + " does not meet X and the hub exactly at opposite ends");
        }
        return Verdict::pass();
    }

    auto validate_match(const Graph & g, const MatchWitness & m, const VertexList & X, int d, int r, bool plain) -> Verdict
    {
        require_fingerprint(g, m.graph);
        if (! ids_ok(g, X))
            return Verdict::fail("vertex ids", "unknown target vertex");
        if (int(m.paths.size()) != r)
            return Verdict::fail("r paths", "match has " + num(long(m.paths.size())) + " paths, expected " + num(r));
        if (auto v = validate_bundle(g, Bundle{ m.graph, {}, m.paths }, plain) ; ! v)
            return v;

        for (std::size_t i = 0 ; i < m.paths.size() ; ++i)
            if (path_length(m.paths[i]) < d)
                return Verdict::fail("(M1)", "path " + num(long(i)) + " has length " + num(path_length(m.paths[i])));

        auto xs = g.make_set(X);
        for (std::size_t i = 0 ; i < m.paths.size() ; ++i) {
            auto & path = m.paths[i];
            for (std::size_t t = 0 ; t < path.size() ; ++t) {
                bool end = (t == 0 || t + 1 == path.size());
                if (xs.test(path[t]) != end)
                    return Verdict::fail("(M2)", "path " + num(long(i)) + " meets X other than at its ends");
            }
        }
        return Verdict::pass();
    }

    auto validate_minor_model(const Graph & g, const MinorModelWitness & m) -> Verdict
    {
        require_fingerprint(g, m.graph);
        if (int(m.branch_sets.size()) != m.target.order())
            return Verdict::fail("branch sets", "need one branch set per target vertex");

        auto used = g.empty_set();
        std::vector<VertexSet> sets;
        for (std::size_t i = 0 ; i < m.branch_sets.size() ; ++i) {
            auto & b = m.branch_sets[i];
            if (b.empty() || ! ids_ok(g, b) || ! distinct(b))
                return Verdict::fail("branch sets", "branch set " + num(long(i)) + " is malformed");
            auto s = g.make_set(b);
            if (s.intersects(used))
                return Verdict::fail("disjoint", "branch set " + num(long(i)) + " overlaps an earlier one");
            used |= s;
            if (! is_connected_subset(g, b))
                return Verdict::fail("connected", "branch set " + num(long(i)) + " is not connected");
            sets.push_back(std::move(s));
        }

        for (auto [u, v] : m.target.edges()) {
            bool touching = false;
            for (auto a = sets[u].find_first() ; a != VertexSet::npos && ! touching ; a = sets[u].find_next(a))
                touching = g.row(Vertex(a)).intersects(sets[v]);
            if (! touching)
                return Verdict::fail("edges", "no edge between branch sets " + num(u) + " and " + num(v));
        }
        return Verdict::pass();
    }

    auto validate_tree_decomposition(const Graph & g, const TreeDecompositionWitness & t) -> Verdict
    {
        require_fingerprint(g, t.graph);
        auto nodes = int(t.bags.size());
        if (nodes == 0)
            return Verdict::fail("tree", "no nodes");
        if (int(t.tree_edges.size()) != nodes - 1)
            return Verdict::fail("tree", "a tree on " + num(nodes) + " nodes has " + num(nodes - 1) + " edges");

        std::vector<VertexList> tree_adj(static_cast<std::size_t>(nodes));
        for (auto [a, b] : t.tree_edges) {
            if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b)
                return Verdict::fail("tree", "malformed tree edge");
            tree_adj[a].push_back(b);
            tree_adj[b].push_back(a);
        }
        {
            std::vector<bool> seen(std::size_t(nodes), false);
            VertexList stack{ 0 };
            seen[0] = true;
            int reached = 1;
            while (! stack.empty()) {
                auto a = stack.back();
                stack.pop_back();
                for (auto b : tree_adj[a])
                    if (! seen[b]) {
                        seen[b] = true;
                        ++reached;
                        stack.push_back(b);
                    }
            }
            if (reached != nodes)
                return Verdict::fail("tree", "tree is disconnected");
        }

        std::vector<VertexSet> bag_sets;
        for (std::size_t i = 0 ; i < t.bags.size() ; ++i) {
            if (! ids_ok(g, t.bags[i]) || ! distinct(t.bags[i]))
                return Verdict::fail("bags", "bag " + num(long(i)) + " is malformed");
            if (int(t.bags[i].size()) > t.width + 1)
                return Verdict::fail("(T2)", "bag " + num(long(i)) + " has " + num(long(t.bags[i].size())) + " vertices");
            bag_sets.push_back(g.make_set(t.bags[i]));
        }

        for (Vertex v = 0 ; v < g.order() ; ++v) {
            VertexList holding;
            for (int a = 0 ; a < nodes ; ++a)
                if (bag_sets[a].test(v))
                    holding.push_back(a);
            if (holding.empty())
                return Verdict::fail("subtree", "vertex " + num(v) + " is in no bag");
            std::vector<bool> in(std::size_t(nodes), false), seen(std::size_t(nodes), false);
            for (auto a : holding)
                in[a] = true;
            VertexList stack{ holding[0] };
            seen[holding[0]] = true;
            std::size_t reached = 1;
            while (! stack.empty()) {
                auto a = stack.back();
                stack.pop_back();
                for (auto b : tree_adj[a])
                    if (in[b] && ! seen[b]) {
                        seen[b] = true;
                        ++reached;
                        stack.push_back(b);
                    }
            }
            if (reached != holding.size())
                return Verdict::fail("subtree", "bags containing vertex " + num(v) + " do not form a subtree");
        }

        for (auto [u, v] : g.edges()) {
            bool covered = false;
            for (auto & s : bag_sets)
                if (s.test(u) && s.test(v)) {
                    covered = true;
                    break;
                }
            if (! covered)
                return Verdict::fail("(T1)", "edge " + num(u) + "-" + num(v) + " is in no bag");
        }
        return Verdict::pass();
    }

    auto validate_embedding(const Graph & g, const EmbeddingWitness & e) -> Verdict
    {
        require_fingerprint(g, e.graph);
        if (int(e.map.size()) != e.pattern.order())
            return Verdict::fail("map", "one image per pattern vertex is required");
        if (! ids_ok(g, e.map) || ! distinct(e.map))
            return Verdict::fail("injective", "images are not distinct vertices");
        for (int i = 0 ; i < e.pattern.order() ; ++i)
            for (int j = i + 1 ; j < e.pattern.order() ; ++j)
                if (e.pattern.adjacent(i, j) != g.adjacent(e.map[i], e.map[j]))
                    return Verdict::fail("induced", "pattern pair " + num(i) + "," + num(j) + " is not preserved");
        return Verdict::pass();
    }

    auto validate_subdivision_embedding(const Graph & g, const SubdivisionEmbedding & e, std::optional<int> max_extra) -> Verdict
    {
        require_fingerprint(g, e.graph);
        auto base_edges = e.base.edges();
        if (int(e.branch.size()) != e.base.order())
            return Verdict::fail("branch map", "one branch vertex per base vertex is required");
        if (! ids_ok(g, e.branch) || ! distinct(e.branch))
            return Verdict::fail("branch map", "branch vertices are not distinct vertices");
        if (e.edge_paths.size() != base_edges.size())
            return Verdict::fail("edge paths", "one path per base edge is required");

        auto used = g.make_set(e.branch);
        auto structure = std::vector<std::set<Vertex>>(std::size_t(g.order()));
        for (std::size_t i = 0 ; i < base_edges.size() ; ++i) {
            auto & p = e.edge_paths[i];
            auto [u, v] = base_edges[i];
            if (auto ok = check_path(g, p, "edge path " + num(long(i))) ; ! ok)
                return ok;
            if (p.size() < 2 || p.front() != e.branch[u] || p.back() != e.branch[v])
                return Verdict::fail("edge paths", "path " + num(long(i)) + " does not join its branch vertices");
            if (max_extra && int(p.size()) - 2 > *max_extra)
                return Verdict::fail("(<=r)", "path " + num(long(i)) + " has length " + num(path_length(p)));
            for (std::size_t t = 1 ; t + 1 < p.size() ; ++t) {
                if (used.test(p[t]))
                    return Verdict::fail("internally disjoint", "vertex " + num(p[t]) + " is reused");
                used.set(p[t]);
            }
            for (std::size_t t = 0 ; t + 1 < p.size() ; ++t) {
                structure[p[t]].insert(p[t + 1]);
                structure[p[t + 1]].insert(p[t]);
            }
        }

        for (auto a = used.find_first() ; a != VertexSet::npos ; a = used.find_next(a)) {
            auto actual = g.row(Vertex(a)) & used;
            for (auto b = actual.find_first() ; b != VertexSet::npos ; b = actual.find_next(b))
                if (! structure[a].contains(Vertex(b)))
                    return Verdict::fail("induced", "extra edge " + num(long(a)) + "-" + num(long(b)));
        }
        return Verdict::pass();
    }

    auto validate_line_subdivision_embedding(const Graph & g, const LineSubdivisionEmbedding & e) -> Verdict
    {
        require_fingerprint(g, e.graph);
        auto base_edges = e.base.edges();
        if (e.edge_paths.size() != base_edges.size())
            return Verdict::fail("edge paths", "one path per base edge is required");

        auto used = g.empty_set();
        auto structure = std::vector<std::set<Vertex>>(std::size_t(g.order()));
        auto link = [&] (Vertex a, Vertex b) {
            structure[a].insert(b);
            structure[b].insert(a);
        };

        std::vector<VertexList> ends_at(std::size_t(e.base.order()));
        for (std::size_t i = 0 ; i < base_edges.size() ; ++i) {
            auto & p = e.edge_paths[i];
            if (auto ok = check_path(g, p, "edge path " + num(long(i))) ; ! ok)
                return ok;
            for (auto v : p) {
                if (used.test(v))
                    return Verdict::fail("disjoint", "vertex " + num(v) + " is reused");
                used.set(v);
            }
            for (std::size_t t = 0 ; t + 1 < p.size() ; ++t)
                link(p[t], p[t + 1]);
            ends_at[base_edges[i].first].push_back(p.front());
            ends_at[base_edges[i].second].push_back(p.back());
        }
        for (auto & clique : ends_at)
            for (std::size_t i = 0 ; i < clique.size() ; ++i)
                for (std::size_t j = i + 1 ; j < clique.size() ; ++j)
                    link(clique[i], clique[j]);

        for (auto a = used.find_first() ; a != VertexSet::npos ; a = used.find_next(a)) {
            auto actual = g.row(Vertex(a)) & used;
            std::set<Vertex> actual_set;
            for (auto b = actual.find_first() ; b != VertexSet::npos ; b = actual.find_next(b))
                actual_set.insert(Vertex(b));
            if (actual_set != structure[a])
                return Verdict::fail("induced", "vertex " + num(long(a)) + " has the wrong neighbourhood");
        }
        return Verdict::pass();
    }
}
