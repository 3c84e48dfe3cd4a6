#include "template.hh"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace pinched::detail
{
    namespace
    {
        using EdgeKey = std::tuple<int, int, int, int>;

        auto edge_keys(const Template & t, const VertexList & perm) -> std::vector<EdgeKey>
        {
            std::vector<EdgeKey> keys;
            for (auto & e : t.edges) {
                auto a = perm[e.a], b = perm[e.b];
                keys.emplace_back(std::min(a, b), std::max(a, b), e.min_length, e.max_length);
            }
            std::sort(keys.begin(), keys.end());
            return keys;
        }

        constexpr std::size_t max_symmetry_order = 8;

        /// Stabiliser-chain constraints from a brute-force automorphism group.
        auto symmetry_constraints(const Template & t) -> std::vector<std::pair<int, int>>
        {
            std::vector<std::pair<int, int>> result;
            auto n = t.order();
            if (n < 2 || n > max_symmetry_order)
                return result;

            VertexList identity(n);
            std::iota(identity.begin(), identity.end(), 0);
            auto reference = edge_keys(t, identity);

            std::vector<VertexList> group;
            auto perm = identity;
            do {
                bool degrees_ok = true;
                for (std::size_t v = 0 ; v < n && degrees_ok ; ++v)
                    degrees_ok = t.incident[v].size() == t.incident[perm[v]].size();
                if (degrees_ok && edge_keys(t, perm) == reference)
                    group.push_back(perm);
            } while (std::next_permutation(perm.begin(), perm.end()));

            while (group.size() > 1) {
                int pivot = -1;
                std::vector<int> orbit;
                for (int v = 0 ; v < int(n) && pivot == -1 ; ++v) {
                    std::vector<int> o;
                    for (auto & g : group)
                        o.push_back(g[v]);
                    std::sort(o.begin(), o.end());
                    o.erase(std::unique(o.begin(), o.end()), o.end());
                    if (o.size() > 1) {
                        pivot = v;
                        orbit = o;
                    }
                }
                if (pivot == -1)
                    break;
                for (auto w : orbit)
                    if (w != pivot)
                        result.emplace_back(pivot, w);
                std::erase_if(group, [&] (const VertexList & g) { return g[pivot] != pivot; });
            }
            return result;
        }
    }

    auto make_template(const Graph & base, const SubdivisionBounds & bounds, bool drop_isolated) -> Template
    {
        auto base_edges = base.edges();
        if (! bounds.min_length.empty() && bounds.min_length.size() != base_edges.size())
            throw std::invalid_argument("subdivision bounds: one minimum per base edge is required");
        if (! bounds.max_length.empty() && bounds.max_length.size() != base_edges.size())
            throw std::invalid_argument("subdivision bounds: one maximum per base edge is required");

        std::map<Edge, std::size_t> index;
        for (std::size_t i = 0 ; i < base_edges.size() ; ++i)
            index[base_edges[i]] = i;
        auto edge_index = [&] (Vertex u, Vertex v) { return index.at(std::minmax(u, v)); };
        auto step_min = [&] (std::size_t i) { return bounds.min_length.empty() ? 1 : std::max(1, bounds.min_length[i]); };
        auto step_max = [&] (std::size_t i) { return bounds.max_length.empty() ? INT_MAX : bounds.max_length[i]; };

        int n = base.order();
        std::vector<bool> keep(static_cast<std::size_t>(n));
        for (Vertex v = 0 ; v < n ; ++v)
            keep[v] = base.degree(v) != 2;

        // a component that is a bare cycle keeps two adjacent vertices
        {
            std::vector<bool> seen(std::size_t(n), false);
            for (Vertex v = 0 ; v < n ; ++v) {
                if (seen[v])
                    continue;
                VertexList comp{ v }, stack{ v };
                seen[v] = true;
                while (! stack.empty()) {
                    auto u = stack.back();
                    stack.pop_back();
                    for (auto w : base.neighbours(u))
                        if (! seen[w]) {
                            seen[w] = true;
                            comp.push_back(w);
                            stack.push_back(w);
                        }
                }
                if (std::none_of(comp.begin(), comp.end(), [&] (Vertex u) { return keep[u]; })) {
                    auto lo = *std::min_element(comp.begin(), comp.end());
                    keep[lo] = true;
                    keep[base.neighbours(lo).front()] = true;
                }
            }
        }

        while (true) {
            Template t;
            std::vector<int> tid(std::size_t(n), -1);
            for (Vertex v = 0 ; v < n ; ++v)
                if (keep[v] && ! (drop_isolated && base.degree(v) == 0)) {
                    tid[v] = int(t.vertex.size());
                    t.vertex.push_back(v);
                }
            t.incident.resize(t.vertex.size());

            std::vector<bool> covered(base_edges.size(), false);
            Vertex loop_fix = -1;
            for (auto a : t.vertex) {
                for (auto first : base.neighbours(a)) {
                    if (covered[edge_index(a, first)])
                        continue;
                    TemplateEdge te;
                    te.chain = { a };
                    Vertex prev = a, cur = first;
                    while (true) {
                        auto i = edge_index(prev, cur);
                        covered[i] = true;
                        te.base_edge.push_back(i);
                        te.step_min.push_back(step_min(i));
                        te.step_max.push_back(step_max(i));
                        te.chain.push_back(cur);
                        if (keep[cur])
                            break;
                        auto & nb = base.neighbours(cur);
                        auto next = (nb[0] == prev) ? nb[1] : nb[0];
                        prev = cur;
                        cur = next;
                    }
                    if (cur == a) {
                        loop_fix = te.chain[1];
                        break;
                    }
                    te.a = tid[a];
                    te.b = tid[cur];
                    te.min_length = 0;
                    long long max_total = 0;
                    for (std::size_t k = 0 ; k < te.step_min.size() ; ++k) {
                        te.min_length += te.step_min[k];
                        max_total += te.step_max[k];
                    }
                    te.max_length = int(std::min<long long>(max_total, INT_MAX));
                    t.incident[te.a].push_back(t.edges.size());
                    t.incident[te.b].push_back(t.edges.size());
                    t.edges.push_back(std::move(te));
                }
                if (loop_fix != -1)
                    break;
            }

            if (loop_fix != -1) {
                keep[loop_fix] = true;
                continue;
            }
            t.less_than = symmetry_constraints(t);
            return t;
        }
    }

    auto split_lengths(const TemplateEdge & te, int total) -> std::vector<int>
    {
        std::vector<int> parts = te.step_min;
        int extra = total - te.min_length;
        for (std::size_t k = 0 ; k < parts.size() && extra > 0 ; ++k) {
            int add = int(std::min<long long>(extra, (long long)(te.step_max[k]) - parts[k]));
            parts[k] += add;
            extra -= add;
        }
        return parts;
    }

    auto expand_subdivision(const Graph & g, const Graph & base, const Template & t,
            const VertexList & img, const std::vector<VertexList> & route) -> SubdivisionEmbedding
    {
        auto base_edges = base.edges();
        SubdivisionEmbedding emb{ g.fingerprint(), base, VertexList(static_cast<std::size_t>(base.order()), -1),
            std::vector<VertexList>(base_edges.size()) };
        for (std::size_t z = 0 ; z < t.order() ; ++z)
            emb.branch[t.vertex[z]] = img[z];

        for (std::size_t e = 0 ; e < t.edges.size() ; ++e) {
            auto & te = t.edges[e];
            auto & path = route[e];
            auto parts = split_lengths(te, int(path.size()) - 1);
            int pos = 0;
            for (std::size_t k = 0 ; k < parts.size() ; ++k) {
                VertexList piece(path.begin() + pos, path.begin() + pos + parts[k] + 1);
                emb.branch[te.chain[k]] = piece.front();
                emb.branch[te.chain[k + 1]] = piece.back();
                if (te.chain[k] > te.chain[k + 1])
                    std::reverse(piece.begin(), piece.end());
                emb.edge_paths[te.base_edge[k]] = std::move(piece);
                pos += parts[k];
            }
        }
        return emb;
    }
}
