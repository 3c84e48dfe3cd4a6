#include <pinched/extractors.hh>

#include "lemmas.hh"

#include <algorithm>
#include <climits>
#include <map>

namespace pinched
{
    auto block_short_path_ramsey(const Graph & g, const BlockWitness & block, int h, int m, int q,
            const ExtractOptions & opt) -> std::variant<BlockRamseyResult, NoAlternative>
    {
        if (h < 1 || m < 1 || q < 1)
            throw PreconditionFailed("(bad parameters)", "block_short_path_ramsey: parameters must be positive");
        require_fingerprint(g, block.graph);
        if (auto v = validate_block(g, block, true) ; ! v)
            throw PreconditionFailed("(not a strong block)", "block_short_path_ramsey: " + to_string(v));
        if (! opt.relaxed && BigInt(block.block.size()) < ramsey_bound(m, q))
            throw PreconditionFailed("(too small block)", "block_short_path_ramsey: need " + ramsey_bound(m, q).str() + " vertices");

        auto & B = block.block;
        auto n = int(B.size());
        std::map<Vertex, int> index;
        for (int i = 0 ; i < n ; ++i)
            index[B[i]] = i;

        // shortest family member per pair; edges of J where it is short enough
        std::map<std::pair<int, int>, VertexList> shortest;
        std::vector<Edge> jedges;
        for (auto & f : block.families) {
            auto i = index.at(f.x), j = index.at(f.y);
            auto key = std::minmax(i, j);
            const VertexList * best = nullptr;
            for (auto & p : f.paths)
                if (! best || p.size() < best->size())
                    best = &p;
            if (! best)
                continue;
            shortest[key] = *best;
            if (path_length(*best) <= h)
                jedges.push_back(key);
        }
        Graph J(n, jedges);

        VertexList all(static_cast<std::size_t>(n));
        for (int i = 0 ; i < n ; ++i)
            all[i] = i;
        auto r = detail::ramsey(J, all, m, q);
        if (! r) {
            if (! opt.relaxed)
                throw std::logic_error("block_short_path_ramsey: bound met but recursion failed");
            return NoAlternative{ "recursion ran out of block vertices" };
        }

        BlockRamseyResult out;
        out.clique = r->clique;
        for (auto i : r->vertices)
            out.vertices.push_back(B[i]);

        if (out.clique) {
            for (std::size_t a = 0 ; a < r->vertices.size() ; ++a)
                for (std::size_t b = a + 1 ; b < r->vertices.size() ; ++b) {
                    auto & p = shortest.at(std::minmax(r->vertices[a], r->vertices[b]));
                    if (path_length(p) > h)
                        throw std::logic_error("block_short_path_ramsey: long path in the clique");
                    out.paths.push_back(p);
                }
            // the union must be a subdivision: interiors pairwise disjoint and
            // avoiding the branch vertices
            auto branch = g.make_set(out.vertices);
            auto seen = g.empty_set();
            for (auto & p : out.paths)
                for (std::size_t k = 1 ; k + 1 < p.size() ; ++k) {
                    if (branch.test(p[k]) || seen.test(p[k]))
                        throw std::logic_error("block_short_path_ramsey: paths are not internally disjoint");
                    seen.set(p[k]);
                }
        }
        else {
            for (std::size_t a = 0 ; a < r->vertices.size() ; ++a)
                for (std::size_t b = a + 1 ; b < r->vertices.size() ; ++b) {
                    auto key = std::minmax(r->vertices[a], r->vertices[b]);
                    if (auto it = shortest.find(key) ; it != shortest.end() && path_length(it->second) <= h)
                        throw std::logic_error("block_short_path_ramsey: short path inside the stable set");
                }
        }
        return out;
    }

    auto nonrigid_path_or_constellation(const Graph & g, const std::vector<VertexList> & first,
            const std::vector<VertexList> & second, int l, int s,
            const ExtractOptions & opt) -> std::variant<NonRigidResult, NoAlternative>
    {
        const char * who = "nonrigid_path_or_constellation";
        if (l < 1 || s < 1)
            throw PreconditionFailed("(bad parameters)", std::string(who) + ": parameters must be positive");
        for (auto * family : { &first, &second })
            if (auto v = validate_bundle(g, Bundle{ g.fingerprint(), {}, *family }, true) ; ! v)
                throw PreconditionFailed("(not a plain polypath)", std::string(who) + ": " + to_string(v));
        {
            auto a = g.empty_set(), b = g.empty_set();
            for (auto & p : first)
                a |= g.make_set(p);
            for (auto & p : second)
                b |= g.make_set(p);
            if (a.intersects(b))
                throw PreconditionFailed("(not disentangled)", std::string(who) + ": the polypaths share a vertex");
        }
        if (std::ssize(second) < l)
            throw PreconditionFailed("(too few paths)", std::string(who) + ": second polypath has fewer than l paths");
        if (! opt.relaxed && BigInt(first.size()) < BigInt(s) * big_pow(BigInt(second.size()), l))
            throw PreconditionFailed("(too few paths)", std::string(who) + ": first polypath needs s |second|^l paths");

        std::vector<VertexSet> second_set;
        for (auto & p : second)
            second_set.push_back(g.make_set(p));

        std::map<std::vector<int>, VertexList> buckets;
        for (std::size_t i = 0 ; i < first.size() ; ++i) {
            bool rigid = false;
            for (auto v : first[i]) {
                std::vector<int> hit;
                for (std::size_t j = 0 ; j < second.size() ; ++j)
                    if (g.row(v).intersects(second_set[j]))
                        hit.push_back(int(j));
                if (std::ssize(hit) >= l) {
                    hit.resize(std::size_t(l));
                    buckets[hit].push_back(v);
                    rigid = true;
                    break;
                }
            }
            if (! rigid)
                return NonRigidResult{ int(i), std::nullopt };
        }

        for (auto & [key, xs] : buckets) {
            if (std::ssize(xs) < s)
                continue;
            Constellation c{ g.fingerprint(), VertexList(xs.begin(), xs.begin() + s), {} };
            for (auto j : key)
                c.paths.push_back(second[j]);
            if (auto v = validate_constellation(g, c, true) ; ! v)
                throw std::logic_error(std::string(who) + " produced an invalid constellation: " + to_string(v));
            return NonRigidResult{ -1, std::move(c) };
        }
        if (! opt.relaxed)
            throw std::logic_error(std::string(who) + ": bound met but no bucket reached s");
        return NoAlternative{ "every path is rigid but no l paths are shared by s of them" };
    }
}
