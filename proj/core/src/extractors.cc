#include <pinched/extractors.hh>
#include <pinched/generators.hh>

#include "lemmas.hh"

#include <algorithm>
#include <climits>
#include <map>

namespace pinched
{
    PreconditionFailed::PreconditionFailed(std::string clause, const std::string & detail) :
        std::invalid_argument(clause + ": " + detail),
        _clause(std::move(clause))
    {
    }

    auto to_string(Outcome o) -> std::string
    {
        switch (o) {
            case Outcome::alignment:      return "alignment";
            case Outcome::constellation:  return "constellation";
            case Outcome::array:          return "array";
            case Outcome::clique:         return "clique";
            case Outcome::biclique:       return "biclique";
            case Outcome::pinch:          return "pinch";
            case Outcome::stable_set:     return "stable-set";
            case Outcome::no_alternative: return "no-alternative";
        }
        return "?";
    }

    namespace
    {
        auto positive(std::initializer_list<int> args, const char * who) -> void
        {
            for (auto a : args)
                if (a < 1)
                    throw PreconditionFailed("(bad parameters)", std::string(who) + ": parameters must be positive");
        }

        auto check_constellation(const Graph & g, const Constellation & c, bool plain, const char * who) -> void
        {
            require_fingerprint(g, c.graph);
            if (auto v = validate_constellation(g, c, plain) ; ! v)
                throw PreconditionFailed(plain && v.clause == "plain" ? "(not plain)" : "(invalid constellation)",
                        std::string(who) + ": " + to_string(v));
        }

        auto check_single_path(const Graph & g, const Constellation & c, int d, const char * who) -> void
        {
            check_constellation(g, c, false, who);
            if (c.paths.size() != 1)
                throw PreconditionFailed("(not one path)", std::string(who) + ": expects an (s,1)-constellation");
            if (! is_meager(g, c, d))
                throw PreconditionFailed("(not d-meager)", std::string(who) + ": some path vertex has more than "
                        + std::to_string(d) + " neighbours in S");
        }

        auto check_size(bool relaxed, std::size_t have, const BigInt & need, const char * clause, const char * who) -> void
        {
            if (! relaxed && BigInt(have) < need)
                throw PreconditionFailed(clause, std::string(who) + ": have " + std::to_string(have)
                        + ", need " + need.str());
        }

        /// Only a relaxed run may end without an alternative.
        auto no_alternative(bool relaxed, const NoAlternative & why, const char * who) -> ExtractionResult
        {
            if (! relaxed)
                throw std::logic_error(std::string(who) + ": bound met but no alternative found (" + why.reason + ")");
            return ExtractionResult{ Outcome::no_alternative, why, -1 };
        }

        auto sound(const Verdict & v, const char * who) -> void
        {
            if (! v)
                throw std::logic_error(std::string(who) + " produced an invalid certificate: " + to_string(v));
        }

        auto subset_of(const VertexList & small, const VertexList & big) -> bool
        {
            return std::all_of(small.begin(), small.end(), [&] (Vertex v) {
                    return std::find(big.begin(), big.end(), v) != big.end(); });
        }

        /// A path whose vertices appear consecutively, in either direction, on `big`.
        auto subpath_of(const VertexList & small, const VertexList & big) -> bool
        {
            if (small.empty() || small.size() > big.size())
                return false;
            for (int dir = 0 ; dir < 2 ; ++dir) {
                VertexList s = small;
                if (dir)
                    std::reverse(s.begin(), s.end());
                if (std::search(big.begin(), big.end(), s.begin(), s.end()) != big.end())
                    return true;
            }
            return false;
        }

        auto embedding_result(const Graph & g, EmbeddingWitness e, const char * who) -> ExtractionResult
        {
            sound(validate_embedding(g, e), who);
            bool clique = e.pattern.size() == std::int64_t(e.pattern.order()) * (e.pattern.order() - 1) / 2;
            return ExtractionResult{ clique ? Outcome::clique : Outcome::biclique, std::move(e), -1 };
        }

        auto alignment_result(const Graph & g, const Constellation & c0, Alignment al, Vertex from,
                const char * who) -> ExtractionResult
        {
            sound(validate_alignment(g, al), who);
            if (! subset_of(al.order, c0.stable) || ! subpath_of(al.path, c0.paths.front()))
                throw std::logic_error(std::string(who) + ": alignment escapes the input constellation");
            return ExtractionResult{ Outcome::alignment, std::move(al), from };
        }
    }

    auto ramsey_clique_or_stable(const Graph & g, int c, int s, const ExtractOptions & opt,
            const VertexList & within) -> ExtractionResult
    {
        positive({ c, s }, "ramsey_clique_or_stable");
        VertexList pool = within;
        if (pool.empty())
            for (Vertex v = 0 ; v < g.order() ; ++v)
                pool.push_back(v);
        else {
            for (auto v : pool)
                if (! g.contains(v))
                    throw PreconditionFailed("(bad vertex)", "ramsey_clique_or_stable: unknown vertex " + std::to_string(v));
            auto sorted = pool;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw PreconditionFailed("(bad vertex)", "ramsey_clique_or_stable: repeated vertex");
        }
        check_size(opt.relaxed, pool.size(), ramsey_bound(c, s), "(too few vertices)", "ramsey_clique_or_stable");

        auto r = detail::ramsey(g, pool, c, s);
        if (! r)
            return no_alternative(opt.relaxed, { "recursion ran out of vertices" }, "ramsey_clique_or_stable");
        if (r->clique) {
            if (std::ssize(r->vertices) != c || ! is_clique(g, r->vertices))
                throw std::logic_error("ramsey_clique_or_stable: bad clique");
            return embedding_result(g, detail::clique_embedding(g, r->vertices), "ramsey_clique_or_stable");
        }
        if (std::ssize(r->vertices) != s || ! is_stable(g, r->vertices))
            throw std::logic_error("ramsey_clique_or_stable: bad stable set");
        auto v = r->vertices;
        std::sort(v.begin(), v.end());
        return ExtractionResult{ Outcome::stable_set, StableSetWitness{ g.fingerprint(), std::move(v) }, -1 };
    }

    auto alignment_or_constellation(const Graph & g, const Constellation & c0, int a, int d, int s, int l,
            const ExtractOptions & opt) -> ExtractionResult
    {
        const char * who = "alignment_or_constellation";
        positive({ a, d, s, l }, who);
        check_single_path(g, c0, d, who);
        check_size(opt.relaxed, c0.stable.size(), lemma42_bound(a, d, s, l), "(too small S_0)", who);

        auto path = detail::oriented(c0.paths.front());
        auto r = detail::lemma42(g, c0.stable, path, a, d, s, l);
        if (auto al = std::get_if<Alignment>(&r))
            return alignment_result(g, c0, std::move(*al), path.front(), who);
        if (auto no = std::get_if<NoAlternative>(&r))
            return no_alternative(opt.relaxed, *no, who);

        auto & con = std::get<Constellation>(r);
        sound(validate_constellation(g, con, true), who);
        if (std::ssize(con.stable) != s || std::ssize(con.paths) != l || ! subset_of(con.stable, c0.stable))
            throw std::logic_error("alignment_or_constellation: constellation has the wrong shape");
        for (auto & p : con.paths)
            if (! subpath_of(p, c0.paths.front()))
                throw std::logic_error("alignment_or_constellation: path escapes L_0");
        return ExtractionResult{ Outcome::constellation, std::move(con), path.front() };
    }

    auto pinched_alignment_or_witness(const Graph & g, const Constellation & c0, int a, int c, int d, int h,
            const ExtractOptions & opt) -> ExtractionResult
    {
        const char * who = "pinched_alignment_or_witness";
        positive({ a, c, d, h }, who);
        check_single_path(g, c0, d, who);
        check_size(opt.relaxed, c0.stable.size(), lemma43_bound(a, c, d, h), "(too small S_0)", who);

        auto path = detail::oriented(c0.paths.front());
        auto r = detail::lemma43(g, c0.stable, path, a, c, d, h);
        if (auto al = std::get_if<Alignment>(&r))
            return alignment_result(g, c0, std::move(*al), path.front(), who);
        if (auto no = std::get_if<NoAlternative>(&r))
            return no_alternative(opt.relaxed, *no, who);

        auto & pw = std::get<PinchWitness>(r);
        sound(validate_pinch_witness(g, pw, c, h), who);
        return ExtractionResult{ Outcome::pinch, std::move(pw), path.front() };
    }

    auto meager_or_biclique(const Graph & g, const Constellation & con, int l, int t,
            const ExtractOptions & opt) -> ExtractionResult
    {
        const char * who = "meager_or_biclique";
        positive({ l, t }, who);
        check_constellation(g, con, false, who);
        int s = int(con.stable.size());
        check_size(opt.relaxed, con.paths.size(), lemma44_bound(std::max(s, 1), l, t), "(too few paths)", who);

        auto quota = at_most(big_pow(BigInt(s) * t, t), LLONG_MAX);
        auto r = detail::lemma44(g, con, std::size_t(l), t, quota, opt.relaxed);
        if (auto e = std::get_if<EmbeddingWitness>(&r))
            return embedding_result(g, std::move(*e), who);
        if (auto no = std::get_if<NoAlternative>(&r))
            return no_alternative(opt.relaxed, *no, who);

        auto & light = std::get<detail::LightPaths>(r);
        Constellation out{ g.fingerprint(), con.stable, {} };
        for (int i = 0 ; i < l ; ++i)
            out.paths.push_back(con.paths[light.indices[i]]);
        sound(validate_constellation(g, out), who);
        if (! is_meager(g, out, t))
            throw std::logic_error("meager_or_biclique: result is not t-meager");
        return ExtractionResult{ Outcome::constellation, std::move(out), -1 };
    }

    auto array_or_witness(const Graph & g, const Constellation & con, int c, int h, int s, int t,
            const ExtractOptions & opt) -> ExtractionResult
    {
        const char * who = "array_or_witness";
        positive({ c, h, s, t }, who);
        check_constellation(g, con, true, who);
        check_size(opt.relaxed, con.stable.size(), sigma(c, h, s, t), "(too small S)", who);
        check_size(opt.relaxed, con.paths.size(), lambda(c, h, s, t), "(too few paths)", who);

        // meager sub-constellation: c s s! sigma^s paths, or every light one
        // when relaxed
        auto sg = sigma(c, h, s, t);
        auto keep = at_most(BigInt(c) * s * factorial(s) * big_pow(sg, s), LLONG_MAX);
        auto quota = at_most(big_pow(sg * t, t), LLONG_MAX);
        auto want = opt.relaxed ? std::size_t(1) : std::size_t(keep);
        auto r = detail::lemma44(g, con, want, t, quota, opt.relaxed);
        if (auto e = std::get_if<EmbeddingWitness>(&r))
            return embedding_result(g, std::move(*e), who);
        if (auto no = std::get_if<NoAlternative>(&r))
            return no_alternative(opt.relaxed, *no, who);
        auto light = std::get<detail::LightPaths>(r).indices;
        if (! opt.relaxed)
            light.resize(std::size_t(keep));

        // one s-alignment per path, or a pinch witness
        struct Aligned
        {
            std::size_t path;
            Alignment alignment;
        };
        std::vector<Aligned> aligned;
        for (auto i : light) {
            auto path = detail::oriented(con.paths[i]);
            auto pr = detail::lemma43(g, con.stable, path, s, c, t, h);
            if (auto pw = std::get_if<PinchWitness>(&pr)) {
                sound(validate_pinch_witness(g, *pw, c, h), who);
                return ExtractionResult{ Outcome::pinch, std::move(*pw), path.front() };
            }
            if (auto al = std::get_if<Alignment>(&pr))
                aligned.push_back({ i, std::move(*al) });
            else if (! opt.relaxed)
                throw std::logic_error("array_or_witness: alignment step failed above the bound");
        }

        // common (S, pi): first bucket, by key, with enough paths
        std::map<VertexList, std::vector<std::size_t>> buckets;
        for (std::size_t k = 0 ; k < aligned.size() ; ++k)
            buckets[aligned[k].alignment.order].push_back(k);
        std::size_t need = opt.relaxed ? std::size_t(s) : std::size_t(c) * s;
        const std::vector<std::size_t> * bucket = nullptr;
        const VertexList * order = nullptr;
        for (auto & [key, members] : buckets)
            if (members.size() >= need) {
                bucket = &members;
                order = &key;
                break;
            }
        if (! bucket)
            return no_alternative(opt.relaxed, { "no ordering shared by enough paths" }, who);

        std::vector<std::size_t> members = *bucket;
        if (! opt.relaxed)
            members.resize(need);

        // hollow filter
        Array arr{ g.fingerprint(), *order, {}, {}, h };
        for (auto k : members) {
            auto & al = aligned[k].alignment;
            Constellation one{ g.fingerprint(), *order, { al.path } };
            if (is_hollow(g, one, h) && std::ssize(arr.paths) < s) {
                arr.paths.push_back(al.path);
                arr.ends.push_back(al.end);
            }
        }
        if (std::ssize(arr.paths) == s) {
            sound(validate_array(g, arr), who);
            return ExtractionResult{ Outcome::array, std::move(arr), -1 };
        }

        // otherwise some x has long gaps on c of the paths
        auto hubs = *order;
        std::sort(hubs.begin(), hubs.end());
        for (auto x : hubs) {
            PinchWitness pw{ g.fingerprint(), x, {} };
            for (auto k : members) {
                Constellation one{ g.fingerprint(), *order, { aligned[k].alignment.path } };
                for (auto & gap : gaps_of(g, one, x))
                    if (path_length(gap) >= h) {
                        VertexList cycle{ x };
                        cycle.insert(cycle.end(), gap.begin(), gap.end());
                        pw.cycles.push_back(std::move(cycle));
                        break;
                    }
                if (std::ssize(pw.cycles) == c)
                    break;
            }
            if (std::ssize(pw.cycles) == c) {
                sound(validate_pinch_witness(g, pw, c, h), who);
                return ExtractionResult{ Outcome::pinch, std::move(pw), -1 };
            }
        }
        return no_alternative(opt.relaxed, { "too few hollow paths and no hub with c long gaps" }, who);
    }
}
