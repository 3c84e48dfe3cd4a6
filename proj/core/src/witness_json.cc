#include <pinched/witness_json.hh>
#include <pinched/graph6.hh>

#include <algorithm>
#include <climits>
#include <cstdint>
#include <cstdio>
#include <set>

namespace pinched
{
    namespace
    {
        auto hex(std::uint64_t h) -> std::string
        {
            char buf[17];
            std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
            return buf;
        }

        template <typename T_>
        auto field(const Json & j, const char * key) -> T_
        {
            if (! j.is_object() || ! j.contains(key))
                throw SchemaError(std::string("missing field '") + key + "'");
            try {
                return j.at(key).get<T_>();
            }
            catch (const nlohmann::json::exception & e) {
                throw SchemaError(std::string("bad field '") + key + "': " + e.what());
            }
        }

        template <typename T_>
        auto field_or(const Json & j, const char * key, T_ fallback) -> T_
        {
            if (! j.is_object() || ! j.contains(key))
                return fallback;
            return field<T_>(j, key);
        }

        auto graph_field(const Json & j, const char * key) -> Graph
        {
            auto text = field<std::string>(j, key);
            try {
                return graph6_parse(text);
            }
            catch (const Graph6Error & e) {
                throw SchemaError(std::string("bad graph6 in '") + key + "': " + e.what());
            }
        }

        auto payload(const Json & j, const char * kind) -> const Json &
        {
            check_envelope(j);
            if (j.at("kind") != kind)
                throw SchemaError(std::string("expected kind '") + kind + "', got '" + j.at("kind").get<std::string>() + "'");
            return j.at("payload");
        }

        auto model_payload(const MinorModelWitness & m) -> Json
        {
            return Json{ { "target", graph6_emit(m.target) }, { "branch_sets", m.branch_sets } };
        }

        auto model_from_payload(const Fingerprint & fp, const Json & p) -> MinorModelWitness
        {
            return MinorModelWitness{ fp, graph_field(p, "target"), field<std::vector<VertexList>>(p, "branch_sets") };
        }

        auto array_payload(const Array & a) -> Json
        {
            return Json{ { "order", a.order }, { "paths", a.paths }, { "ends", a.ends }, { "h", a.h } };
        }

        auto array_from_payload(const Fingerprint & fp, const Json & p) -> Array
        {
            return Array{ fp, field<VertexList>(p, "order"), field<std::vector<VertexList>>(p, "paths"),
                field<VertexList>(p, "ends"), field<int>(p, "h") };
        }

        auto validate_stable_set(const Graph & g, const VertexList & vs) -> Verdict
        {
            std::set<Vertex> seen;
            for (auto v : vs) {
                if (! g.contains(v))
                    return Verdict::fail("vertices in range", "vertex " + std::to_string(v));
                if (! seen.insert(v).second)
                    return Verdict::fail("vertices distinct", "vertex " + std::to_string(v));
            }
            for (std::size_t i = 0 ; i < vs.size() ; ++i)
                for (std::size_t j = i + 1 ; j < vs.size() ; ++j)
                    if (g.adjacent(vs[i], vs[j]))
                        return Verdict::fail("S stable", std::to_string(vs[i]) + " ~ " + std::to_string(vs[j]));
            return Verdict::pass();
        }
    }

    auto fingerprint_json(const Fingerprint & f) -> Json
    {
        return Json{ { "n", f.n }, { "m", f.m }, { "hash", hex(f.hash) } };
    }

    auto fingerprint_from_json(const Json & j) -> Fingerprint
    {
        Fingerprint f;
        f.n = field<int>(j, "n");
        f.m = field<std::int64_t>(j, "m");
        auto h = field<std::string>(j, "hash");
        if (h.empty() || h.size() > 16 || h.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos)
            throw SchemaError("fingerprint hash must be up to 16 hex digits");
        f.hash = std::stoull(h, nullptr, 16);
        return f;
    }

    auto envelope(const std::string & kind, const Fingerprint & fp, Json parameters, Json payload) -> Json
    {
        if (parameters.is_null())
            parameters = Json::object();
        if (payload.is_null())
            payload = Json::object();
        return Json{
            { "schema_version", schema_version },
            { "kind", kind },
            { "graph_fingerprint", fingerprint_json(fp) },
            { "parameters", std::move(parameters) },
            { "payload", std::move(payload) } };
    }

    auto check_envelope(const Json & j) -> void
    {
        if (! j.is_object())
            throw SchemaError("witness must be a JSON object");
        auto v = field<int>(j, "schema_version");
        if (v != schema_version)
            throw SchemaError("unsupported schema_version " + std::to_string(v));
        field<std::string>(j, "kind");
        fingerprint_from_json(j.contains("graph_fingerprint") ? j.at("graph_fingerprint") : Json());
        if (! j.contains("payload") || ! j.at("payload").is_object())
            throw SchemaError("missing object field 'payload'");
        if (j.contains("parameters") && ! j.at("parameters").is_object())
            throw SchemaError("'parameters' must be an object");
    }

    auto to_json(const Bundle & b, bool plain) -> Json
    {
        return envelope("constellation", b.graph, Json{ { "plain", plain } },
                Json{ { "stable", b.stable }, { "paths", b.paths } });
    }

    auto to_json(const Alignment & a) -> Json
    {
        return envelope("alignment", a.graph, {}, Json{ { "order", a.order }, { "path", a.path }, { "end", a.end } });
    }

    auto to_json(const Array & a) -> Json
    {
        return envelope("array", a.graph, Json{ { "s", a.order.size() }, { "h", a.h } }, array_payload(a));
    }

    auto to_json(const PinchWitness & p, int c, int h) -> Json
    {
        return envelope("pinch", p.graph, Json{ { "c", c }, { "h", h } }, Json{ { "hub", p.hub }, { "cycles", p.cycles } });
    }

    auto to_json(const BlockWitness & b, bool strong) -> Json
    {
        Json fams = Json::array();
        for (auto & f : b.families)
            fams.push_back(Json{ { "x", f.x }, { "y", f.y }, { "paths", f.paths } });
        return envelope("block", b.graph, Json{ { "strong", strong } },
                Json{ { "block", b.block }, { "k", b.k }, { "families", std::move(fams) } });
    }

    auto to_json(const PatchWitness & p, const VertexList & X, int d, int r, bool plain) -> Json
    {
        return envelope("patch", p.graph, Json{ { "X", X }, { "d", d }, { "r", r }, { "plain", plain } },
                Json{ { "hub", p.hub }, { "paths", p.paths } });
    }

    auto to_json(const MatchWitness & m, const VertexList & X, int d, int r, bool plain) -> Json
    {
        return envelope("match", m.graph, Json{ { "X", X }, { "d", d }, { "r", r }, { "plain", plain } },
                Json{ { "paths", m.paths } });
    }

    auto to_json(const MinorModelWitness & m) -> Json
    {
        return envelope("minor-model", m.graph, {}, model_payload(m));
    }

    auto to_json(const TreeDecompositionWitness & t) -> Json
    {
        return envelope("tree-decomposition", t.graph, {},
                Json{ { "bags", t.bags }, { "tree_edges", t.tree_edges }, { "width", t.width } });
    }

    auto to_json(const EmbeddingWitness & e) -> Json
    {
        return envelope("embedding", e.graph, {}, Json{ { "pattern", graph6_emit(e.pattern) }, { "map", e.map } });
    }

    auto to_json(const SubdivisionEmbedding & s, const SubdivisionBounds & bounds) -> Json
    {
        Json params = Json::object();
        if (bounds.max_unsubdivided >= 0)
            params["max_unsubdivided"] = bounds.max_unsubdivided;
        return envelope("subdivision", s.graph, std::move(params),
                Json{ { "base", graph6_emit(s.base) }, { "branch", s.branch }, { "edge_paths", s.edge_paths } });
    }

    auto to_json(const LineSubdivisionEmbedding & s) -> Json
    {
        return envelope("line-subdivision", s.graph, {},
                Json{ { "base", graph6_emit(s.base) }, { "edge_paths", s.edge_paths } });
    }

    auto to_json(const StableSetWitness & s) -> Json
    {
        return envelope("stable-set", s.graph, {}, Json{ { "vertices", s.vertices } });
    }

    auto to_json(const CertifyReport & r, const Array & arr, int vertex_budget) -> Json
    {
        Json checks = Json::array();
        for (auto & c : r.checks)
            checks.push_back(Json{ { "name", c.name }, { "status", to_string(c.status) },
                    { "budget", c.budget }, { "detail", c.detail } });
        return envelope("certify-report", r.graph,
                Json{ { "s", r.s }, { "h", r.h }, { "vertex_budget", vertex_budget } },
                Json{ { "vertices", r.vertices }, { "checks", std::move(checks) },
                      { "treewidth_lower_bound", r.treewidth_lower_bound }, { "all_pass", r.all_pass() },
                      { "array", array_payload(arr) } });
    }

    auto treewidth_lower_json(const MinorModelWitness & m, int bound) -> Json
    {
        return envelope("treewidth-lower-bound", m.graph, {}, Json{ { "model", model_payload(m) }, { "bound", bound } });
    }

    auto no_witness_json(const Fingerprint & fp, Json query, const std::string & status) -> Json
    {
        return envelope("no-witness", fp, Json{ { "query", std::move(query) }, { "status", status } }, Json::object());
    }

    auto to_json(const ExtractionResult & r, const Fingerprint & fp, Json parameters) -> Json
    {
        if (parameters.is_null())
            parameters = Json::object();
        parameters["outcome"] = to_string(r.outcome);
        if (r.oriented_from >= 0)
            parameters["oriented_from"] = r.oriented_from;

        Json out = std::visit([&] (const auto & w) -> Json {
                using W = std::decay_t<decltype(w)>;
                if constexpr (std::is_same_v<W, Constellation>)
                    return to_json(w, true);
                else if constexpr (std::is_same_v<W, NoAlternative>)
                    return envelope("no-alternative", fp, {}, Json{ { "reason", w.reason } });
                else if constexpr (std::is_same_v<W, PinchWitness>) {
                    // shortest cycle gives the h it certifies unless the caller says
                    std::size_t shortest = SIZE_MAX;
                    for (auto & c : w.cycles)
                        shortest = std::min(shortest, c.size());
                    int h = w.cycles.empty() ? 0 : int(shortest) - 2;
                    return to_json(w, int(w.cycles.size()), h);
                }
                else
                    return to_json(w);
            }, r.payload);

        auto & p = out["parameters"];
        for (auto & [k, v] : parameters.items())
            p[k] = v;
        return out;
    }

    auto bundle_from_json(const Json & j) -> Bundle
    {
        check_envelope(j);
        auto kind = j.at("kind").get<std::string>();
        if (kind != "bundle" && kind != "constellation")
            throw SchemaError("expected kind 'bundle' or 'constellation', got '" + kind + "'");
        auto & p = j.at("payload");
        return Bundle{ fingerprint_from_json(j.at("graph_fingerprint")),
            field<VertexList>(p, "stable"), field<std::vector<VertexList>>(p, "paths") };
    }

    auto alignment_from_json(const Json & j) -> Alignment
    {
        auto & p = payload(j, "alignment");
        return Alignment{ fingerprint_from_json(j.at("graph_fingerprint")),
            field<VertexList>(p, "order"), field<VertexList>(p, "path"), field<Vertex>(p, "end") };
    }

    auto array_from_json(const Json & j) -> Array
    {
        auto & p = payload(j, "array");
        return array_from_payload(fingerprint_from_json(j.at("graph_fingerprint")), p);
    }

    auto pinch_from_json(const Json & j) -> PinchWitness
    {
        auto & p = payload(j, "pinch");
        return PinchWitness{ fingerprint_from_json(j.at("graph_fingerprint")),
            field<Vertex>(p, "hub"), field<std::vector<VertexList>>(p, "cycles") };
    }

    auto minor_model_from_json(const Json & j) -> MinorModelWitness
    {
        auto & p = payload(j, "minor-model");
        return model_from_payload(fingerprint_from_json(j.at("graph_fingerprint")), p);
    }

    auto tree_decomposition_from_json(const Json & j) -> TreeDecompositionWitness
    {
        auto & p = payload(j, "tree-decomposition");
        return TreeDecompositionWitness{ fingerprint_from_json(j.at("graph_fingerprint")),
            field<std::vector<VertexList>>(p, "bags"), field<std::vector<Edge>>(p, "tree_edges"), field<int>(p, "width") };
    }

    auto embedding_from_json(const Json & j) -> EmbeddingWitness
    {
        auto & p = payload(j, "embedding");
        return EmbeddingWitness{ fingerprint_from_json(j.at("graph_fingerprint")),
            graph_field(p, "pattern"), field<VertexList>(p, "map") };
    }

    auto subdivision_from_json(const Json & j) -> SubdivisionEmbedding
    {
        auto & p = payload(j, "subdivision");
        return SubdivisionEmbedding{ fingerprint_from_json(j.at("graph_fingerprint")),
            graph_field(p, "base"), field<VertexList>(p, "branch"), field<std::vector<VertexList>>(p, "edge_paths") };
    }

    auto validate_witness_json(const Graph & g, const Json & j) -> Verdict
    {
        check_envelope(j);
        auto fp = fingerprint_from_json(j.at("graph_fingerprint"));
        require_fingerprint(g, fp);

        auto kind = j.at("kind").get<std::string>();
        auto & p = j.at("payload");
        Json params = j.contains("parameters") ? j.at("parameters") : Json::object();

        if (kind == "no-witness" || kind == "no-alternative")
            return Verdict::pass();

        if (kind == "bundle" || kind == "constellation") {
            auto b = bundle_from_json(j);
            auto plain = field_or<bool>(params, "plain", false);
            auto v = kind == "bundle" ? validate_bundle(g, b, plain) : validate_constellation(g, b, plain);
            if (! v)
                return v;
            if (kind == "constellation") {
                if (params.contains("meager")) {
                    auto d = field<int>(params, "meager");
                    if (! is_meager(g, b, d))
                        return Verdict::fail("(meager)", "meagerness " + std::to_string(meagerness(g, b)) + " > " + std::to_string(d));
                }
                if (params.contains("hollow")) {
                    auto d = field<int>(params, "hollow");
                    if (! is_hollow(g, b, d))
                        return Verdict::fail("(hollow)", "some gap is shorter than " + std::to_string(d));
                }
            }
            return v;
        }
        if (kind == "alignment")
            return validate_alignment(g, alignment_from_json(j));
        if (kind == "array")
            return validate_array(g, array_from_json(j));
        if (kind == "pinch") {
            auto w = pinch_from_json(j);
            auto c = field<int>(params, "c"), h = field<int>(params, "h");
            return validate_pinch_witness(g, w, c, h);
        }
        if (kind == "block") {
            BlockWitness b{ fp, field<VertexList>(p, "block"), field<int>(p, "k"), {} };
            for (auto & f : field<Json>(p, "families"))
                b.families.push_back(PathFamily{ field<Vertex>(f, "x"), field<Vertex>(f, "y"),
                        field<std::vector<VertexList>>(f, "paths") });
            return validate_block(g, b, field_or<bool>(params, "strong", false));
        }
        if (kind == "patch" || kind == "match") {
            auto X = field<VertexList>(params, "X");
            auto d = field<int>(params, "d"), r = field<int>(params, "r");
            auto plain = field_or<bool>(params, "plain", false);
            auto paths = field<std::vector<VertexList>>(p, "paths");
            if (kind == "patch")
                return validate_patch(g, PatchWitness{ fp, field<Vertex>(p, "hub"), paths }, X, d, r, plain);
            return validate_match(g, MatchWitness{ fp, paths }, X, d, r, plain);
        }
        if (kind == "minor-model")
            return validate_minor_model(g, minor_model_from_json(j));
        if (kind == "tree-decomposition")
            return validate_tree_decomposition(g, tree_decomposition_from_json(j));
        if (kind == "embedding")
            return validate_embedding(g, embedding_from_json(j));
        if (kind == "subdivision") {
            auto s = subdivision_from_json(j);
            std::optional<int> max_extra;
            if (params.contains("max_extra"))
                max_extra = field<int>(params, "max_extra");
            auto v = validate_subdivision_embedding(g, s, max_extra);
            if (! v)
                return v;
            if (params.contains("max_unsubdivided")) {
                auto cap = field<int>(params, "max_unsubdivided");
                auto direct = std::count_if(s.edge_paths.begin(), s.edge_paths.end(),
                        [] (const VertexList & q) { return q.size() == 2; });
                if (direct > cap)
                    return Verdict::fail("(max_unsubdivided)", std::to_string(direct) + " unsubdivided edges");
            }
            return v;
        }
        if (kind == "line-subdivision") {
            LineSubdivisionEmbedding s{ fp, graph_field(p, "base"), field<std::vector<VertexList>>(p, "edge_paths") };
            return validate_line_subdivision_embedding(g, s);
        }
        if (kind == "stable-set")
            return validate_stable_set(g, field<VertexList>(p, "vertices"));
        if (kind == "treewidth-lower-bound") {
            auto m = model_from_payload(fp, field<Json>(p, "model"));
            if (auto v = validate_minor_model(g, m) ; ! v)
                return v;
            auto claimed = field<int>(p, "bound");
            auto got = treewidth_lower_via_minor(g, m);
            if (claimed > got)
                return Verdict::fail("(bound)", "model proves " + std::to_string(got) + ", claimed " + std::to_string(claimed));
            return Verdict::pass();
        }
        if (kind == "certify-report") {
            // the report is only as good as a re-run on the array it names
            if (! p.contains("array"))
                return Verdict::fail("(array)", "certify-report without the array it certifies");
            auto arr = array_from_payload(fp, p.at("array"));
            if (auto v = validate_array(g, arr) ; ! v)
                return v;
            CertifyOptions opt;
            opt.vertex_budget = field_or<int>(params, "vertex_budget", opt.vertex_budget);
            auto rerun = certify_array_properties(g, arr, opt);
            auto checks = field<Json>(p, "checks");
            if (checks.size() != rerun.checks.size())
                return Verdict::fail("(checks)", "check count differs from a re-run");
            for (std::size_t i = 0 ; i < rerun.checks.size() ; ++i) {
                auto name = field<std::string>(checks[i], "name");
                auto status = field<std::string>(checks[i], "status");
                if (name != rerun.checks[i].name || status != to_string(rerun.checks[i].status))
                    return Verdict::fail("(checks)", "'" + name + "' is " + to_string(rerun.checks[i].status) + " on re-run");
            }
            if (field<int>(p, "treewidth_lower_bound") > rerun.treewidth_lower_bound)
                return Verdict::fail("(bound)", "treewidth lower bound not reproduced");
            return Verdict::pass();
        }
        throw SchemaError("unknown kind '" + kind + "'");
    }
}
