#include <doctest.h>

#include "fixtures.hh"

#include <pinched/extractors.hh>
#include <pinched/generators.hh>
#include <pinched/oracles.hh>
#include <pinched/witness_json.hh>

using namespace pinched;

namespace
{
    // serialise, print, parse back: the text form is what files carry
    auto reparse(const Json & j) -> Json
    {
        return Json::parse(j.dump(2));
    }
}

TEST_CASE("envelope")
{
    auto pd = gen_pd(3);
    auto j = to_json(pd.array);
    CHECK(j["schema_version"] == 1);
    CHECK(j["kind"] == "array");
    CHECK(j["graph_fingerprint"]["n"] == 12);
    CHECK(j["graph_fingerprint"]["hash"].get<std::string>().size() == 16);
    CHECK(fingerprint_from_json(j["graph_fingerprint"]) == pd.graph.fingerprint());

    std::vector<std::string> keys;
    for (auto & [k, v] : j.items())
        keys.push_back(k);
    CHECK(keys == std::vector<std::string>{ "schema_version", "kind", "graph_fingerprint", "parameters", "payload" });
}

TEST_CASE("schema errors")
{
    auto pd = gen_pd(3);
    auto j = to_json(pd.array);

    auto future = j;
    future["schema_version"] = 2;
    CHECK_THROWS_AS(validate_witness_json(pd.graph, future), SchemaError);
    CHECK_THROWS_AS(array_from_json(future), SchemaError);

    auto missing = j;
    missing.erase("schema_version");
    CHECK_THROWS_AS(check_envelope(missing), SchemaError);

    auto unknown = j;
    unknown["kind"] = "teapot";
    CHECK_THROWS_AS(validate_witness_json(pd.graph, unknown), SchemaError);

    auto wrong = j;
    wrong["payload"].erase("order");
    CHECK_THROWS_AS(validate_witness_json(pd.graph, wrong), SchemaError);

    auto bad_hash = j;
    bad_hash["graph_fingerprint"]["hash"] = "xyz";
    CHECK_THROWS_AS(validate_witness_json(pd.graph, bad_hash), SchemaError);

    CHECK_THROWS_AS(alignment_from_json(j), SchemaError);

    auto other = gen_pd(4).graph;
    CHECK_THROWS_AS(validate_witness_json(other, j), FingerprintMismatch);
}

TEST_CASE("round trips")
{
    auto pd = gen_pd(4);
    auto & g = pd.graph;

    auto arr = array_from_json(reparse(to_json(pd.array)));
    CHECK(arr.order == pd.array.order);
    CHECK(arr.paths == pd.array.paths);
    CHECK(arr.ends == pd.array.ends);
    CHECK(arr.h == pd.array.h);
    CHECK(validate_witness_json(g, reparse(to_json(pd.array))));

    auto c = array_as_constellation(pd.array);
    auto cj = reparse(to_json(c, true));
    CHECK(cj["kind"] == "constellation");
    CHECK(bundle_from_json(cj).paths == c.paths);
    CHECK(validate_witness_json(g, cj));

    Alignment al{ g.fingerprint(), pd.array.order, pd.array.paths[1], pd.array.ends[1] };
    auto aj = alignment_from_json(reparse(to_json(al)));
    CHECK(aj.order == al.order);
    CHECK(aj.path == al.path);
    CHECK(aj.end == al.end);

    auto pw = find_pinch_witness(g, 2, 1).witness.value();
    auto pj = reparse(to_json(pw, 2, 1));
    CHECK(pinch_from_json(pj).cycles == pw.cycles);
    CHECK(validate_witness_json(g, pj));
    auto too_strong = pj;
    too_strong["parameters"]["c"] = 3;
    CHECK(! validate_witness_json(g, too_strong));

    auto model = array_minor_model(g, pd.array);
    auto mj = minor_model_from_json(reparse(to_json(model)));
    CHECK(mj.target == model.target);
    CHECK(mj.branch_sets == model.branch_sets);

    auto lower = reparse(treewidth_lower_json(model, 4));
    CHECK(validate_witness_json(g, lower));
    auto overclaim = lower;
    overclaim["payload"]["bound"] = 5;
    CHECK(! validate_witness_json(g, overclaim));

    auto td = treewidth_upper_minfill(g).decomposition;
    auto tj = tree_decomposition_from_json(reparse(to_json(td)));
    CHECK(tj.bags == td.bags);
    CHECK(tj.tree_edges == td.tree_edges);
    CHECK(tj.width == td.width);

    auto k5 = gen_complete(5);
    auto emb = find_induced_embedding(k5, gen_complete(3)).witness.value();
    auto ej = embedding_from_json(reparse(to_json(emb)));
    CHECK(ej.pattern == emb.pattern);
    CHECK(ej.map == emb.map);

    auto k4 = gen_complete(4);
    auto sub = gen_subdivision(k4, SubdivisionSpec{ { 0, 1, 2, 0, 1, 1 } });
    auto sj = reparse(to_json(sub.embedding, SubdivisionBounds{ {}, {}, 2 }));
    auto back = subdivision_from_json(sj);
    CHECK(back.branch == sub.embedding.branch);
    CHECK(back.edge_paths == sub.embedding.edge_paths);
    CHECK(validate_witness_json(sub.graph, sj));
    // two direct edges, so a cap of one fails
    auto capped = sj;
    capped["parameters"]["max_unsubdivided"] = 1;
    CHECK(! validate_witness_json(sub.graph, capped));
}

TEST_CASE("every kind validates through the dispatcher")
{
    auto p = fixtures::patch_example(4, 3);
    CHECK(validate_witness_json(p.graph, reparse(to_json(p.patch, p.X, 3, 4))));
    CHECK(! validate_witness_json(p.graph, reparse(to_json(p.patch, p.X, 4, 4))));

    auto m = fixtures::match_example(3, 7);
    CHECK(validate_witness_json(m.graph, reparse(to_json(m.match, m.X, 7, 3))));

    auto c6 = fixtures::cycle_graph(6);
    BlockWitness b{ c6.fingerprint(), { 0, 3 }, 2, { { 0, 3, { { 0, 1, 2, 3 }, { 0, 5, 4, 3 } } } } };
    CHECK(validate_witness_json(c6, reparse(to_json(b, true))));

    auto k4 = gen_complete(4);
    auto lg = line_graph(gen_subdivision(k4, SubdivisionSpec{ { 1, 0, 0, 0, 0, 1 } }).graph);
    auto lr = find_induced_line_subdivision(lg.graph, k4, lg.graph.order());
    REQUIRE(lr.witness);
    CHECK(validate_witness_json(lg.graph, reparse(to_json(*lr.witness))));

    Graph empty(9, std::span<const Edge>{});
    auto st = ramsey_clique_or_stable(empty, 3, 2);
    auto stj = reparse(to_json(st, empty.fingerprint(), Json{ { "c", 3 }, { "s", 2 } }));
    CHECK(stj["kind"] == "stable-set");
    CHECK(stj["parameters"]["outcome"] == "stable-set");
    CHECK(validate_witness_json(empty, stj));
    auto joined = Graph(9, { { stj["payload"]["vertices"][0].get<int>(), stj["payload"]["vertices"][1].get<int>() } });
    stj["graph_fingerprint"] = fingerprint_json(joined.fingerprint());
    CHECK(! validate_witness_json(joined, stj));

    auto pd = gen_pd(3);
    auto report = certify_array_properties(pd.graph, pd.array);
    auto rj = reparse(to_json(report, pd.array, 30));
    CHECK(rj["kind"] == "certify-report");
    CHECK(validate_witness_json(pd.graph, rj));
    auto forged = rj;
    forged["payload"]["treewidth_lower_bound"] = 7;
    CHECK(! validate_witness_json(pd.graph, forged));

    auto none = no_witness_json(pd.graph.fingerprint(), Json{ { "pinch", { 3, 1 } } }, "none");
    CHECK(validate_witness_json(pd.graph, reparse(none)));
}

TEST_CASE("extraction results carry their parameters")
{
    auto inst = fixtures::layered(3, 2);
    ExtractOptions o;
    o.relaxed = true;
    auto r = pinched_alignment_or_witness(inst.graph, inst.constellation, 2, 1, 1, 1, o);
    REQUIRE(r.outcome == Outcome::pinch);
    auto j = reparse(to_json(r, inst.graph.fingerprint(), Json{ { "a", 2 }, { "c", 1 }, { "d", 1 }, { "h", 1 } }));
    CHECK(j["kind"] == "pinch");
    CHECK(j["parameters"]["h"] == 1);
    CHECK(j["parameters"]["outcome"] == "pinch");
    CHECK(j["parameters"]["oriented_from"] == r.oriented_from);
    CHECK(validate_witness_json(inst.graph, j));

    // without parameters the writer states the strongest (c, h) the cycles show
    auto bare = reparse(to_json(r, inst.graph.fingerprint(), Json::object()));
    auto & w = r.get<PinchWitness>();
    CHECK(bare["parameters"]["c"] == int(w.cycles.size()));
    CHECK(validate_witness_json(inst.graph, bare));

    auto pd = gen_pd(3);
    auto small = gen_pd(2);
    auto na = array_or_witness(small.graph, array_as_constellation(small.array), 1, 1, 3, 2, o);
    auto naj = reparse(to_json(na, small.graph.fingerprint(), {}));
    if (na.outcome == Outcome::no_alternative) {
        CHECK(naj["kind"] == "no-alternative");
        CHECK(validate_witness_json(small.graph, naj));
    }
    (void) pd;
}
