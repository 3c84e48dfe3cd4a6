#include <doctest.h>

#include "fixtures.hh"
#include "naive.hh"

#include <pinched/bounds.hh>
#include <pinched/extractors.hh>
#include <pinched/generators.hh>

using namespace pinched;

namespace
{
    auto clause_of(auto && f) -> std::string
    {
        try {
            f();
        }
        catch (const PreconditionFailed & e) {
            return e.clause();
        }
        return "";
    }

    auto relaxed() -> ExtractOptions
    {
        ExtractOptions o;
        o.relaxed = true;
        return o;
    }

    auto subpath_of(const VertexList & small, const VertexList & big) -> bool
    {
        for (int dir = 0 ; dir < 2 ; ++dir) {
            auto s = small;
            if (dir)
                std::reverse(s.begin(), s.end());
            if (std::search(big.begin(), big.end(), s.begin(), s.end()) != big.end())
                return true;
        }
        return false;
    }

    auto subset_of(const VertexList & small, const VertexList & big) -> bool
    {
        for (auto v : small)
            if (std::find(big.begin(), big.end(), v) == big.end())
                return false;
        return true;
    }

    auto one_path(const ArrayInstance & pd, std::size_t i) -> Constellation
    {
        return Constellation{ pd.graph.fingerprint(), pd.array.order, { pd.array.paths[i] } };
    }
}

TEST_CASE("bound formulas")
{
    CHECK(ramsey_bound(3, 2) == 9);
    CHECK(lemma42_bound(2, 3, 4, 1) == 4);
    CHECK(lemma42_bound(2, 1, 3, 2) == 8);
    CHECK(lemma43_bound(1, 1, 1, 1) == 2);
    CHECK(lemma44_bound(2, 1, 3) == 217);
    CHECK(sigma(1, 1, 1, 1) == 2);
    // lambda(1,1,1,1) = 1*1*1!*2^1 + (2*1)^1
    CHECK(lambda(1, 1, 1, 1) == 4);
    CHECK(gamma(1, 1, 1) == 6);
    CHECK(factorial(10) == 3628800);
    CHECK(at_most(big_pow(BigInt(10), BigInt(40)), 1000) == 1000);
    CHECK_THROWS_AS(sigma(0, 1, 1, 1), std::invalid_argument);

    for (int a = 1 ; a <= 4 ; ++a)
        for (int d = 1 ; d <= 4 ; ++d)
            for (int s = 1 ; s <= 4 ; ++s)
                CHECK(lemma42_bound(a, d, s, 1) == s);

    // monotone in every argument
    for (int x = 1 ; x <= 3 ; ++x)
        for (int y = 1 ; y <= 3 ; ++y) {
            CHECK(sigma(x + 1, y, 2, 1) >= sigma(x, y, 2, 1));
            CHECK(sigma(x, y + 1, 2, 1) >= sigma(x, y, 2, 1));
            CHECK(sigma(1, x, y + 1, 1) >= sigma(1, x, y, 1));
            CHECK(sigma(1, x, y, 2) >= sigma(1, x, y, 1));
            CHECK(gamma(x + 1, y, 1) >= gamma(x, y, 1));
            CHECK(gamma(1, x, y + 1) >= gamma(1, x, y));
            CHECK(lemma43_bound(x + 1, y, 1, 1) >= lemma43_bound(x, y, 1, 1));
            CHECK(lemma44_bound(x, y + 1, 2) >= lemma44_bound(x, y, 2));
            CHECK(lambda(1, 1, x, y + 1) >= lambda(1, 1, x, y));
        }
}

TEST_CASE("ramsey")
{
    Graph empty(9, std::span<const Edge>{});
    auto r = ramsey_clique_or_stable(empty, 3, 2);
    REQUIRE(r.outcome == Outcome::stable_set);
    CHECK(r.get<StableSetWitness>().vertices.size() == 2);
    CHECK(naive::is_stable(empty, r.get<StableSetWitness>().vertices));

    auto k9 = gen_complete(9);
    auto t = ramsey_clique_or_stable(k9, 3, 2);
    REQUIRE(t.outcome == Outcome::clique);
    CHECK(t.get<EmbeddingWitness>().map.size() == 3);
    CHECK(naive::is_clique(k9, t.get<EmbeddingWitness>().map));

    CHECK(clause_of([&] { ramsey_clique_or_stable(gen_complete(8), 3, 2); }) == "(too few vertices)");
    auto under = ramsey_clique_or_stable(gen_complete(8), 3, 2, relaxed());
    CHECK(under.outcome == Outcome::clique);

    // restricted to a vertex pool
    auto pool = ramsey_clique_or_stable(gen_biclique(4, 4), 2, 3, {}, VertexList{ 0, 1, 2, 3, 4, 5, 6, 7 });
    CHECK(pool.outcome != Outcome::no_alternative);
    CHECK(clause_of([&] { ramsey_clique_or_stable(k9, 2, 2, {}, VertexList{ 0, 0, 1, 2 }); }) == "(bad vertex)");
}

TEST_CASE("alignment or constellation")
{
    // PD pattern: spans already disjoint, alignment in input order
    auto pd = gen_pd(4);
    for (std::size_t i = 0 ; i < 4 ; ++i) {
        auto c0 = one_path(pd, i);
        auto r = alignment_or_constellation(pd.graph, c0, 4, 1, 1, 1);
        REQUIRE(r.outcome == Outcome::alignment);
        auto & al = r.get<Alignment>();
        CHECK(validate_alignment(pd.graph, al));
        CHECK(al.order == pd.array.order);
        CHECK(subpath_of(al.path, c0.paths[0]));
    }

    // nested spans: no 2-alignment, l = 1 returns the input constellation
    auto nested = fixtures::layered(4, 1);
    auto one = alignment_or_constellation(nested.graph, nested.constellation, 2, 1, 4, 1);
    REQUIRE(one.outcome == Outcome::constellation);
    auto & c1 = one.get<Constellation>();
    CHECK(c1.stable.size() == 4);
    CHECK(subset_of(c1.stable, nested.constellation.stable));
    CHECK(c1.paths.size() == 1);
    CHECK(subpath_of(c1.paths[0], nested.constellation.paths[0]));

    // every level of the recursion forced
    for (int l = 2 ; l <= 4 ; ++l) {
        auto inst = fixtures::layered(6, l);
        auto r = alignment_or_constellation(inst.graph, inst.constellation, 2, 1, 3, l, relaxed());
        CAPTURE(l);
        REQUIRE(r.outcome == Outcome::constellation);
        auto & c = r.get<Constellation>();
        CHECK(validate_constellation(inst.graph, c, true));
        CHECK(int(c.paths.size()) == l);
        CHECK(c.stable.size() == 3);
        CHECK(subset_of(c.stable, inst.constellation.stable));
        for (auto & p : c.paths)
            CHECK(subpath_of(p, inst.constellation.paths[0]));
    }

    auto sample = fixtures::meager_hollow_example();
    CHECK(clause_of([&] { alignment_or_constellation(sample.graph, sample.constellation, 2, 2, 1, 1); }) == "(not d-meager)");
    CHECK(clause_of([&] { alignment_or_constellation(sample.graph, sample.constellation, 2, 3, 6, 1); }) == "(too small S_0)");
    auto whole = array_as_constellation(pd.array);
    CHECK(clause_of([&] { alignment_or_constellation(pd.graph, whole, 2, 1, 1, 1); }) == "(not one path)");
    CHECK(clause_of([&] { alignment_or_constellation(pd.graph, one_path(pd, 0), 0, 1, 1, 1); }) == "(bad parameters)");

    // same input, same output
    auto a = alignment_or_constellation(sample.graph, sample.constellation, 2, 3, 2, 1);
    auto b = alignment_or_constellation(sample.graph, sample.constellation, 2, 3, 2, 1);
    CHECK(a.outcome == b.outcome);
    if (a.outcome == Outcome::alignment)
        CHECK(a.get<Alignment>().order == b.get<Alignment>().order);
}

TEST_CASE("alignment_or_constellation picks a largest family of disjoint spans")
{
    // path 4..9; x0 at 4, x1 at 7, x2 at 8, x3 at 5 and 9. x3's span covers
    // x1 and x2, so the only 3-family is {x0, x1, x2}
    Graph g(4 + 6, { { 4, 5 }, { 5, 6 }, { 6, 7 }, { 7, 8 }, { 8, 9 },
            { 0, 4 }, { 1, 7 }, { 2, 8 }, { 3, 5 }, { 3, 9 } });
    Constellation c0{ g.fingerprint(), { 0, 1, 2, 3 }, { { 4, 5, 6, 7, 8, 9 } } };
    REQUIRE(validate_constellation(g, c0));
    auto r = alignment_or_constellation(g, c0, 3, 1, 1, 1);
    REQUIRE(r.outcome == Outcome::alignment);
    CHECK(r.get<Alignment>().order == VertexList{ 0, 1, 2 });
}

TEST_CASE("alignment or pinch")
{
    auto pd = gen_pd(5);
    auto r = pinched_alignment_or_witness(pd.graph, one_path(pd, 2), 2, 1, 1, 1, relaxed());
    REQUIRE(r.outcome == Outcome::alignment);
    CHECK(validate_alignment(pd.graph, r.get<Alignment>()));

    for (int m : { 1, 2, 3, 6 }) {
        auto inst = fixtures::layered(m, 2);
        auto p = pinched_alignment_or_witness(inst.graph, inst.constellation, 2, 1, 1, 1, relaxed());
        CAPTURE(m);
        REQUIRE(p.outcome == Outcome::pinch);
        auto & w = p.get<PinchWitness>();
        CHECK(validate_pinch_witness(inst.graph, w, 1, 1));
        CHECK(std::count(inst.constellation.stable.begin(), inst.constellation.stable.end(), w.hub) == 1);
        if (inst.graph.order() <= 16)
            CHECK(naive::has_pinch(inst.graph, 1, 1));
    }

    // above the bound there is no third outcome
    auto big = gen_random_constellation({ int(lemma43_bound(1, 1, 1, 1)), 1, 3, 6, 1, true }, 3);
    auto strict = pinched_alignment_or_witness(big.graph, big.constellation, 1, 1, 1, 1);
    CHECK(strict.outcome != Outcome::no_alternative);

    auto sample = fixtures::meager_hollow_example();
    CHECK(clause_of([&] { pinched_alignment_or_witness(sample.graph, sample.constellation, 1, 1, 3, 1); }) == "(too small S_0)");
}

TEST_CASE("meagre constellation, clique or biclique")
{
    auto pd = gen_pd(3);
    auto c = array_as_constellation(pd.array);
    // l + (s t)^t = 1 + 36 paths needed for t = 2; relaxed keeps the order
    auto light = meager_or_biclique(pd.graph, c, 2, 2, relaxed());
    REQUIRE(light.outcome == Outcome::constellation);
    CHECK(light.get<Constellation>().paths == std::vector<VertexList>{ pd.array.paths[0], pd.array.paths[1] });
    CHECK(clause_of([&] { meager_or_biclique(pd.graph, c, 2, 2); }) == "(too few paths)");

    auto cl = fixtures::planted_heavy(2, 16, 3, true);
    auto k = meager_or_biclique(cl.graph, cl.constellation, 3, 2);
    REQUIRE(k.outcome == Outcome::clique);
    CHECK(validate_embedding(cl.graph, k.get<EmbeddingWitness>()));
    CHECK(k.get<EmbeddingWitness>().pattern == gen_complete(2));

    auto st = fixtures::planted_heavy(2, 16, 3, false);
    auto kk = meager_or_biclique(st.graph, st.constellation, 3, 2);
    REQUIRE(kk.outcome == Outcome::biclique);
    CHECK(validate_embedding(st.graph, kk.get<EmbeddingWitness>()));
    CHECK(kk.get<EmbeddingWitness>().pattern == gen_biclique(2, 2));

    // one heavy path short of the quota: the light paths come back
    auto few = fixtures::planted_heavy(2, 15, 4, false);
    auto back = meager_or_biclique(few.graph, few.constellation, 3, 2);
    REQUIRE(back.outcome == Outcome::constellation);
    CHECK(is_meager(few.graph, back.get<Constellation>(), 2));
    CHECK(back.get<Constellation>().paths.size() == 3);

    auto t3 = fixtures::planted_heavy(3, 729, 1, false);
    auto k33 = meager_or_biclique(t3.graph, t3.constellation, 1, 3);
    REQUIRE(k33.outcome == Outcome::biclique);
    CHECK(validate_embedding(t3.graph, k33.get<EmbeddingWitness>()));
}

TEST_CASE("array or witness")
{
    for (int s = 2 ; s <= 4 ; ++s) {
        auto pd = gen_pd(s);
        auto r = array_or_witness(pd.graph, array_as_constellation(pd.array), 3, 1, s, 2, relaxed());
        CAPTURE(s);
        REQUIRE(r.outcome == Outcome::array);
        CHECK(validate_array(pd.graph, r.get<Array>()));
    }

    // on a plain input the heavy hubs lie on anticomplete paths, so the
    // Ramsey step can only return their stable side: K_{t,t}. No light
    // paths, or a relaxed run would settle for an array on those.
    auto planted = fixtures::planted_heavy(2, 16, 0, false);
    auto k = array_or_witness(planted.graph, planted.constellation, 2, 1, 2, 2, relaxed());
    REQUIRE(k.outcome == Outcome::biclique);
    CHECK(validate_embedding(planted.graph, k.get<EmbeddingWitness>()));
    CHECK(k.get<EmbeddingWitness>().pattern == gen_biclique(2, 2));
    auto joined = fixtures::planted_heavy(2, 16, 0, true);
    CHECK(clause_of([&] { array_or_witness(joined.graph, joined.constellation, 2, 1, 2, 2, relaxed()); }) == "(not plain)");

    for (int c = 1 ; c <= 3 ; ++c)
        for (int gap : { 2, 3, 5 }) {
            auto inst = fixtures::planted_long_gaps(1, c, gap);
            auto p = array_or_witness(inst.graph, inst.constellation, c, gap, 1, 2, relaxed());
            CAPTURE(c);
            CAPTURE(gap);
            REQUIRE(p.outcome == Outcome::pinch);
            CHECK(validate_pinch_witness(inst.graph, p.get<PinchWitness>(), c, gap));
        }

    auto pd = gen_pd(3);
    CHECK(clause_of([&] { array_or_witness(pd.graph, array_as_constellation(pd.array), 1, 1, 3, 2); }) == "(too small S)");
    auto e = pd.graph.edges();
    e.emplace_back(pd.array.paths[0][0], pd.array.paths[1][0]);
    Graph tangled(pd.graph.order(), e);
    auto tc = array_as_constellation(pd.array);
    tc.graph = tangled.fingerprint();
    CHECK(clause_of([&] { array_or_witness(tangled, tc, 1, 1, 3, 2, relaxed()); }) == "(not plain)");
}

TEST_CASE("array or witness at its exact bounds")
{
    // sigma(1,1,1,2) = 8, lambda(1,1,1,2) = 264
    REQUIRE(sigma(1, 1, 1, 2) == 8);
    REQUIRE(lambda(1, 1, 1, 2) == 264);
    auto inst = gen_random_constellation({ 8, 264, 8, 10, 1, true }, 17);
    auto r = array_or_witness(inst.graph, inst.constellation, 1, 1, 1, 2);
    CHECK(r.outcome != Outcome::no_alternative);
    CHECK(r.outcome == Outcome::array);
    CHECK(validate_array(inst.graph, r.get<Array>()));
}

TEST_CASE("fragment: short-path ramsey inside a strong block")
{
    // K_4 with every edge as the short path and a long detour per pair
    auto k4 = gen_complete(4);
    BlockWitness b{ k4.fingerprint(), { 0, 1, 2, 3 }, 1, {} };
    for (int x = 0 ; x < 4 ; ++x)
        for (int y = x + 1 ; y < 4 ; ++y)
            b.families.push_back({ x, y, { { x, y } } });
    REQUIRE(validate_block(k4, b, true));
    auto r = block_short_path_ramsey(k4, b, 1, 3, 2, relaxed());
    REQUIRE(std::holds_alternative<BlockRamseyResult>(r));
    auto & out = std::get<BlockRamseyResult>(r);
    CHECK(out.clique);
    CHECK(out.vertices.size() == 3);
    CHECK(out.paths.size() == 3);

    auto c6 = fixtures::cycle_graph(6);
    BlockWitness far{ c6.fingerprint(), { 0, 3 }, 2, { { 0, 3, { { 0, 1, 2, 3 }, { 0, 5, 4, 3 } } } } };
    auto s = block_short_path_ramsey(c6, far, 2, 2, 2, relaxed());
    REQUIRE(std::holds_alternative<BlockRamseyResult>(s));
    CHECK(! std::get<BlockRamseyResult>(s).clique);
    CHECK(std::get<BlockRamseyResult>(s).vertices.size() == 2);

    CHECK(clause_of([&] { block_short_path_ramsey(c6, far, 2, 2, 2); }) == "(too small block)");
}

TEST_CASE("fragment: non-rigid path or constellation")
{
    // first: three single vertices, each seeing both paths of second
    Graph g(7, { { 0, 3 }, { 0, 5 }, { 1, 3 }, { 1, 6 }, { 2, 4 }, { 2, 6 }, { 3, 4 }, { 5, 6 } });
    std::vector<VertexList> first{ { 0 }, { 1 }, { 2 } }, second{ { 3, 4 }, { 5, 6 } };
    auto r = nonrigid_path_or_constellation(g, first, second, 2, 3, relaxed());
    REQUIRE(std::holds_alternative<NonRigidResult>(r));
    auto & out = std::get<NonRigidResult>(r);
    REQUIRE(out.constellation);
    CHECK(validate_constellation(g, *out.constellation, true));

    CHECK(clause_of([&] { nonrigid_path_or_constellation(g, first, second, 3, 1); }) == "(too few paths)");
    CHECK(clause_of([&] { nonrigid_path_or_constellation(g, first, second, 2, 1); }) == "(too few paths)");

    Graph h(7, { { 0, 3 }, { 1, 3 }, { 1, 6 }, { 2, 4 }, { 2, 6 }, { 3, 4 }, { 5, 6 } });
    auto lazy = nonrigid_path_or_constellation(h, first, second, 2, 1, relaxed());
    REQUIRE(std::holds_alternative<NonRigidResult>(lazy));
    CHECK(std::get<NonRigidResult>(lazy).path_index == 0);
}
