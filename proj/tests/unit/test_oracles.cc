#include <doctest.h>

#include "fixtures.hh"
#include "naive.hh"

#include <pinched/generators.hh>
#include <pinched/oracles.hh>

using namespace pinched;

TEST_CASE("induced embeddings")
{
    auto pd3 = gen_pd(3).graph;
    CHECK(find_induced_embedding(pd3, gen_complete(4)).status == SearchStatus::none);
    CHECK(find_induced_embedding(pd3, gen_biclique(2, 3)).status == SearchStatus::none);

    auto k5 = gen_complete(5);
    auto r = find_induced_embedding(k5, gen_complete(3));
    REQUIRE(r.status == SearchStatus::found);
    CHECK(validate_embedding(k5, *r.witness));

    // K_{1,2} but not as a triangle
    auto c5 = fixtures::cycle_graph(5);
    auto p3 = find_induced_embedding(c5, fixtures::path_graph(3));
    REQUIRE(p3.witness);
    CHECK(validate_embedding(c5, *p3.witness));
    CHECK(find_induced_embedding(c5, gen_complete(3)).status == SearchStatus::none);

    auto limited = find_induced_embedding(gen_pd(5).graph, gen_complete(4), SearchLimits{ 5 });
    CHECK(limited.status == SearchStatus::exhausted);
    CHECK(! limited.witness);

    for (std::uint64_t seed = 1 ; seed <= 80 ; ++seed) {
        auto g = fixtures::random_graph(8, 1, 2, seed);
        auto h = fixtures::random_graph(4, 1, 2, seed + 1000);
        auto got = find_induced_embedding(g, h);
        CHECK(got.witness.has_value() == naive::has_induced(g, h));
        if (got.witness)
            CHECK(naive::is_induced_copy(g, h, got.witness->map));
    }
}

TEST_CASE("pinch search")
{
    for (std::uint64_t seed = 1 ; seed <= 20 ; ++seed) {
        auto tree = fixtures::random_tree(15, seed);
        CHECK(find_pinch_witness(tree, 1, 1).status == SearchStatus::none);
    }

    auto pd4 = gen_pd(4).graph;
    CHECK(find_pinch_witness(pd4, 3, 1).status == SearchStatus::none);
    auto two = find_pinch_witness(pd4, 2, 1);
    REQUIRE(two.status == SearchStatus::found);
    CHECK(validate_pinch_witness(pd4, *two.witness, 2, 1));

    auto f = fixtures::friendship(3);
    auto three = find_pinch_witness(f, 3, 1);
    REQUIRE(three.witness);
    CHECK(three.witness->hub == 0);
    CHECK(find_pinch_witness(f, 4, 1).status == SearchStatus::none);
    CHECK(find_pinch_witness(f, 1, 2).status == SearchStatus::none);

    CHECK(find_pinch_witness(gen_pd(6).graph, 2, 1, SearchLimits{ 3 }).status == SearchStatus::exhausted);

    // agreement with the naive enumerator
    int agreed = 0;
    for (std::uint64_t seed = 1 ; seed <= 120 ; ++seed) {
        int n = 4 + int(seed % 5);
        auto g = fixtures::random_graph(n, int(1 + seed % 3), 5, seed);
        for (auto [c, h] : { std::pair{ 1, 1 }, { 2, 1 }, { 2, 2 } }) {
            auto got = find_pinch_witness(g, c, h);
            CHECK(got.witness.has_value() == naive::has_pinch(g, c, h));
            if (got.witness)
                CHECK(validate_pinch_witness(g, *got.witness, c, h));
            ++agreed;
        }
    }
    CHECK(agreed == 360);
}

TEST_CASE("induced subdivisions")
{
    auto k4 = gen_complete(4);
    auto self = find_induced_subdivision(k4, k4, 4);
    REQUIRE(self.witness);
    CHECK(validate_subdivision_embedding(k4, *self.witness, 0));

    // the 4-by-4 wall holds a K_4 subdivision with exactly one direct edge
    auto w4 = gen_wall(4);
    SubdivisionBounds one_direct;
    one_direct.max_unsubdivided = 1;
    auto in_wall = find_induced_subdivision(w4, k4, w4.order(), {}, one_direct);
    REQUIRE(in_wall.witness);
    CHECK(validate_subdivision_embedding(w4, *in_wall.witness));
    int direct = 0;
    for (auto & p : in_wall.witness->edge_paths)
        direct += path_length(p) == 1;
    CHECK(direct == 1);

    // not in an array with at most one direct edge...
    auto pd3 = gen_pd(3).graph;
    CHECK(find_induced_subdivision(pd3, k4, 30, {}, one_direct).status == SearchStatus::none);
    auto arr = gen_array_instance(pd_profile(3));
    CHECK(find_induced_subdivision(arr.graph, k4, 30, {}, one_direct).status == SearchStatus::none);

    // ...but PD_3 does hold one with two direct edges
    auto unrestricted = find_induced_subdivision(pd3, k4, 30);
    REQUIRE(unrestricted.witness);
    CHECK(validate_subdivision_embedding(pd3, *unrestricted.witness));

    auto small = find_induced_subdivision(gen_subdivision(k4, SubdivisionSpec{ std::vector<int>(6, 2) }).graph, k4, 15);
    CHECK(small.status == SearchStatus::none);

    // a subdivided wall contains itself
    auto w3 = gen_wall(3);
    auto sub = gen_subdivision(w3, random_subdivision_spec(w3, 2, 3), 3);
    auto found = find_induced_subdivision(sub.graph, w3, sub.graph.order());
    REQUIRE(found.witness);
    CHECK(validate_subdivision_embedding(sub.graph, *found.witness));
}

TEST_CASE("induced line subdivisions")
{
    auto k4 = gen_complete(4);
    auto sub = gen_subdivision(k4, SubdivisionSpec{ { 1, 0, 2, 0, 1, 1 } });
    auto lg = line_graph(sub.graph);
    auto r = find_induced_line_subdivision(lg.graph, k4, lg.graph.order());
    REQUIRE(r.witness);
    CHECK(validate_line_subdivision_embedding(lg.graph, *r.witness));

    CHECK(find_induced_line_subdivision(gen_pd(3).graph, k4, 30).status == SearchStatus::none);
}

TEST_CASE("bounded cleanness")
{
    auto k6 = is_t_clean_bounded(gen_complete(6), 4, 20);
    CHECK(k6.status == CleanStatus::obstruction);
    CHECK(k6.embedding.has_value());

    auto pd3 = is_t_clean_bounded(gen_pd(3).graph, 4, 40);
    CHECK(pd3.status == CleanStatus::clean_within_budget);
    CHECK(pd3.vertex_budget == 40);

    auto w4 = gen_wall(4);
    auto sub = gen_subdivision(w4, random_subdivision_spec(w4, 1, 8));
    auto self = is_t_clean_bounded(sub.graph, 4, sub.graph.order());
    CHECK(self.status == CleanStatus::obstruction);
    CHECK(self.wall.has_value());

    CHECK(is_t_clean_bounded(gen_biclique(3, 3), 3, 10).status == CleanStatus::obstruction);
}

TEST_CASE("exact treewidth")
{
    CHECK(treewidth_exact(gen_complete(5)).width == 4);
    CHECK(treewidth_exact(gen_biclique(3, 3)).width == 3);
    CHECK(treewidth_exact(gen_wall(3)).width == 3);
    CHECK(treewidth_exact(gen_grid(4)).width == 4);
    for (int n = 1 ; n <= 9 ; ++n)
        CHECK(treewidth_exact(gen_complete(n)).width == n - 1);
    for (std::uint64_t seed = 1 ; seed <= 10 ; ++seed)
        CHECK(treewidth_exact(fixtures::random_tree(14, seed)).width == 1);
    CHECK(treewidth_exact(fixtures::cycle_graph(9)).width == 2);

    auto k = treewidth_exact(gen_biclique(3, 4));
    CHECK(validate_tree_decomposition(gen_biclique(3, 4), k.decomposition));
    CHECK(k.decomposition.width == 3);

    CHECK_THROWS_AS(treewidth_exact(gen_complete(19)), TreewidthCapExceeded);
    CHECK(treewidth_exact(gen_complete(19), 19).width == 18);

    // monotone under induced subgraphs
    for (std::uint64_t seed = 1 ; seed <= 15 ; ++seed) {
        auto g = fixtures::random_graph(12, 1, 3, seed);
        auto sub = induced_subgraph(g, VertexList{ 0, 2, 3, 5, 7, 8, 11 });
        CHECK(treewidth_exact(sub.graph).width <= treewidth_exact(g).width);
    }
}

TEST_CASE("treewidth bounds sandwich")
{
    auto pd3 = gen_pd(3);
    auto lower = treewidth_lower_via_minor(pd3.graph, array_minor_model(pd3.graph, pd3.array));
    auto exact = treewidth_exact(pd3.graph).width;
    auto upper = treewidth_upper_minfill(pd3.graph);
    CHECK(lower == 3);
    CHECK(lower <= exact);
    CHECK(exact <= upper.width);
    CHECK(validate_tree_decomposition(pd3.graph, upper.decomposition));

    auto pd6 = gen_pd(6);
    CHECK(treewidth_lower_via_minor(pd6.graph, array_minor_model(pd6.graph, pd6.array)) == 6);

    for (std::uint64_t seed = 1 ; seed <= 10 ; ++seed) {
        auto t = fixtures::random_tree(30, seed);
        CHECK(treewidth_upper_minfill(t).width == 1);
    }

    for (std::uint64_t seed = 1 ; seed <= 20 ; ++seed) {
        auto g = fixtures::random_graph(11, 2, 5, seed);
        auto up = treewidth_upper_minfill(g);
        CHECK(validate_tree_decomposition(g, up.decomposition));
        CHECK(treewidth_exact(g).width <= up.width);
    }

    auto p4 = fixtures::path_graph(4);
    MinorModelWitness bad{ p4.fingerprint(), gen_complete(3), { { 0 }, { 1 }, { 2, 3 } } };
    CHECK_THROWS_AS(treewidth_lower_via_minor(p4, bad), InvalidWitness);
}

TEST_CASE("internally disjoint paths")
{
    auto k5 = gen_complete(5);
    auto r = internally_disjoint_paths(k5, 0, 1, 4);
    CHECK(r.value == 4);
    REQUIRE(r.paths.size() == 4);
    int direct = 0;
    for (auto & p : r.paths) {
        CHECK(p.front() == 0);
        CHECK(p.back() == 1);
        direct += p.size() == 2;
    }
    CHECK(direct == 1);

    auto c6 = fixtures::cycle_graph(6);
    auto arcs = internally_disjoint_paths(c6, 0, 3, 2);
    CHECK(arcs.value == 2);
    REQUIRE(arcs.paths.size() == 2);
    for (auto & p : arcs.paths)
        CHECK(is_induced_path(c6, p));

    auto grid = gen_grid(4);
    auto two = internally_disjoint_paths(grid, 0, 15, 2);
    CHECK(two.paths.size() == 2);
    auto three = internally_disjoint_paths(grid, 0, 15, 3);
    CHECK(three.value == 2);
    CHECK(three.paths.empty());

    CHECK_THROWS(internally_disjoint_paths(grid, 3, 3, 1));

    for (std::uint64_t seed = 1 ; seed <= 60 ; ++seed) {
        auto g = fixtures::random_graph(9, 2, 5, seed);
        auto got = internally_disjoint_paths(g, 0, 8, 1);
        CHECK(got.value == naive::min_vertex_cut(g, 0, 8));
        auto all = internally_disjoint_paths(g, 0, 8, got.value);
        CHECK(int(all.paths.size()) == got.value);
    }
}
