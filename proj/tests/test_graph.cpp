#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "iuc/graph.hpp"
#include "test_util.hpp"

using namespace iuc;
using namespace testutil;

TEST_CASE("dimacs parsing basics") {
    Graph g = load_dimacs("c a comment\np edge 3 2\ne 1 2\ne 2 3\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(!g.has_edge(0, 2));
}

TEST_CASE("dimacs duplicate edges collapse") {
    Graph g = load_dimacs("p edge 2 2\ne 1 2\ne 2 1\n");
    CHECK(g.edge_count() == 1);
}

TEST_CASE("dimacs errors carry line numbers") {
    CHECK_THROWS_WITH_AS(load_dimacs("p edge 2 1\ne 1 1\n"),
                         doctest::Contains("line 2"), std::runtime_error);
    CHECK_THROWS_WITH_AS(load_dimacs("e 1 2\n"),
                         doctest::Contains("line 1"), std::runtime_error);
    CHECK_THROWS_WITH_AS(load_dimacs("p edge 2 1\ne 1 3\n"),
                         doctest::Contains("out of range"), std::runtime_error);
    CHECK_THROWS_AS(load_dimacs("p col 2 1\n"), std::runtime_error);
    CHECK_THROWS_AS(load_dimacs("p edge 2 0\nq 1 2\n"), std::runtime_error);
    CHECK_THROWS_AS(load_dimacs("c only comments\n"), std::runtime_error);
    CHECK_THROWS_AS(load_dimacs("p edge 3 1\np edge 3 1\n"), std::runtime_error);
}

TEST_CASE("dimacs round trip") {
    Graph g = random_graph(9, 0.4, 7);
    Graph h = load_dimacs(to_dimacs(g));
    REQUIRE(h.vertex_count() == g.vertex_count());
    REQUIRE(h.edge_count() == g.edge_count());
    for (auto [u, v] : g.edges()) CHECK(h.has_edge(u, v));
}

TEST_CASE("open triangle counts on fixed graphs") {
    CHECK(enumerate_open_triangles(path_graph(3)).size() == 1);
    CHECK(enumerate_open_triangles(complete_graph(3)).empty());
    CHECK(enumerate_open_triangles(cycle_graph(4)).size() == 4);
    CHECK(enumerate_open_triangles(cycle_graph(5)).size() == 5);
    // K_{2,3}: three leaf pairs per 2-side hub, one hub pair per 3-side vertex
    CHECK(enumerate_open_triangles(complete_bipartite_graph(2, 3)).size() == 9);
    CHECK(brute_open_triangle_count(complete_bipartite_graph(2, 3)) == 9);
}

TEST_CASE("open triangle structure and order") {
    Graph g = complete_bipartite_graph(2, 3);
    auto ts = enumerate_open_triangles(g);
    for (auto& t : ts) {
        CHECK(t.a < t.b);
        CHECK(g.has_edge(t.center, t.a));
        CHECK(g.has_edge(t.center, t.b));
        CHECK(!g.has_edge(t.a, t.b));
    }
    for (size_t i = 1; i < ts.size(); ++i) {
        auto key = [](const OpenTriangle& t) { return std::tuple{t.center, t.a, t.b}; };
        CHECK(key(ts[i - 1]) < key(ts[i]));
    }
}

TEST_CASE("open triangle enumeration matches brute force on random graphs") {
    for (unsigned seed = 0; seed < 12; ++seed) {
        Graph g = random_graph(10, 0.15 + 0.07 * seed, seed);
        CHECK(int(enumerate_open_triangles(g).size()) == brute_open_triangle_count(g));
    }
}

TEST_CASE("is_iuc on fixed sets") {
    Graph c4 = cycle_graph(4);
    CHECK(is_iuc(c4, Bitset(4)));
    CHECK(is_iuc(c4, Bitset::of(4, {0})));
    CHECK(is_iuc(c4, Bitset::of(4, {0, 1})));
    CHECK(is_iuc(c4, Bitset::of(4, {0, 2})));
    CHECK(!is_iuc(c4, Bitset::of(4, {0, 1, 2})));
    CHECK(!is_iuc(c4, Bitset::of(4, {0, 1, 2, 3})));

    Graph k23 = complete_bipartite_graph(2, 3);
    CHECK(is_iuc(k23, Bitset::of(5, {2, 3, 4})));
    CHECK(!is_iuc(k23, Bitset::of(5, {0, 2, 3})));
    CHECK(is_iuc(k23, Bitset::of(5, {0, 2})));
}

TEST_CASE("is_iuc agrees with triple-scan reference") {
    for (unsigned seed = 0; seed < 8; ++seed) {
        Graph g = random_graph(9, 0.3 + 0.08 * seed, 100 + seed);
        for (unsigned mask = 0; mask < (1u << 9); ++mask) {
            Bitset s(9);
            std::vector<int> sv;
            for (int v = 0; v < 9; ++v)
                if (mask >> v & 1) { s.set(v); sv.push_back(v); }
            REQUIRE(is_iuc(g, s) == brute_is_iuc(g, sv));
        }
    }
}

TEST_CASE("complement") {
    Graph k3c = complement(complete_graph(3));
    CHECK(k3c.edge_count() == 0);
    CHECK(complement(cycle_graph(6)).edge_count() == 9);
    // C5 is self-complementary
    Graph c5c = complement(cycle_graph(5));
    CHECK(c5c.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5c.degree(v) == 2);
    // involution
    Graph g = random_graph(8, 0.5, 3);
    Graph gg = complement(complement(g));
    CHECK(gg.edge_count() == g.edge_count());
    for (auto [u, v] : g.edges()) CHECK(gg.has_edge(u, v));
}

TEST_CASE("induced subgraph") {
    Graph c5 = cycle_graph(5);
    auto [p4, map] = induced_subgraph(c5, Bitset::of(5, {0, 1, 2, 3}));
    CHECK(p4.vertex_count() == 4);
    CHECK(p4.edge_count() == 3);
    CHECK(map == std::vector<int>{0, 1, 2, 3});
    auto [k3, map2] = induced_subgraph(complete_graph(5), Bitset::of(5, {1, 3, 4}));
    CHECK(k3.edge_count() == 3);
    CHECK(map2 == std::vector<int>{1, 3, 4});
    auto [e, map3] = induced_subgraph(c5, Bitset(5));
    CHECK(e.vertex_count() == 0);
    CHECK(map3.empty());
}

TEST_CASE("components_within") {
    Graph g = mk(6, {{0, 1}, {1, 2}, {3, 4}});
    auto comps = components_within(g, Bitset::of(6, {0, 1, 2, 3, 4, 5}));
    CHECK(comps.size() == 3);
    auto comps2 = components_within(g, Bitset::of(6, {0, 2, 3, 4}));
    CHECK(comps2.size() == 3); // {0}, {2}, {3,4}
}

TEST_CASE("graph json export") {
    std::string js = graph_to_json(path_graph(3));
    CHECK(js == "{\"n\": 3, \"m\": 2, \"adj\": [[1], [0, 2], [1]]}");
}
