#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "iuc/structures.hpp"
#include "test_util.hpp"

using namespace iuc;
using namespace testutil;

namespace {

Graph add_apex(const Graph& g) {
    int n = g.vertex_count();
    Graph h(n + 1);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    for (int v = 0; v < n; ++v) h.add_edge(n, v);
    return h;
}

Graph wheel_graph(int ring) { // hub 0, ring 1..ring
    Graph g(ring + 1);
    for (int i = 1; i <= ring; ++i) {
        g.add_edge(0, i);
        g.add_edge(i, i == ring ? 1 : i + 1);
    }
    return g;
}

Graph fan_graph(int plen) { // hub 0, path 1..plen
    Graph g(plen + 1);
    for (int i = 1; i <= plen; ++i) {
        g.add_edge(0, i);
        if (i < plen) g.add_edge(i, i + 1);
    }
    return g;
}

// reference: vertex subsets inducing a cycle (connected, 2-regular)
std::set<std::set<int>> brute_induced_cycles(const Graph& g, int min_len) {
    std::set<std::set<int>> out;
    int n = g.vertex_count();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) s.push_back(v);
        if (int(s.size()) < min_len) continue;
        Bitset bs = Bitset::of(n, s);
        bool reg2 = true;
        for (int v : s)
            if (g.neighbors(v).intersection_count(bs) != 2) reg2 = false;
        if (!reg2) continue;
        if (components_within(g, bs).size() != 1) continue;
        out.emplace(s.begin(), s.end());
    }
    return out;
}

// reference: vertex subsets inducing a path (two endpoints, rest degree 2)
std::set<std::set<int>> brute_induced_paths(const Graph& g, int min_len) {
    std::set<std::set<int>> out;
    int n = g.vertex_count();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) s.push_back(v);
        if (int(s.size()) < std::max(min_len, 2)) continue;
        Bitset bs = Bitset::of(n, s);
        int deg1 = 0;
        bool ok = true;
        for (int v : s) {
            int d = g.neighbors(v).intersection_count(bs);
            if (d == 1)
                ++deg1;
            else if (d != 2)
                ok = false;
        }
        if (!ok || deg1 != 2) continue;
        if (components_within(g, bs).size() != 1) continue;
        out.emplace(s.begin(), s.end());
    }
    return out;
}

SearchBudget unlimited() { return SearchBudget{}; }

} // namespace

TEST_CASE("4-hole enumeration on fixed graphs") {
    CHECK(enumerate_4holes(cycle_graph(4)).size() == 1);
    CHECK(enumerate_4holes(complete_graph(4)).empty());
    CHECK(enumerate_4holes(cycle_graph(5)).empty());
    CHECK(enumerate_4holes(cycle_graph(6)).empty());
    CHECK(enumerate_4holes(complete_bipartite_graph(2, 3)).size() == 3);
    CHECK(enumerate_4holes(complete_bipartite_graph(3, 3)).size() == 9);
    auto ws = enumerate_4holes(cycle_graph(4));
    CHECK(ws[0].ring == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("4-hole rings are canonical and validate") {
    for (unsigned seed = 0; seed < 10; ++seed) {
        Graph g = random_graph(9, 0.35 + 0.05 * seed, 40 + seed);
        auto ws = enumerate_4holes(g);
        std::set<std::set<int>> seen;
        for (auto& w : ws) {
            REQUIRE(validate_witness(g, w));
            REQUIRE(w.ring.size() == 4);
            CHECK(w.ring[0] == *std::min_element(w.ring.begin(), w.ring.end()));
            CHECK(w.ring[1] < w.ring[3]);
            seen.emplace(w.ring.begin(), w.ring.end());
        }
        CHECK(seen.size() == ws.size()); // no duplicated vertex sets
        std::set<std::set<int>> want;
        for (auto& s : brute_induced_cycles(g, 4))
            if (s.size() == 4) want.insert(s);
        CHECK(seen == want);
    }
}

TEST_CASE("neighborhood cycle search finds wheel rings") {
    Graph w9 = wheel_graph(9);
    auto b = unlimited();
    auto ws = chordless_cycles_in_neighborhood(w9, 0, 7, b);
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].kind == StructureKind::Wheel);
    CHECK(ws[0].hub == 0);
    CHECK(ws[0].ring == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(validate_witness(w9, ws[0]));
    CHECK(!b.truncated());

    auto b2 = unlimited();
    CHECK(chordless_cycles_in_neighborhood(complete_graph(5), 0, 4, b2).empty());
}

TEST_CASE("neighborhood path search finds fan paths") {
    Graph f7 = fan_graph(7);
    auto b = unlimited();
    auto ws = chordless_paths_in_neighborhood(f7, 0, 7, b);
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].kind == StructureKind::Fan);
    CHECK(ws[0].ring == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
    CHECK(validate_witness(f7, ws[0]));

    auto b2 = unlimited();
    CHECK(chordless_paths_in_neighborhood(f7, 0, 4, b2).size() == 10);

    auto b3 = unlimited();
    CHECK(chordless_paths_in_neighborhood(complete_bipartite_graph(1, 5), 0, 2, b3).empty());
}

TEST_CASE("cycle and path searches match subset brute force") {
    for (unsigned seed = 0; seed < 8; ++seed) {
        Graph g = random_graph(8, 0.3 + 0.06 * seed, 60 + seed);
        Graph apex = add_apex(g);
        for (int min_len : {3, 4, 5}) {
            auto b1 = unlimited();
            auto cyc = chordless_cycles_in_neighborhood(apex, 8, min_len, b1);
            std::set<std::set<int>> cyc_sets;
            for (auto& w : cyc) {
                cyc_sets.emplace(w.ring.begin(), w.ring.end());
                if (w.ring.size() >= 4) { // hole witnesses start at C4
                    StructureWitness h = w;
                    h.kind = StructureKind::Hole;
                    h.hub = -1;
                    REQUIRE(validate_witness(g, h));
                }
            }
            CHECK(cyc_sets.size() == cyc.size());
            // brute list restricted to cycles of at least min_len vertices
            std::set<std::set<int>> want;
            for (auto& s : brute_induced_cycles(g, min_len)) want.insert(s);
            CHECK(cyc_sets == want);

            auto b2 = unlimited();
            auto paths = chordless_paths_in_neighborhood(apex, 8, min_len, b2);
            std::set<std::set<int>> path_sets;
            for (auto& w : paths) path_sets.emplace(w.ring.begin(), w.ring.end());
            CHECK(path_sets.size() == paths.size());
            CHECK(path_sets == brute_induced_paths(g, min_len));
            for (auto& w : paths) CHECK(w.ring.front() < w.ring.back());
        }
    }
}

TEST_CASE("search budget caps") {
    Graph g = complete_bipartite_graph(5, 5); // many induced P3s and C4s
    SearchBudget b;
    b.max_count = 3;
    Graph apex = add_apex(g);
    auto ws = chordless_paths_in_neighborhood(apex, 10, 3, b);
    CHECK(ws.size() == 3);
    CHECK(b.truncated());
    CHECK(b.hit_count);

    SearchBudget bt;
    bt.time_limit_s = 0.0;
    auto ws2 = chordless_cycles_in_neighborhood(apex, 10, 4, bt);
    CHECK(bt.hit_time);
    CHECK(ws2.empty());
}

TEST_CASE("maximal star") {
    auto s = maximal_star_at(complete_bipartite_graph(1, 4), 0);
    REQUIRE(s.has_value());
    CHECK(s->leaves == std::vector<int>{1, 2, 3, 4});
    CHECK(validate_witness(complete_bipartite_graph(1, 4), *s));

    CHECK(!maximal_star_at(complete_graph(3), 0).has_value());
    CHECK(!maximal_star_at(complete_bipartite_graph(1, 4), 1).has_value());

    Graph paw = mk(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    auto sp = maximal_star_at(paw, 0);
    REQUIRE(sp.has_value());
    CHECK(sp->leaves == std::vector<int>{1, 3});

    auto sc = maximal_star_at(cycle_graph(4), 0);
    REQUIRE(sc.has_value());
    CHECK(sc->leaves == std::vector<int>{1, 3});
}

TEST_CASE("double stars") {
    Graph c4 = cycle_graph(4);
    auto s = maximal_star_at(c4, 0);
    REQUIRE(s.has_value());
    auto ds = double_stars_from(c4, *s);
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].hub == 0);
    CHECK(ds[0].second_hub == 2);
    CHECK(ds[0].leaves == std::vector<int>{1, 3});
    CHECK(validate_witness(c4, ds[0]));

    Graph k23 = complete_bipartite_graph(2, 3);
    auto s2 = maximal_star_at(k23, 0);
    REQUIRE(s2.has_value());
    CHECK(s2->leaves == std::vector<int>{2, 3, 4});
    auto ds2 = double_stars_from(k23, *s2);
    REQUIRE(ds2.size() == 1);
    CHECK(ds2[0].second_hub == 1);

    Graph k14 = complete_bipartite_graph(1, 4);
    auto s3 = maximal_star_at(k14, 0);
    CHECK(double_stars_from(k14, *s3).empty());

    CHECK_THROWS_AS(double_stars_from(c4, ds[0]), std::invalid_argument);
}

TEST_CASE("anti-hole search") {
    Graph g = complement(cycle_graph(7));
    auto b = unlimited();
    auto ws = find_anti_holes(g, 6, b);
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].kind == StructureKind::AntiHole);
    CHECK(ws[0].ring == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
    CHECK(validate_witness(g, ws[0]));

    auto b2 = unlimited();
    CHECK(find_anti_holes(cycle_graph(5), 6, b2).empty());
    auto b3 = unlimited();
    CHECK(find_anti_holes(complete_graph(6), 6, b3).empty());
    auto b4 = unlimited();
    CHECK_THROWS_AS(find_anti_holes(cycle_graph(5), 5, b4), std::invalid_argument);

    // complement of C6 contains anti-holes of size exactly 6
    auto b5 = unlimited();
    auto ws6 = find_anti_holes(complement(cycle_graph(6)), 6, b5);
    REQUIRE(ws6.size() == 1);
    CHECK(ws6[0].ring.size() == 6);
}

TEST_CASE("witness validation rejects corruption") {
    Graph w9 = wheel_graph(9);
    auto b = unlimited();
    auto ws = chordless_cycles_in_neighborhood(w9, 0, 7, b);
    StructureWitness w = ws[0];
    w.ring[2] = w.ring[1]; // repeated vertex
    CHECK(!validate_witness(w9, w));
    w = ws[0];
    std::swap(w.ring[1], w.ring[4]); // breaks cycle order
    CHECK(!validate_witness(w9, w));
    w = ws[0];
    w.hub = 3; // hub inside the ring
    CHECK(!validate_witness(w9, w));
    w = ws[0];
    w.kind = StructureKind::AntiHole; // wrong edge sense
    CHECK(!validate_witness(w9, w));
}

TEST_CASE("witness json") {
    StructureWitness w;
    w.kind = StructureKind::DoubleStar;
    w.hub = 0;
    w.second_hub = 2;
    w.leaves = {1, 3};
    CHECK(witness_to_json(w) ==
          "{\"kind\": \"doublestar\", \"hub\": 0, \"second_hub\": 2, \"leaves\": [1, 3]}");
    StructureWitness h;
    h.kind = StructureKind::Hole;
    h.ring = {0, 1, 2, 3};
    CHECK(witness_to_json(h) == "{\"kind\": \"hole\", \"ring\": [0, 1, 2, 3]}");
}

TEST_CASE("detection runs are deterministic") {
    Graph g = random_graph(10, 0.4, 99);
    auto b1 = unlimited(), b2 = unlimited();
    auto a1 = enumerate_4holes(g);
    auto a2 = enumerate_4holes(g);
    REQUIRE(a1.size() == a2.size());
    for (size_t i = 0; i < a1.size(); ++i) CHECK(a1[i].ring == a2[i].ring);
    Graph apex = add_apex(g);
    auto p1 = chordless_paths_in_neighborhood(apex, 10, 4, b1);
    auto p2 = chordless_paths_in_neighborhood(apex, 10, 4, b2);
    REQUIRE(p1.size() == p2.size());
    for (size_t i = 0; i < p1.size(); ++i) CHECK(p1[i].ring == p2[i].ring);
}
