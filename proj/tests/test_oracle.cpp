#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "iuc/oracle.hpp"
#include "test_util.hpp"

using namespace iuc;
using namespace testutil;

namespace {

std::vector<int> mask_to_vec(uint32_t m) {
    std::vector<int> v;
    for (int i = 0; i < 32; ++i)
        if (m >> i & 1) v.push_back(i);
    return v;
}

// all maximisers by brute force, returning the lexicographically smallest
std::vector<int> brute_lexmin_max(const Graph& g) {
    int n = g.vertex_count();
    int best = brute_alpha_omega(g);
    std::vector<int> lexmin;
    bool have = false;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) s.push_back(v);
        if (int(s.size()) != best || !brute_is_iuc(g, s)) continue;
        if (!have || s < lexmin) {
            lexmin = s;
            have = true;
        }
    }
    return lexmin;
}

long long cycle_alpha(int n) { return 2 * (n / 3) + 2 * (n % 3) / 3; }

} // namespace

TEST_CASE("iuc enumeration on fixed graphs") {
    CHECK(enumerate_iucs(complete_graph(3)).sets.size() == 8);
    CHECK(enumerate_iucs(path_graph(3)).sets.size() == 7);
    CHECK(enumerate_iucs(cycle_graph(4)).sets.size() == 11);
    CHECK(enumerate_iucs(Graph(0)).sets.size() == 1);
}

TEST_CASE("iuc enumeration is lexicographic, valid, complete, downward closed") {
    for (unsigned seed = 0; seed < 6; ++seed) {
        Graph g = random_graph(10, 0.25 + 0.1 * seed, 11 + seed);
        IUCCatalog cat = enumerate_iucs(g);
        long long brute_count = 0;
        for (unsigned mask = 0; mask < (1u << 10); ++mask) {
            std::vector<int> s = mask_to_vec(mask);
            if (brute_is_iuc(g, s)) ++brute_count;
        }
        REQUIRE(static_cast<long long>(cat.sets.size()) == brute_count);
        std::set<uint32_t> members(cat.sets.begin(), cat.sets.end());
        REQUIRE(members.size() == cat.sets.size());
        for (size_t i = 0; i < cat.sets.size(); ++i) {
            std::vector<int> s = mask_to_vec(cat.sets[i]);
            CHECK(is_iuc(g, Bitset::of(10, s)));
            if (i) CHECK(mask_to_vec(cat.sets[i - 1]) < s); // lexicographic order
            // downward closure: dropping any vertex stays in the catalog
            for (int v : s) CHECK(members.count(cat.sets[i] & ~(uint32_t(1) << v)));
        }
    }
}

TEST_CASE("enumeration guard") {
    CHECK_THROWS_AS(enumerate_iucs(Graph(25)), std::runtime_error);
}

TEST_CASE("max oracle on closed-form families") {
    for (int n = 4; n <= 15; ++n) CHECK(max_iuc_oracle(cycle_graph(n)).value == cycle_alpha(n));
    for (int n = 6; n <= 14; ++n)
        CHECK(max_iuc_oracle(complement(cycle_graph(n))).value == n / 2);
    CHECK(max_iuc_oracle(complete_graph(6)).value == 6);
    CHECK(max_iuc_oracle(complete_bipartite_graph(3, 3)).value == 3);
    CHECK(max_iuc_oracle(cycle_graph(5)).value == 3);
    CHECK(max_iuc_oracle(Graph(4)).value == 4); // edgeless
}

TEST_CASE("max oracle agrees with brute force and returns lex-min witness") {
    for (unsigned seed = 0; seed < 10; ++seed) {
        Graph g = random_graph(10, 0.15 + 0.07 * seed, 500 + seed);
        OracleResult r = max_iuc_oracle(g);
        CHECK(r.value == brute_alpha_omega(g));
        CHECK(int(r.witness.size()) == r.value);
        CHECK(is_iuc(g, Bitset::of(10, r.witness)));
        CHECK(r.witness == brute_lexmin_max(g));
    }
}

TEST_CASE("component reduction handles graphs past the single-search guard") {
    // two disjoint C20s: 40 vertices total, components of 20
    Graph g(40);
    for (int i = 0; i < 20; ++i) {
        g.add_edge(i, (i + 1) % 20);
        g.add_edge(20 + i, 20 + (i + 1) % 20);
    }
    CHECK(max_iuc_oracle(g).value == 2 * cycle_alpha(20));
    CHECK_THROWS_AS(max_iuc_oracle(cycle_graph(40)), std::runtime_error);
}

TEST_CASE("weighted oracle matches subset brute force exactly") {
    for (unsigned seed = 0; seed < 8; ++seed) {
        Graph g = random_graph(9, 0.4, 900 + seed);
        std::mt19937 rng(seed);
        std::vector<Rational> w(9);
        for (auto& x : w) x = rational(rng() % 40, 1 + rng() % 7);
        RationalOracleResult r = max_iuc_oracle(g, w);
        Rational best = -1;
        for (unsigned mask = 0; mask < (1u << 9); ++mask) {
            std::vector<int> s = mask_to_vec(mask);
            if (!brute_is_iuc(g, s)) continue;
            Rational val = 0;
            for (int v : s) val += w[v];
            if (val > best) best = val;
        }
        CHECK(r.value == best);
        Rational witval = 0;
        for (int v : r.witness) witval += w[v];
        CHECK(witval == r.value);
        CHECK(is_iuc(g, Bitset::of(9, r.witness)));
    }
}

TEST_CASE("weighted oracle input validation") {
    Graph g = cycle_graph(4);
    std::vector<Rational> bad(4, rational(1));
    bad[2] = rational(-1);
    CHECK_THROWS_AS(max_iuc_oracle(g, bad), std::invalid_argument);
    std::vector<Rational> short_w(3, rational(1));
    CHECK_THROWS_AS(max_iuc_oracle(g, short_w), std::invalid_argument);
}

TEST_CASE("restricted oracle with forced vertices") {
    Graph c7 = cycle_graph(7);
    std::vector<long long> unit(7, 1);
    Bitset all(7);
    for (int v = 0; v < 7; ++v) all.set(v);

    Bitset forced(7);
    forced.set(0);
    OracleResult r = max_iuc_oracle_restricted(c7, unit, all, forced);
    CHECK(r.value == 4);
    CHECK(std::find(r.witness.begin(), r.witness.end(), 0) != r.witness.end());

    // restrict to a P4 inside the cycle
    Bitset allowed = Bitset::of(7, {0, 1, 2, 3});
    OracleResult r2 = max_iuc_oracle_restricted(c7, unit, allowed, Bitset(7));
    CHECK(r2.value == 3);

    Bitset bad_forced = Bitset::of(7, {0, 1, 2}); // induced P3, not an IUC
    CHECK_THROWS_AS(max_iuc_oracle_restricted(c7, unit, all, bad_forced), std::invalid_argument);
    Bitset outside = Bitset::of(7, {5});
    CHECK_THROWS_AS(max_iuc_oracle_restricted(c7, unit, allowed, outside), std::invalid_argument);
}
