// Shared helpers for the test suite: tiny graph builders and deliberately
// naive reference implementations used to cross-check the library.
#pragma once

#include <random>
#include <vector>

#include "iuc/graph.hpp"

namespace testutil {

inline iuc::Graph mk(int n, const std::vector<std::pair<int, int>>& edges) {
    iuc::Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline iuc::Graph cycle_graph(int n) {
    iuc::Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline iuc::Graph path_graph(int n) {
    iuc::Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline iuc::Graph complete_graph(int n) {
    iuc::Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline iuc::Graph complete_bipartite_graph(int a, int b) {
    iuc::Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

inline iuc::Graph random_graph(int n, double p, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    iuc::Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (u(rng) < p) g.add_edge(i, j);
    return g;
}

// Reference count of induced P3s: triples spanning exactly two edges.
inline int brute_open_triangle_count(const iuc::Graph& g) {
    int n = g.vertex_count(), c = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                int e = g.has_edge(i, j) + g.has_edge(i, k) + g.has_edge(j, k);
                if (e == 2) ++c;
            }
    return c;
}

// Reference IUC test: no member triple may span exactly two edges.
inline bool brute_is_iuc(const iuc::Graph& g, const std::vector<int>& s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            for (size_t k = j + 1; k < s.size(); ++k) {
                int e = g.has_edge(s[i], s[j]) + g.has_edge(s[i], s[k]) + g.has_edge(s[j], s[k]);
                if (e == 2) return false;
            }
    return true;
}

// Reference maximum IUC size by scanning all subsets (n <= ~20).
inline int brute_alpha_omega(const iuc::Graph& g) {
    int n = g.vertex_count(), best = 0;
    for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) s.push_back(v);
        if (int(s.size()) > best && brute_is_iuc(g, s)) best = int(s.size());
    }
    return best;
}

} // namespace testutil
