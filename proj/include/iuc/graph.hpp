// Undirected simple graphs with bitset adjacency, DIMACS I/O, and the
// open-triangle (induced P3) primitives everything else builds on.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "iuc/bitset.hpp"

namespace iuc {

class Graph {
public:
    Graph() : n_(0), m_(0) {}
    explicit Graph(int n) : n_(n), m_(0), adj_(n, Bitset(n)) {}

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    std::vector<std::pair<int, int>> edges() const;

private:
    int n_;
    long long m_;
    std::vector<Bitset> adj_;
};

// An induced P3: 'center' is the degree-2 vertex, leaves a < b are non-adjacent.
struct OpenTriangle {
    int center;
    int a, b;
    bool operator==(const OpenTriangle& o) const {
        return center == o.center && a == o.a && b == o.b;
    }
};

// DIMACS "p edge" format, 1-based vertices. Throws std::runtime_error with the
// offending line number on malformed input; duplicate edges are collapsed.
Graph load_dimacs(const std::string& text);
Graph load_dimacs_file(const std::string& path);
std::string to_dimacs(const Graph& g);

// adjacency-list JSON {"n":..,"m":..,"adj":[[..],..]}
std::string graph_to_json(const Graph& g);

Graph complement(const Graph& g);

// Induced subgraph on 'keep'; mapping[i] is the original id of new vertex i.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const Bitset& keep);

// True iff g[s] is a cluster graph (every connected component a clique).
bool is_iuc(const Graph& g, const Bitset& s);

// All open triangles, ordered by center ascending, then leaf pair lex.
std::vector<OpenTriangle> enumerate_open_triangles(const Graph& g);

// connected components of g[s] (each a Bitset over the full vertex range)
std::vector<Bitset> components_within(const Graph& g, const Bitset& s);

} // namespace iuc
