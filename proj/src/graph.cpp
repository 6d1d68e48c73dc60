#include "iuc/graph.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace iuc {

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::runtime_error("self-loop " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::runtime_error("vertex out of range in add_edge");
    if (adj_[u].test(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

Graph load_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int n = 0;
    long long declared_m = 0;
    Graph g;
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error("dimacs line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue; // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) fail("duplicate problem line");
            std::string fmt;
            if (!(ls >> fmt >> n >> declared_m)) fail("malformed problem line");
            if (fmt != "edge") fail("expected 'p edge', got 'p " + fmt + "'");
            if (n < 0) fail("negative vertex count");
            g = Graph(n);
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) fail("edge before problem line");
            long long u, v;
            if (!(ls >> u >> v)) fail("malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n) fail("vertex out of range");
            if (u == v) fail("self-loop");
            g.add_edge(int(u - 1), int(v - 1)); // duplicates collapse in add_edge
        } else {
            fail("unknown line type '" + tag + "'");
        }
    }
    if (!have_header) throw std::runtime_error("dimacs: missing problem line");
    return g;
}

Graph load_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_dimacs(ss.str());
}

std::string to_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

std::string graph_to_json(const Graph& g) {
    std::ostringstream out;
    out << "{\"n\": " << g.vertex_count() << ", \"m\": " << g.edge_count() << ", \"adj\": [";
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v) out << ", ";
        out << "[";
        bool first = true;
        g.neighbors(v).for_each([&](int u) {
            if (!first) out << ", ";
            out << u;
            first = false;
        });
        out << "]";
    }
    out << "]}";
    return out.str();
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const Bitset& keep) {
    std::vector<int> map = keep.to_vector();
    std::vector<int> inv(g.vertex_count(), -1);
    for (size_t i = 0; i < map.size(); ++i) inv[map[i]] = int(i);
    Graph h(int(map.size()));
    for (size_t i = 0; i < map.size(); ++i) {
        Bitset nb = g.neighbors(map[i]) & keep;
        nb.for_each([&](int v) {
            if (map[i] < v) h.add_edge(int(i), inv[v]);
        });
    }
    return {h, map};
}

std::vector<Bitset> components_within(const Graph& g, const Bitset& s) {
    std::vector<Bitset> comps;
    Bitset todo = s;
    while (todo.any()) {
        int start = todo.first();
        Bitset comp(g.vertex_count());
        std::vector<int> stack{start};
        comp.set(start);
        todo.reset(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            Bitset nb = g.neighbors(v) & todo;
            nb.for_each([&](int u) {
                comp.set(u);
                todo.reset(u);
                stack.push_back(u);
            });
        }
        comps.push_back(comp);
    }
    return comps;
}

bool is_iuc(const Graph& g, const Bitset& s) {
    for (const Bitset& comp : components_within(g, s)) {
        // a component is a clique iff every member sees all other members
        int k = comp.count();
        bool clique = true;
        comp.for_each([&](int v) {
            if (g.neighbors(v).intersection_count(comp) != k - 1) clique = false;
        });
        if (!clique) return false;
    }
    return true;
}

std::vector<OpenTriangle> enumerate_open_triangles(const Graph& g) {
    std::vector<OpenTriangle> out;
    for (int c = 0; c < g.vertex_count(); ++c) {
        std::vector<int> nb = g.neighbors(c).to_vector();
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                if (!g.has_edge(nb[i], nb[j])) out.push_back({c, nb[i], nb[j]});
    }
    return out;
}

} // namespace iuc
