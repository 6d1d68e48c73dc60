#include "iuc/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace iuc {

namespace {

// Branch-and-bound over one mask-encoded graph (<= 63 vertices). The DFS
// iterates candidates ascending and explores inclusion first, so complete
// sets are visited in lexicographic order of their sorted vertex lists and
// the first optimum found is the lexicographically smallest one; pruning at
// "bound <= best" only ever discards later (lex-greater) ties.
template <typename V>
struct MaskSearch {
    int n;
    std::vector<uint64_t> adj;
    const std::vector<V>& w;
    V best;
    uint64_t best_set = 0;
    std::vector<uint64_t> cliques; // clique components of the current set

    MaskSearch(const Graph& g, const std::vector<int>& verts, const std::vector<V>& weights)
        : n(int(verts.size())), adj(verts.size(), 0), w(weights), best(-1) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && g.has_edge(verts[i], verts[j])) adj[i] |= uint64_t(1) << j;
    }

    // v joins the current set if its neighbourhood there is empty or exactly
    // one whole clique; returns the clique index it merges into (-1 fresh,
    // -2 incompatible)
    int merge_target(int v, uint64_t cur) const {
        uint64_t t = adj[v] & cur;
        if (!t) return -1;
        for (size_t i = 0; i < cliques.size(); ++i)
            if (cliques[i] == t) return int(i);
        return -2;
    }

    void dfs(uint64_t cand, V candsum, uint64_t cur, V value) {
        if (value > best) {
            best = value;
            best_set = cur;
        }
        while (cand) {
            if (!(value + candsum > best)) return; // nothing here can improve
            int v = __builtin_ctzll(cand);
            uint64_t bit = uint64_t(1) << v;
            cand ^= bit;
            int tgt = merge_target(v, cur);
            if (tgt != -2) {
                uint64_t saved = 0;
                if (tgt == -1) {
                    cliques.push_back(bit);
                } else {
                    saved = cliques[tgt];
                    cliques[tgt] |= bit;
                }
                dfs(cand, candsum - w[v], cur | bit, value + w[v]);
                if (tgt == -1)
                    cliques.pop_back();
                else
                    cliques[tgt] = saved;
            }
            candsum -= w[v];
        }
    }

    // returns false if 'forced' is not an IUC
    bool run(uint64_t allowed, uint64_t forced) {
        uint64_t cur = 0;
        V value = 0;
        cliques.clear();
        uint64_t f = forced;
        while (f) {
            int v = __builtin_ctzll(f);
            f &= f - 1;
            int tgt = merge_target(v, cur);
            if (tgt == -2) return false;
            if (tgt == -1)
                cliques.push_back(uint64_t(1) << v);
            else
                cliques[tgt] |= uint64_t(1) << v;
            cur |= uint64_t(1) << v;
            value += w[v];
        }
        uint64_t cand = allowed & ~forced;
        V candsum = 0;
        for (uint64_t c = cand; c;) {
            int v = __builtin_ctzll(c);
            c &= c - 1;
            candsum += w[v];
        }
        best = value;
        best_set = cur;
        dfs(cand, candsum, cur, value);
        return true;
    }
};

template <typename V>
std::pair<V, std::vector<int>> solve_component(const Graph& g, const std::vector<int>& verts,
                                               const std::vector<V>& weights) {
    if (verts.size() > 35)
        throw std::runtime_error("oracle guard: component with " + std::to_string(verts.size()) +
                                 " vertices exceeds 35");
    std::vector<V> local(verts.size());
    for (size_t i = 0; i < verts.size(); ++i) local[i] = weights[verts[i]];
    MaskSearch<V> s(g, verts, local);
    s.run(verts.size() == 64 ? ~uint64_t(0) : (uint64_t(1) << verts.size()) - 1, 0);
    std::vector<int> witness;
    for (int i = 0; i < s.n; ++i)
        if (s.best_set >> i & 1) witness.push_back(verts[i]);
    return {s.best, witness};
}

template <typename V>
std::pair<V, std::vector<int>> oracle_by_components(const Graph& g,
                                                    const std::vector<V>& weights) {
    if (int(weights.size()) != g.vertex_count())
        throw std::invalid_argument("oracle: weight vector size mismatch");
    for (const V& x : weights)
        if (x < 0) throw std::invalid_argument("oracle: negative weight");
    Bitset all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all.set(v);
    V total = 0;
    std::vector<int> witness;
    for (const Bitset& comp : components_within(g, all)) {
        auto [val, wit] = solve_component(g, comp.to_vector(), weights);
        total += val;
        witness.insert(witness.end(), wit.begin(), wit.end());
    }
    std::sort(witness.begin(), witness.end());
    return {total, witness};
}

} // namespace

IUCCatalog enumerate_iucs(const Graph& g) {
    int n = g.vertex_count();
    if (n > 24)
        throw std::runtime_error("enumerate_iucs guard: " + std::to_string(n) +
                                 " vertices exceeds 24");
    IUCCatalog cat;
    cat.n = n;
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i;
    std::vector<long long> unit(n, 1);
    MaskSearch<long long> s(g, verts, unit);
    // reuse the incremental clique bookkeeping for plain enumeration
    struct Rec {
        MaskSearch<long long>& s;
        IUCCatalog& cat;
        void go(uint64_t cand, uint64_t cur) {
            cat.sets.push_back(uint32_t(cur));
            while (cand) {
                int v = __builtin_ctzll(cand);
                uint64_t bit = uint64_t(1) << v;
                cand ^= bit;
                int tgt = s.merge_target(v, cur);
                if (tgt == -2) continue;
                uint64_t saved = 0;
                if (tgt == -1) {
                    s.cliques.push_back(bit);
                } else {
                    saved = s.cliques[tgt];
                    s.cliques[tgt] |= bit;
                }
                go(cand, cur | bit);
                if (tgt == -1)
                    s.cliques.pop_back();
                else
                    s.cliques[tgt] = saved;
            }
        }
    } rec{s, cat};
    rec.go(n == 0 ? 0 : (uint64_t(1) << n) - 1, 0);
    return cat;
}

OracleResult max_iuc_oracle(const Graph& g) {
    std::vector<long long> unit(g.vertex_count(), 1);
    auto [val, wit] = oracle_by_components(g, unit);
    return {val, wit};
}

RationalOracleResult max_iuc_oracle(const Graph& g, const std::vector<Rational>& weights) {
    auto [val, wit] = oracle_by_components(g, weights);
    return {val, wit};
}

OracleResult max_iuc_oracle_restricted(const Graph& g, const std::vector<long long>& weights,
                                       const Bitset& allowed, const Bitset& forced) {
    if (int(weights.size()) != g.vertex_count())
        throw std::invalid_argument("oracle: weight vector size mismatch");
    if (!forced.is_subset_of(allowed))
        throw std::invalid_argument("oracle: forced set must lie inside allowed set");
    std::vector<int> verts = allowed.to_vector();
    if (verts.size() > 35)
        throw std::runtime_error("oracle guard: restriction to " + std::to_string(verts.size()) +
                                 " vertices exceeds 35");
    std::vector<long long> local(verts.size());
    uint64_t forced_mask = 0, allowed_mask = 0;
    for (size_t i = 0; i < verts.size(); ++i) {
        local[i] = weights[verts[i]];
        allowed_mask |= uint64_t(1) << i;
        if (forced.test(verts[i])) forced_mask |= uint64_t(1) << i;
    }
    MaskSearch<long long> s(g, verts, local);
    if (!s.run(allowed_mask, forced_mask))
        throw std::invalid_argument("oracle: forced set is not an IUC");
    OracleResult r;
    r.value = s.best;
    for (int i = 0; i < s.n; ++i)
        if (s.best_set >> i & 1) r.witness.push_back(verts[i]);
    return r;
}

} // namespace iuc
