// Exact IUC machinery: full enumeration for small graphs and a
// branch-and-bound maximum oracle (optionally weighted, optionally
// restricted/forced) used for certification and lifting.
#pragma once

#include <cstdint>
#include <vector>

#include "iuc/graph.hpp"
#include "iuc/rational.hpp"

namespace iuc {

// Every IUC of g (the empty set included) in lexicographic order of the
// sorted vertex lists, as bit masks. Guard: n <= 24.
struct IUCCatalog {
    int n = 0;
    std::vector<uint32_t> sets;
};

IUCCatalog enumerate_iucs(const Graph& g);

struct OracleResult {
    long long value = 0;
    std::vector<int> witness; // lexicographically smallest maximiser
};

struct RationalOracleResult {
    Rational value = 0;
    std::vector<int> witness;
};

// Maximum-cardinality IUC. The graph is reduced to connected components and
// each component is searched exactly; any component above 35 vertices is
// rejected (whole graphs up to 24 vertices always pass).
OracleResult max_iuc_oracle(const Graph& g);

// Weighted variants (weights nonnegative, one per vertex).
RationalOracleResult max_iuc_oracle(const Graph& g, const std::vector<Rational>& weights);

// Maximum-weight IUC restricted to 'allowed' and containing all of 'forced'
// (forced must induce an IUC). Used by sequential lifting.
OracleResult max_iuc_oracle_restricted(const Graph& g, const std::vector<long long>& weights,
                                       const Bitset& allowed, const Bitset& forced);

} // namespace iuc
