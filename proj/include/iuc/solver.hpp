// Exact Max-IUC solver: root cut generation (greedy 4-hole cover, detected
// anti-holes, stars and double stars, fan/wheel ring search), LP-bound branch
// and bound with a greedy incumbent, and exact star separation for the
// independent-candidate special case.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iuc/graph.hpp"
#include "iuc/inequality.hpp"
#include "iuc/structures.hpp"

namespace iuc {

struct SolveConfig {
    bool use_hole_antihole = false;    // 4-hole cover plus odd anti-hole cuts
    bool use_star_doublestar = false;  // per-hub maximal stars / double stars
    bool use_fan_wheel = false;        // per-hub ring and path search
    bool hole_cover_greedy = true;     // replace covered OT rows by 4-hole cuts
    bool anti_hole_detection = true;   // odd anti-hole search inside the HA family
    int fan_wheel_min_ring = 7;
    int per_hub_cap = 50;              // structures per hub; also caps anti-holes
    double per_hub_seconds = 1.0;
    long long node_limit = -1;         // negative: unlimited
    double time_limit_s = -1;          // negative: unlimited
    bool depth_first = false;          // default is best bound first
    bool node_star_separation = false; // heuristic star cuts below the root
    uint64_t seed = 0;                 // reserved for randomized heuristics
    std::vector<LinearInequality> extra_cuts; // appended to the pool verbatim
};

// Root formulation: residual_ot rows plus the pool inequalities. covered_ot
// holds indices into enumerate_open_triangles(g); together with residual_ot
// it partitions the open triangles.
struct CutPool {
    std::vector<LinearInequality> inequalities;
    std::vector<OpenTriangle> residual_ot;
    std::vector<int> covered_ot;
    int count_hole = 0;
    int count_anti_hole = 0;
    int count_star = 0;
    int count_double_star = 0;
    int count_fan = 0;
    int count_wheel = 0;
    int count_other = 0;
    double generation_seconds = 0;
    bool search_truncated = false; // a capped search ran out of time
};

enum class SolveStatus { Optimal, NodeLimit, TimeLimit };
std::string status_name(SolveStatus s);

struct SolveResult {
    SolveStatus status = SolveStatus::Optimal;
    long long best_value = 0;
    std::vector<int> witness; // sorted; always an IUC
    double best_bound = 0;
    long long node_count = 0;
    double root_lp_base = 0;      // all OT rows
    double root_lp_with_cuts = 0; // residual OT rows plus pool
    CutPool pool;
    double cut_seconds = 0;
    double search_seconds = 0;
    double total_seconds = 0;
};

// Greedy set cover of the open triangles by 4-holes: repeatedly take the hole
// covering the most uncovered triangles (ties: earliest in the input order)
// and stop when every remaining hole covers nothing new. Returns the chosen
// holes and the triangles left uncovered.
std::pair<std::vector<StructureWitness>, std::vector<OpenTriangle>> greedy_4hole_cover(
    const std::vector<StructureWitness>& holes, const std::vector<OpenTriangle>& triangles);

CutPool generate_root_cuts(const Graph& g, const SolveConfig& cfg);

// Exact star separation when the candidate leaves are independent: the most
// violated sub-star takes exactly the leaves with point[i] + point[hub] > 1.
// Returns the star inequality when its violation exceeds 1e-6.
std::optional<LinearInequality> separate_star_exact_independent(const Graph& g, int hub,
                                                                const Bitset& leaf_candidates,
                                                                const std::vector<double>& point);

// Grow an IUC greedily, always adding the vertex with the most neighbors
// inside the current set (ties: lowest id). Result is sorted.
std::vector<int> greedy_incumbent(const Graph& g);

SolveResult solve_max_iuc(const Graph& g, const SolveConfig& cfg);

struct RootGap {
    double base = 0;
    double with_cuts = 0;
};

// Two LP solves over the same variable space: every OT row, then the root
// formulation produced by generate_root_cuts under cfg.
RootGap root_gap_report(const Graph& g, const SolveConfig& cfg);

std::string solve_result_to_json(const SolveResult& r);

} // namespace iuc
