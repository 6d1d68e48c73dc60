// Detection of the combinatorial structures that index inequality families:
// 4-holes, chordless cycles/paths inside a hub neighborhood (wheels/fans),
// maximal stars, double stars, and anti-holes.
#pragma once

#include <chrono>
#include <climits>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "iuc/graph.hpp"

namespace iuc {

enum class StructureKind { Hole, AntiHole, Star, DoubleStar, Fan, Wheel };

std::string kind_name(StructureKind k);

struct StructureWitness {
    StructureKind kind;
    int hub = -1;        // Star, DoubleStar, Fan, Wheel
    int second_hub = -1; // DoubleStar
    // Hole/Wheel: induced-cycle order; AntiHole: complement-cycle order
    // (consecutive entries are the NON-edges of g); Fan: induced-path order.
    std::vector<int> ring;
    std::vector<int> leaves; // Star/DoubleStar, sorted ascending
};

// Shared count/time budget for the capped searches. One instance may be
// threaded through several searches so they compete for the same budget.
struct SearchBudget {
    int max_count = INT_MAX;
    double time_limit_s = std::numeric_limits<double>::infinity();
    int found = 0;
    bool hit_count = false;
    bool hit_time = false;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    bool exhausted() {
        if (found >= max_count) hit_count = true;
        if (!hit_time && std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                                 .count() > time_limit_s)
            hit_time = true;
        return hit_count || hit_time;
    }
    bool truncated() const { return hit_count || hit_time; }
};

// All induced 4-cycles, each once, ring in canonical rotation/reflection
// (minimum vertex first, then its smaller ring neighbor), deterministic order.
std::vector<StructureWitness> enumerate_4holes(const Graph& g);

// Chordless cycles (>= min_len vertices) within g[N(hub)], reported as Wheel
// witnesses with canonical rings. Deterministic until the budget trips.
std::vector<StructureWitness> chordless_cycles_in_neighborhood(const Graph& g, int hub,
                                                               int min_len, SearchBudget& budget);

// Induced paths (>= min_len vertices) within g[N(hub)], reported as Fan
// witnesses, smaller endpoint first.
std::vector<StructureWitness> chordless_paths_in_neighborhood(const Graph& g, int hub,
                                                              int min_len, SearchBudget& budget);

// Greedy inclusion-maximal independent subset of N(hub) in ascending vertex
// order; nothing when fewer than 2 leaves result.
std::optional<StructureWitness> maximal_star_at(const Graph& g, int hub);

// All double stars extending the given star: second hubs outside N[hub]
// adjacent to every leaf.
std::vector<StructureWitness> double_stars_from(const Graph& g, const StructureWitness& star);

// Anti-holes (>= min_len >= 6 vertices) via chordless-cycle search on the
// complement; ring lists the complement-cycle order.
std::vector<StructureWitness> find_anti_holes(const Graph& g, int min_len, SearchBudget& budget);

// Re-checks every structural property of the witness against g.
bool validate_witness(const Graph& g, const StructureWitness& w);

std::string witness_to_json(const StructureWitness& w);

} // namespace iuc
