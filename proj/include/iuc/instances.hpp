// Deterministic instance generation: canonical structures, composites with
// ground-truth witnesses, random graphs, and random trees.
#pragma once

#include <cstdint>
#include <vector>

#include "iuc/graph.hpp"
#include "iuc/structures.hpp"

namespace iuc {

// Self-contained 64-bit generator (the splitmix64 recurrence) so that a seed
// produces the same instance on every platform and standard library. Normal
// draws use the Box-Muller transform with one cached spare.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}
    uint64_t next();
    double next_unit();                           // uniform in [0, 1)
    int next_below(int n);                        // uniform in [0, n), unbiased
    double next_normal(double mean, double dev);

private:
    uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0;
};

// Canonical structure on 'size' vertices: ring 0..size-1 for holes and
// anti-holes; hub 0 with leaves, path, or ring 1..size-1 for the rest. The
// double star has hubs 0 and 1 sharing leaves 2..size-1.
Graph gen_structure(StructureKind kind, int size);
StructureWitness canonical_witness(StructureKind kind, int size);
int min_structure_size(StructureKind kind);

// exact optimum of the canonical structure in isolation, in closed form
long long structure_alpha(StructureKind kind, int size);

struct GroundTruthPart {
    StructureWitness witness; // ids within the composite graph
    long long alpha;          // optimum of the part in isolation
};

struct Composite {
    Graph graph;
    std::vector<GroundTruthPart> parts;
    long long alpha_sum;
};

// Disjoint canonical structures (kinds cycle through the six families, sizes
// floor-of-normal clamped to [family minimum, 24]) joined by independent
// cross-part edges with probability inter_p. With inter_p = 0 no random draws
// are spent on edges and the optimum equals alpha_sum.
Composite gen_composite(int parts, double size_mean, double size_dev, double inter_p,
                        uint64_t seed);

Graph gen_er(int n, double p, uint64_t seed);
Graph gen_tree(int n, uint64_t seed); // uniform random labeled tree
Graph gen_complete_bipartite(int a, int b);

} // namespace iuc
