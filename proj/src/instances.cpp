#include "iuc/instances.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "iuc/inequality.hpp"

namespace iuc {

uint64_t SplitMix64::next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

int SplitMix64::next_below(int n) {
    if (n <= 0) throw std::invalid_argument("next_below: range must be positive");
    uint64_t range = static_cast<uint64_t>(n);
    uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return static_cast<int>(v % range);
}

double SplitMix64::next_normal(double mean, double dev) {
    if (have_spare_) {
        have_spare_ = false;
        return mean + dev * spare_;
    }
    // map to (0, 1] so the logarithm stays finite
    double u1 = static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    double u2 = next_unit();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return mean + dev * r * std::cos(a);
}

int min_structure_size(StructureKind kind) {
    switch (kind) {
        case StructureKind::Hole: return 4;
        case StructureKind::AntiHole: return 6;
        case StructureKind::Star: return 3;
        case StructureKind::DoubleStar: return 4;
        case StructureKind::Fan: return 5;
        case StructureKind::Wheel: return 5;
    }
    return 4;
}

Graph gen_structure(StructureKind kind, int size) {
    if (size < min_structure_size(kind))
        throw std::invalid_argument("gen_structure: size below the family minimum");
    switch (kind) {
        case StructureKind::Hole: {
            Graph g(size);
            for (int i = 0; i < size; ++i) g.add_edge(i, (i + 1) % size);
            return g;
        }
        case StructureKind::AntiHole: {
            Graph ring(size);
            for (int i = 0; i < size; ++i) ring.add_edge(i, (i + 1) % size);
            return complement(ring);
        }
        case StructureKind::Star: {
            Graph g(size);
            for (int i = 1; i < size; ++i) g.add_edge(0, i);
            return g;
        }
        case StructureKind::DoubleStar: {
            Graph g(size);
            for (int i = 2; i < size; ++i) {
                g.add_edge(0, i);
                g.add_edge(1, i);
            }
            return g;
        }
        case StructureKind::Fan: {
            Graph g(size);
            for (int i = 1; i + 1 < size; ++i) g.add_edge(i, i + 1);
            for (int i = 1; i < size; ++i) g.add_edge(0, i);
            return g;
        }
        case StructureKind::Wheel: {
            Graph g(size);
            for (int i = 1; i + 1 < size; ++i) g.add_edge(i, i + 1);
            g.add_edge(size - 1, 1);
            for (int i = 1; i < size; ++i) g.add_edge(0, i);
            return g;
        }
    }
    throw std::invalid_argument("gen_structure: unknown kind");
}

StructureWitness canonical_witness(StructureKind kind, int size) {
    if (size < min_structure_size(kind))
        throw std::invalid_argument("canonical_witness: size below the family minimum");
    StructureWitness w;
    w.kind = kind;
    switch (kind) {
        case StructureKind::Hole:
        case StructureKind::AntiHole:
            for (int i = 0; i < size; ++i) w.ring.push_back(i);
            break;
        case StructureKind::Star:
            w.hub = 0;
            for (int i = 1; i < size; ++i) w.leaves.push_back(i);
            break;
        case StructureKind::DoubleStar:
            w.hub = 0;
            w.second_hub = 1;
            for (int i = 2; i < size; ++i) w.leaves.push_back(i);
            break;
        case StructureKind::Fan:
        case StructureKind::Wheel:
            w.hub = 0;
            for (int i = 1; i < size; ++i) w.ring.push_back(i);
            break;
    }
    return w;
}

long long structure_alpha(StructureKind kind, int size) {
    if (size < min_structure_size(kind))
        throw std::invalid_argument("structure_alpha: size below the family minimum");
    switch (kind) {
        case StructureKind::Hole: return hole_rhs(size);
        case StructureKind::AntiHole: return size / 2;
        case StructureKind::Star: return size - 1;
        case StructureKind::DoubleStar: return size - 2;
        // hub plus an adjacent pair always forms a triangle, so three is a floor
        case StructureKind::Fan: return std::max<long long>(fan_rhs(size - 1), 3);
        case StructureKind::Wheel: return std::max<long long>(hole_rhs(size - 1), 3);
    }
    return 0;
}

namespace {

StructureWitness shift_witness(StructureWitness w, int offset) {
    if (w.hub >= 0) w.hub += offset;
    if (w.second_hub >= 0) w.second_hub += offset;
    for (int& v : w.ring) v += offset;
    for (int& v : w.leaves) v += offset;
    return w;
}

constexpr StructureKind kKindOrder[6] = {StructureKind::Hole,     StructureKind::AntiHole,
                                         StructureKind::Star,     StructureKind::DoubleStar,
                                         StructureKind::Fan,      StructureKind::Wheel};

} // namespace

Composite gen_composite(int parts, double size_mean, double size_dev, double inter_p,
                        uint64_t seed) {
    if (parts <= 0) throw std::invalid_argument("gen_composite: need at least one part");
    SplitMix64 rng(seed);

    std::vector<StructureKind> kinds(parts);
    std::vector<int> sizes(parts);
    int total = 0;
    for (int i = 0; i < parts; ++i) {
        kinds[i] = kKindOrder[i % 6];
        int raw = static_cast<int>(std::floor(rng.next_normal(size_mean, size_dev)));
        int lo = min_structure_size(kinds[i]);
        sizes[i] = std::min(std::max(raw, lo), 24);
        total += sizes[i];
    }

    Composite out{Graph(total), {}, 0};
    std::vector<int> offset(parts);
    int at = 0;
    for (int i = 0; i < parts; ++i) {
        offset[i] = at;
        Graph local = gen_structure(kinds[i], sizes[i]);
        for (auto [u, v] : local.edges()) out.graph.add_edge(u + at, v + at);
        GroundTruthPart part;
        part.witness = shift_witness(canonical_witness(kinds[i], sizes[i]), at);
        part.alpha = structure_alpha(kinds[i], sizes[i]);
        out.alpha_sum += part.alpha;
        out.parts.push_back(std::move(part));
        at += sizes[i];
    }

    if (inter_p > 0) {
        for (int a = 0; a < parts; ++a)
            for (int b = a + 1; b < parts; ++b)
                for (int u = offset[a]; u < offset[a] + sizes[a]; ++u)
                    for (int v = offset[b]; v < offset[b] + sizes[b]; ++v)
                        if (rng.next_unit() < inter_p) out.graph.add_edge(u, v);
    }
    return out;
}

Graph gen_er(int n, double p, uint64_t seed) {
    if (n < 0) throw std::invalid_argument("gen_er: negative size");
    Graph g(n);
    if (p <= 0) return g;
    SplitMix64 rng(seed);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_unit() < p) g.add_edge(i, j);
    return g;
}

Graph gen_tree(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_tree: need at least one vertex");
    Graph g(n);
    if (n == 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    SplitMix64 rng(seed);
    std::vector<int> seq(n - 2);
    for (auto& s : seq) s = rng.next_below(n);

    std::vector<int> degree(n, 1);
    for (int s : seq) ++degree[s];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    for (int s : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        g.add_edge(leaf, s);
        if (--degree[s] == 1) leaves.insert(s);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    g.add_edge(a, b);
    return g;
}

Graph gen_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("gen_complete_bipartite: empty side");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

} // namespace iuc
