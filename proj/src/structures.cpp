#include "iuc/structures.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace iuc {

std::string kind_name(StructureKind k) {
    switch (k) {
        case StructureKind::Hole: return "hole";
        case StructureKind::AntiHole: return "antihole";
        case StructureKind::Star: return "star";
        case StructureKind::DoubleStar: return "doublestar";
        case StructureKind::Fan: return "fan";
        case StructureKind::Wheel: return "wheel";
    }
    return "?";
}

std::vector<StructureWitness> enumerate_4holes(const Graph& g) {
    int n = g.vertex_count();
    std::vector<StructureWitness> out;
    // A 4-hole is two non-adjacent vertices i < j plus a non-adjacent pair of
    // their common neighbors. Requiring i below everything makes it canonical:
    // i's ring neighbors are the common pair, its diagonal is j.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (g.has_edge(i, j)) continue;
            Bitset common = g.neighbors(i) & g.neighbors(j);
            std::vector<int> cs = common.to_vector();
            for (size_t x = 0; x < cs.size(); ++x) {
                if (cs[x] < i) continue;
                for (size_t y = x + 1; y < cs.size(); ++y) {
                    if (g.has_edge(cs[x], cs[y])) continue;
                    StructureWitness w;
                    w.kind = StructureKind::Hole;
                    w.ring = {i, cs[x], j, cs[y]};
                    out.push_back(std::move(w));
                }
            }
        }
    }
    return out;
}

namespace {

// DFS enumeration of chordless cycles/paths induced inside 'allowed'.
// Paths are grown at the tail; 'forbidden' holds neighbors of interior
// vertices (everything before the tail, start excluded for cycle closing).
struct ChordlessSearch {
    const Graph& g;
    const Bitset& allowed;
    int min_len;
    bool cycles; // else paths
    SearchBudget& budget;
    std::vector<StructureWitness>& out;
    std::vector<int> path;

    void report_cycle() {
        StructureWitness w;
        w.kind = StructureKind::Hole; // caller re-tags
        w.ring = path;
        out.push_back(std::move(w));
        ++budget.found;
    }

    void extend(Bitset forbidden) {
        if (budget.exhausted()) return;
        int v0 = path.front(), tail = path.back();
        if (!cycles && int(path.size()) >= min_len && v0 < tail) {
            StructureWitness w;
            w.kind = StructureKind::Fan;
            w.ring = path;
            out.push_back(std::move(w));
            ++budget.found;
            if (budget.exhausted()) return;
        }
        Bitset cand = g.neighbors(tail) & allowed;
        cand -= forbidden;
        Bitset next_forbidden = forbidden;
        // the tail becomes an interior vertex one level down; the start has no
        // interior role while the path has a single vertex
        if (path.size() >= 2) next_forbidden |= g.neighbors(tail);
        std::vector<int> cs = cand.to_vector();
        for (int w : cs) {
            // canonical cycles start at their minimum vertex; paths are
            // deduplicated by endpoint order instead
            if (cycles && w <= v0) continue;
            bool closes = path.size() >= 2 && g.has_edge(w, v0);
            if (cycles) {
                if (closes) {
                    if (int(path.size()) + 1 >= min_len &&
                        path[1] < w) { // reflection: second vertex below last
                        path.push_back(w);
                        report_cycle();
                        path.pop_back();
                        if (budget.exhausted()) return;
                    }
                    continue; // extending past w would keep the chord w-v0
                }
            } else if (closes) {
                continue; // paths must stay induced
            }
            path.push_back(w);
            Bitset child = next_forbidden;
            child.set(w);
            extend(child);
            path.pop_back();
            if (budget.exhausted()) return;
        }
    }

    void run() {
        std::vector<int> starts = allowed.to_vector();
        for (int s : starts) {
            if (budget.exhausted()) return;
            path = {s};
            // at depth 1 there is no interior vertex yet; forbid only the path
            Bitset forbidden(g.vertex_count());
            forbidden.set(s);
            extend(forbidden);
        }
    }
};

std::vector<StructureWitness> chordless_in(const Graph& g, const Bitset& allowed, int min_len,
                                           bool cycles, SearchBudget& budget) {
    std::vector<StructureWitness> out;
    ChordlessSearch search{g, allowed, min_len, cycles, budget, out, {}};
    search.run();
    return out;
}

} // namespace

std::vector<StructureWitness> chordless_cycles_in_neighborhood(const Graph& g, int hub,
                                                               int min_len, SearchBudget& budget) {
    auto ws = chordless_in(g, g.neighbors(hub), min_len, true, budget);
    for (auto& w : ws) {
        w.kind = StructureKind::Wheel;
        w.hub = hub;
    }
    return ws;
}

std::vector<StructureWitness> chordless_paths_in_neighborhood(const Graph& g, int hub,
                                                              int min_len, SearchBudget& budget) {
    auto ws = chordless_in(g, g.neighbors(hub), min_len, false, budget);
    for (auto& w : ws) {
        w.kind = StructureKind::Fan;
        w.hub = hub;
    }
    return ws;
}

std::optional<StructureWitness> maximal_star_at(const Graph& g, int hub) {
    StructureWitness w;
    w.kind = StructureKind::Star;
    w.hub = hub;
    Bitset taken(g.vertex_count());
    g.neighbors(hub).for_each([&](int v) {
        if (!g.neighbors(v).intersects(taken)) {
            taken.set(v);
            w.leaves.push_back(v);
        }
    });
    if (w.leaves.size() < 2) return std::nullopt;
    return w;
}

std::vector<StructureWitness> double_stars_from(const Graph& g, const StructureWitness& star) {
    if (star.kind != StructureKind::Star) throw std::invalid_argument("expected a star witness");
    std::vector<StructureWitness> out;
    Bitset leafset = Bitset::of(g.vertex_count(), star.leaves);
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (u == star.hub || g.has_edge(u, star.hub)) continue;
        if (leafset.test(u)) continue;
        if (leafset.is_subset_of(g.neighbors(u))) {
            StructureWitness w = star;
            w.kind = StructureKind::DoubleStar;
            w.second_hub = u;
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::vector<StructureWitness> find_anti_holes(const Graph& g, int min_len, SearchBudget& budget) {
    if (min_len < 6) throw std::invalid_argument("anti-holes need at least 6 vertices");
    Graph gc = complement(g);
    Bitset all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all.set(v);
    auto ws = chordless_in(gc, all, min_len, true, budget);
    for (auto& w : ws) w.kind = StructureKind::AntiHole;
    return ws;
}

namespace {

bool distinct(const std::vector<int>& vs, int n) {
    Bitset seen(n);
    for (int v : vs) {
        if (v < 0 || v >= n || seen.test(v)) return false;
        seen.set(v);
    }
    return true;
}

// ring is an induced cycle of h (h = g for holes/wheels, complement view for
// anti-holes is handled by the caller flipping edge sense)
bool induced_cycle(const Graph& g, const std::vector<int>& ring, bool edge_sense) {
    int k = int(ring.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.has_edge(ring[i], ring[j]) != (consecutive ? edge_sense : !edge_sense))
                return false;
        }
    return true;
}

bool induced_path(const Graph& g, const std::vector<int>& p) {
    int k = int(p.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(p[i], p[j]) != (j == i + 1)) return false;
    return true;
}

bool star_shape(const Graph& g, int hub, const std::vector<int>& leaves) {
    if (hub < 0 || leaves.size() < 2) return false;
    for (size_t i = 0; i < leaves.size(); ++i) {
        if (leaves[i] == hub || !g.has_edge(hub, leaves[i])) return false;
        for (size_t j = i + 1; j < leaves.size(); ++j)
            if (g.has_edge(leaves[i], leaves[j])) return false;
    }
    return true;
}

} // namespace

bool validate_witness(const Graph& g, const StructureWitness& w) {
    int n = g.vertex_count();
    switch (w.kind) {
        case StructureKind::Hole:
            return w.ring.size() >= 4 && distinct(w.ring, n) && induced_cycle(g, w.ring, true);
        case StructureKind::AntiHole:
            return w.ring.size() >= 6 && distinct(w.ring, n) && induced_cycle(g, w.ring, false);
        case StructureKind::Star:
            return distinct(w.leaves, n) && star_shape(g, w.hub, w.leaves);
        case StructureKind::DoubleStar: {
            if (!distinct(w.leaves, n) || !star_shape(g, w.hub, w.leaves) ||
                !star_shape(g, w.second_hub, w.leaves))
                return false;
            return w.hub != w.second_hub && !g.has_edge(w.hub, w.second_hub);
        }
        case StructureKind::Fan: {
            if (w.ring.size() < 4 || !distinct(w.ring, n) || !induced_path(g, w.ring)) return false;
            if (w.hub < 0) return false;
            for (int v : w.ring)
                if (v == w.hub || !g.has_edge(w.hub, v)) return false;
            return true;
        }
        case StructureKind::Wheel: {
            if (w.ring.size() < 4 || !distinct(w.ring, n) || !induced_cycle(g, w.ring, true))
                return false;
            if (w.hub < 0) return false;
            for (int v : w.ring)
                if (v == w.hub || !g.has_edge(w.hub, v)) return false;
            return true;
        }
    }
    return false;
}

std::string witness_to_json(const StructureWitness& w) {
    std::ostringstream out;
    auto list = [&](const std::vector<int>& vs) {
        out << "[";
        for (size_t i = 0; i < vs.size(); ++i) out << (i ? ", " : "") << vs[i];
        out << "]";
    };
    out << "{\"kind\": \"" << kind_name(w.kind) << "\"";
    if (w.hub >= 0) out << ", \"hub\": " << w.hub;
    if (w.second_hub >= 0) out << ", \"second_hub\": " << w.second_hub;
    if (!w.ring.empty()) {
        out << ", \"ring\": ";
        list(w.ring);
    }
    if (!w.leaves.empty()) {
        out << ", \"leaves\": ";
        list(w.leaves);
    }
    out << "}";
    return out.str();
}

} // namespace iuc
