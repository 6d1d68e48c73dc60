#include "iuc/polytope.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "iuc/lp.hpp"
#include "iuc/oracle.hpp"
#include "iuc/structures.hpp"

namespace iuc {

namespace {

// Incremental row-space rank over exact rationals. Each accepted row is
// reduced against all earlier rows first, so earlier pivot columns stay zero
// in later rows and membership tests are exact.
class RationalRowBasis {
public:
    explicit RationalRowBasis(int cols) : cols_(cols) {}

    bool add(std::vector<Rational> v) {
        for (size_t k = 0; k < rows_.size(); ++k) {
            const Rational& f = v[pivots_[k]];
            if (f != 0) {
                Rational factor = f;
                for (int j = 0; j < cols_; ++j)
                    if (rows_[k][j] != 0) v[j] -= factor * rows_[k][j];
            }
        }
        int pc = -1;
        for (int j = 0; j < cols_; ++j)
            if (v[j] != 0) {
                pc = j;
                break;
            }
        if (pc < 0) return false;
        Rational lead = v[pc];
        for (auto& e : v)
            if (e != 0) e /= lead;
        rows_.push_back(std::move(v));
        pivots_.push_back(pc);
        return true;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    int cols_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<int> pivots_;
};

Graph cycle_g(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph anti_cycle_g(int n) { return complement(cycle_g(n)); }

Graph fan_g(int p) {
    Graph g(p + 1);
    for (int i = 1; i < p; ++i) g.add_edge(i, i + 1);
    for (int i = 1; i <= p; ++i) g.add_edge(0, i);
    return g;
}

Graph wheel_g(int k) {
    Graph g(k + 1);
    for (int i = 1; i < k; ++i) g.add_edge(i, i + 1);
    g.add_edge(k, 1);
    for (int i = 1; i <= k; ++i) g.add_edge(0, i);
    return g;
}

Graph bipartite_g(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph seven_ring_with_apex(const std::vector<int>& apex_neighbors) {
    Graph g(8);
    for (int i = 0; i < 7; ++i) g.add_edge(i, (i + 1) % 7);
    for (int u : apex_neighbors) g.add_edge(7, u);
    return g;
}

StructureWitness mkwit(StructureKind kind, std::vector<int> ring, int hub = -1, int hub2 = -1,
                       std::vector<int> leaves = {}) {
    StructureWitness w;
    w.kind = kind;
    w.ring = std::move(ring);
    w.hub = hub;
    w.second_hub = hub2;
    w.leaves = std::move(leaves);
    return w;
}

std::vector<int> iota_ring(int from, int count) {
    std::vector<int> r(count);
    for (int i = 0; i < count; ++i) r[i] = from + i;
    return r;
}

} // namespace

FaceReport face_dimension(const Graph& g, const LinearInequality& q) {
    const int n = g.vertex_count();
    for (auto& [v, c] : q.terms)
        if (v < 0 || v >= n) throw std::invalid_argument("face_dimension: term outside the graph");

    FaceReport rep;
    rep.ambient = n;
    rep.valid = true;

    auto cat = enumerate_iucs(g);
    std::vector<uint32_t> tight;
    for (uint32_t s : cat.sets) {
        long long lhs = 0;
        for (auto& [v, c] : q.terms)
            if (s >> v & 1) lhs += c;
        if (lhs > q.rhs)
            rep.valid = false;
        else if (lhs == q.rhs)
            tight.push_back(s);
    }
    rep.tight_count = static_cast<long long>(tight.size());
    if (!rep.valid || tight.empty()) return rep;

    RationalRowBasis basis(n);
    rep.basis_points.push_back(tight[0]);
    for (size_t i = 1; i < tight.size() && basis.rank() < n; ++i) {
        std::vector<Rational> diff(n, Rational(0));
        for (int j = 0; j < n; ++j) {
            int d = static_cast<int>(tight[i] >> j & 1) - static_cast<int>(tight[0] >> j & 1);
            if (d != 0) diff[j] = d;
        }
        if (basis.add(std::move(diff))) rep.basis_points.push_back(tight[i]);
    }
    rep.dimension = basis.rank();
    rep.facet = rep.dimension == n - 1;
    return rep;
}

std::vector<TheoremRow> certify_theorem_matrix() {
    struct Entry {
        std::string name;
        Graph g;
        LinearInequality q;
        bool expect;
    };
    std::vector<Entry> entries;
    auto push = [&](std::string name, Graph g, LinearInequality q, bool expect) {
        entries.push_back({std::move(name), std::move(g), std::move(q), expect});
    };

    {
        Graph p3(3);
        p3.add_edge(0, 1);
        p3.add_edge(1, 2);
        push("ot-on-path", p3, ot_inequality({1, 0, 2}), true);
    }
    push("ot-inside-4-ring", cycle_g(4), ot_inequality({1, 0, 2}), false);

    push("4-ring", cycle_g(4), hole_inequality(mkwit(StructureKind::Hole, iota_ring(0, 4))), true);
    {
        Graph g(5);
        for (int i = 0; i < 4; ++i) g.add_edge(i, (i + 1) % 4);
        g.add_edge(0, 4);
        push("4-ring-with-pendant", g,
             hole_inequality(mkwit(StructureKind::Hole, iota_ring(0, 4))), true);
    }
    push("5-ring", cycle_g(5), hole_inequality(mkwit(StructureKind::Hole, iota_ring(0, 5))), true);
    push("6-ring", cycle_g(6), hole_inequality(mkwit(StructureKind::Hole, iota_ring(0, 6))), false);
    push("7-ring", cycle_g(7), hole_inequality(mkwit(StructureKind::Hole, iota_ring(0, 7))), true);
    push("9-ring", cycle_g(9), hole_inequality(mkwit(StructureKind::Hole, iota_ring(0, 9))), false);

    push("odd-anti-ring-7", anti_cycle_g(7),
         antihole_inequality(mkwit(StructureKind::AntiHole, iota_ring(0, 7))), true);
    push("odd-anti-ring-9", anti_cycle_g(9),
         antihole_inequality(mkwit(StructureKind::AntiHole, iota_ring(0, 9))), true);
    push("even-anti-ring-6", anti_cycle_g(6),
         antihole_inequality(mkwit(StructureKind::AntiHole, iota_ring(0, 6))), false);
    push("even-anti-ring-8", anti_cycle_g(8),
         antihole_inequality(mkwit(StructureKind::AntiHole, iota_ring(0, 8))), false);

    push("claw-star", bipartite_g(1, 3),
         star_inequality(mkwit(StructureKind::Star, {}, 0, -1, {1, 2, 3})), true);
    {
        // a second vertex adjacent to every leaf spoils the single-hub facet
        Graph g = bipartite_g(2, 3);
        push("star-with-rival-hub", g,
             star_inequality(mkwit(StructureKind::Star, {}, 0, -1, {2, 3, 4})), false);
        auto [a, b] =
            double_star_inequalities(mkwit(StructureKind::DoubleStar, {}, 0, 1, {2, 3, 4}));
        push("double-star-heavy-first", g, a, true);
        push("double-star-heavy-second", g, b, true);
    }

    for (int p : {4, 5, 6, 7, 8}) {
        bool expect = p % 3 != 2;
        push("fan-" + std::to_string(p), fan_g(p),
             fan_inequality(mkwit(StructureKind::Fan, iota_ring(1, p), 0)), expect);
    }
    for (int k : {5, 6, 7, 9, 12}) {
        bool expect = k % 3 != 0 || (k / 3) % 2 == 1;
        push("wheel-" + std::to_string(k), wheel_g(k),
             wheel_inequality(mkwit(StructureKind::Wheel, iota_ring(1, k), 0)), expect);
    }

    // four consecutive anti-ring vertices plus a non-adjacent pair, right-hand
    // side three; a facet once the anti-ring has at least eight vertices
    for (int k : {6, 7, 8, 9}) {
        LinearInequality q;
        if (k == 6) {
            for (int v = 0; v < 6; ++v) q.terms.push_back({v, 1});
        } else {
            for (int v : {0, 1, 2, 3, 5, 6}) q.terms.push_back({v, 1});
        }
        q.rhs = 3;
        q.family = IneqFamily::Lifted;
        push("anti-ring-" + std::to_string(k) + "-four-plus-pair", anti_cycle_g(k), q, k >= 8);
    }

    {
        Graph left = seven_ring_with_apex({0, 1, 3, 6});
        auto ring = hole_inequality(mkwit(StructureKind::Hole, iota_ring(0, 7)));
        push("7-ring-apex-absorbed", left, sequential_lift(left, ring, {7}), true);
        Graph right = seven_ring_with_apex({0, 1, 3, 5});
        push("7-ring-apex-lifted", right, sequential_lift(right, ring, {7}), true);
    }

    std::vector<TheoremRow> out;
    for (auto& e : entries) {
        auto rep = face_dimension(e.g, e.q);
        TheoremRow row;
        row.name = e.name;
        row.expect_facet = e.expect;
        row.valid = rep.valid;
        row.dimension = rep.dimension;
        row.ambient = rep.ambient;
        row.got_facet = rep.facet;
        row.ok = rep.valid && rep.facet == e.expect;
        out.push_back(std::move(row));
    }
    return out;
}

namespace {

// most violated star (or heavy-hub double star) at the given fractional point;
// candidates carry margin x_i + x_h - 1 and the best set keeps the positive
// margins, padded to two entries
std::vector<LinearInequality> separate_family(const Graph& g, DescriptionFamily fam,
                                              const std::vector<Rational>& x) {
    const int n = g.vertex_count();
    std::vector<LinearInequality> out;

    auto best_leafset = [&](int h, const std::vector<int>& cands, Rational& margin_sum) {
        std::vector<std::pair<Rational, int>> scored;
        for (int i : cands) scored.push_back({x[i] + x[h] - 1, i});
        std::sort(scored.begin(), scored.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        std::vector<int> leaves;
        margin_sum = 0;
        for (auto& [m, i] : scored) {
            if (m > 0 || leaves.size() < 2) {
                leaves.push_back(i);
                margin_sum += m;
            }
        }
        std::sort(leaves.begin(), leaves.end());
        return leaves;
    };

    if (fam == DescriptionFamily::Stars) {
        for (int h = 0; h < n; ++h) {
            auto cands = g.neighbors(h).to_vector();
            if (cands.size() < 2) continue;
            Rational margin_sum;
            auto leaves = best_leafset(h, cands, margin_sum);
            if (margin_sum - x[h] > 0)
                out.push_back(star_inequality(mkwit(StructureKind::Star, {}, h, -1, leaves)));
        }
    } else {
        for (int h = 0; h < n; ++h) {
            for (int u = 0; u < n; ++u) {
                if (u == h || g.has_edge(h, u)) continue;
                Bitset common = g.neighbors(h);
                common &= g.neighbors(u);
                auto cands = common.to_vector();
                if (cands.size() < 2) continue;
                Rational margin_sum;
                auto leaves = best_leafset(h, cands, margin_sum);
                if (margin_sum - x[h] + x[u] > 0) {
                    auto ds = mkwit(StructureKind::DoubleStar, {}, h, u, leaves);
                    out.push_back(double_star_inequalities(ds).first);
                }
            }
        }
    }
    return out;
}

} // namespace

CompleteDescriptionReport verify_complete_description(const Graph& g, DescriptionFamily fam,
                                                      int objectives, unsigned seed) {
    const int n = g.vertex_count();
    CompleteDescriptionReport rep;
    for (auto [u, v] : g.edges()) {
        if (g.neighbors(u).intersects(g.neighbors(v)))
            throw std::invalid_argument("verify_complete_description: graph has a triangle");
    }

    LPProblem<Rational> lp;
    lp.num_vars = n;
    lp.lower.assign(n, Rational(0));
    lp.upper.assign(n, Rational(1));

    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-2, 5);

    for (int t = 0; t < objectives; ++t) {
        std::vector<Rational> c(n);
        if (t == 0)
            std::fill(c.begin(), c.end(), Rational(1));
        else
            for (auto& v : c) v = coeff(rng);
        lp.objective = c;

        int rounds = 0;
        LPSolution<Rational> sol;
        for (;;) {
            if (++rounds > 5000) {
                rep.failure = "separation did not settle";
                return rep;
            }
            sol = lp_solve(lp);
            if (sol.status != LPStatus::Optimal) {
                rep.failure = "relaxation failed to solve";
                return rep;
            }
            auto cuts = separate_family(g, fam, sol.x);
            if (cuts.empty()) break;
            for (auto& q : cuts) lp.rows.push_back(row_from_inequality<Rational>(q));
            rep.cuts_added += static_cast<int>(cuts.size());
        }
        rep.max_rounds = std::max(rep.max_rounds, rounds);

        Bitset chosen(n);
        for (int j = 0; j < n; ++j) {
            if (sol.x[j] == 0) continue;
            if (sol.x[j] == 1) {
                chosen.set(j);
                continue;
            }
            std::ostringstream os;
            os << "objective " << t << ": fractional coordinate " << j;
            rep.failure = os.str();
            return rep;
        }
        if (!is_iuc(g, chosen)) {
            std::ostringstream os;
            os << "objective " << t << ": optimum is not a valid union of cliques";
            rep.failure = os.str();
            return rep;
        }
        std::vector<Rational> clamped = c;
        for (auto& v : clamped)
            if (v < 0) v = 0;
        auto exact = max_iuc_oracle(g, clamped);
        if (exact.value != sol.value) {
            std::ostringstream os;
            os << "objective " << t << ": relaxation value differs from the catalog optimum";
            rep.failure = os.str();
            return rep;
        }
        ++rep.objectives_checked;
    }
    rep.ok = true;
    return rep;
}

ExtremePointReport certify_extreme_point(const Graph& g, const std::vector<Rational>& point) {
    const int n = g.vertex_count();
    if (static_cast<int>(point.size()) != n)
        throw std::invalid_argument("certify_extreme_point: point size mismatch");

    ExtremePointReport rep;
    rep.ambient = n;
    rep.feasible = true;

    RationalRowBasis basis(n);
    for (int j = 0; j < n; ++j) {
        if (point[j] < 0 || point[j] > 1) rep.feasible = false;
        if (point[j] > 0 && point[j] < 1) rep.fractional = true;
        if (point[j] == 0 || point[j] == 1) {
            std::vector<Rational> row(n, Rational(0));
            row[j] = 1;
            basis.add(std::move(row));
        }
    }
    for (auto& t : enumerate_open_triangles(g)) {
        Rational act = point[t.center] + point[t.a] + point[t.b];
        if (act > 2) rep.feasible = false;
        if (act == 2) {
            std::vector<Rational> row(n, Rational(0));
            row[t.center] = row[t.a] = row[t.b] = 1;
            basis.add(std::move(row));
        }
    }
    rep.binding_rank = basis.rank();
    rep.extreme = rep.feasible && rep.binding_rank == n;
    return rep;
}

ExtremePointReport certify_fractional_extreme_point_12ring() {
    Graph g = cycle_g(12);
    std::vector<Rational> x(12, rational(1, 2));
    x[0] = x[4] = x[8] = 1;
    return certify_extreme_point(g, x);
}

} // namespace iuc
