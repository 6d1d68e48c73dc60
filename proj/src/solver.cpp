#include "iuc/solver.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <queue>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "iuc/lp.hpp"
#include "iuc/oracle.hpp"

namespace iuc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

uint64_t triple_key(int a, int b, int c) {
    int v[3] = {a, b, c};
    std::sort(v, v + 3);
    return (uint64_t(v[0]) << 42) | (uint64_t(v[1]) << 21) | uint64_t(v[2]);
}

std::string fingerprint(const LinearInequality& q) {
    std::string s = std::to_string(q.rhs);
    for (auto [v, c] : q.terms) {
        s += ',';
        s += std::to_string(v);
        s += ':';
        s += std::to_string(c);
    }
    return s;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

} // namespace

std::string status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::NodeLimit: return "node_limit";
        case SolveStatus::TimeLimit: return "time_limit";
    }
    return "unknown";
}

std::pair<std::vector<StructureWitness>, std::vector<OpenTriangle>> greedy_4hole_cover(
    const std::vector<StructureWitness>& holes, const std::vector<OpenTriangle>& triangles) {
    std::unordered_map<uint64_t, int> id_of;
    id_of.reserve(triangles.size() * 2);
    for (size_t i = 0; i < triangles.size(); ++i)
        id_of.emplace(triple_key(triangles[i].center, triangles[i].a, triangles[i].b), (int)i);

    // the four consecutive ring triples are exactly the open triangles a
    // 4-hole dominates
    std::vector<std::array<int, 4>> tris(holes.size());
    for (size_t h = 0; h < holes.size(); ++h) {
        const auto& r = holes[h].ring;
        if (holes[h].kind != StructureKind::Hole || r.size() != 4)
            throw std::invalid_argument("greedy_4hole_cover: not a 4-hole witness");
        for (int j = 0; j < 4; ++j) {
            auto it = id_of.find(triple_key(r[j], r[(j + 1) % 4], r[(j + 2) % 4]));
            tris[h][j] = it == id_of.end() ? -1 : it->second;
        }
    }

    std::vector<char> covered(triangles.size(), 0);
    auto uncovered_count = [&](size_t h) {
        int c = 0;
        for (int id : tris[h])
            if (id >= 0 && !covered[id]) ++c;
        return c;
    };

    // lazy greedy: keys in the queue only overestimate, so a popped entry
    // whose recount matches its key is a true maximum; input order breaks ties
    using Entry = std::pair<int, int>; // (count, -hole index)
    std::priority_queue<Entry> pq;
    for (size_t h = 0; h < holes.size(); ++h) {
        int c = uncovered_count(h);
        if (c > 0) pq.push({c, -(int)h});
    }

    std::vector<StructureWitness> selected;
    while (!pq.empty()) {
        auto [key, neg] = pq.top();
        pq.pop();
        size_t h = (size_t)(-neg);
        int now = uncovered_count(h);
        if (now == 0) continue;
        if (now < key) {
            pq.push({now, neg});
            continue;
        }
        selected.push_back(holes[h]);
        for (int id : tris[h])
            if (id >= 0) covered[id] = 1;
    }

    std::vector<OpenTriangle> residual;
    for (size_t i = 0; i < triangles.size(); ++i)
        if (!covered[i]) residual.push_back(triangles[i]);
    return {std::move(selected), std::move(residual)};
}

CutPool generate_root_cuts(const Graph& g, const SolveConfig& cfg) {
    auto t0 = Clock::now();
    CutPool pool;
    const auto ots = enumerate_open_triangles(g);
    pool.residual_ot = ots;

    std::unordered_set<std::string> seen;
    auto push_cut = [&](LinearInequality q, int& counter) {
        if (seen.insert(fingerprint(q)).second) {
            pool.inequalities.push_back(std::move(q));
            ++counter;
        }
    };

    if (cfg.use_hole_antihole) {
        if (cfg.hole_cover_greedy) {
            auto [chosen, residual] = greedy_4hole_cover(enumerate_4holes(g), ots);
            pool.residual_ot = std::move(residual);
            for (const auto& h : chosen) push_cut(hole_inequality(h), pool.count_hole);
        }
        if (cfg.anti_hole_detection) {
            SearchBudget budget;
            budget.max_count = cfg.per_hub_cap;
            budget.time_limit_s = cfg.per_hub_seconds;
            for (const auto& a : find_anti_holes(g, 7, budget))
                if (a.ring.size() % 2 == 1) push_cut(antihole_inequality(a), pool.count_anti_hole);
            pool.search_truncated = pool.search_truncated || budget.hit_time;
        }
    }

    // residual OT rows stay in the formulation; keep cuts distinct from them
    for (const auto& t : pool.residual_ot) seen.insert(fingerprint(ot_inequality(t)));

    if (cfg.use_star_doublestar) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            auto star = maximal_star_at(g, v);
            if (!star) continue;
            auto rivals = double_stars_from(g, *star);
            if (rivals.empty()) {
                push_cut(star_inequality(*star), pool.count_star);
            } else {
                for (const auto& ds : rivals) {
                    auto [heavy_first, heavy_second] = double_star_inequalities(ds);
                    push_cut(std::move(heavy_first), pool.count_double_star);
                    push_cut(std::move(heavy_second), pool.count_double_star);
                }
            }
        }
    }

    if (cfg.use_fan_wheel) {
        const int n = g.vertex_count();
        std::vector<std::vector<LinearInequality>> wheels(n), fans(n);
        std::vector<char> trunc(n, 0);
        auto hub_search = [&](int v) {
            SearchBudget budget;
            budget.max_count = cfg.per_hub_cap;
            budget.time_limit_s = cfg.per_hub_seconds;
            for (const auto& w : chordless_cycles_in_neighborhood(g, v, cfg.fan_wheel_min_ring,
                                                                 budget)) {
                int k = (int)w.ring.size();
                if (k % 3 != 0 || (k / 3) % 2 == 1) wheels[v].push_back(wheel_inequality(w));
            }
            for (const auto& w : chordless_paths_in_neighborhood(g, v, cfg.fan_wheel_min_ring,
                                                                 budget)) {
                if ((int)w.ring.size() % 3 != 2) fans[v].push_back(fan_inequality(w));
            }
            trunc[v] = budget.hit_time;
        };

        unsigned workers = std::min<unsigned>({8, std::thread::hardware_concurrency(),
                                               (unsigned)std::max(n, 1)});
        if (workers <= 1 || n < 8) {
            for (int v = 0; v < n; ++v) hub_search(v);
        } else {
            std::vector<std::thread> ts;
            for (unsigned t = 0; t < workers; ++t)
                ts.emplace_back([&, t] {
                    for (int v = (int)t; v < n; v += (int)workers) hub_search(v);
                });
            for (auto& t : ts) t.join();
        }
        for (int v = 0; v < n; ++v) {
            for (auto& q : wheels[v]) push_cut(std::move(q), pool.count_wheel);
            for (auto& q : fans[v]) push_cut(std::move(q), pool.count_fan);
            pool.search_truncated = pool.search_truncated || trunc[v];
        }
    }

    for (const auto& q : cfg.extra_cuts) {
        int* counter = &pool.count_other;
        switch (q.family) {
            case IneqFamily::Hole: counter = &pool.count_hole; break;
            case IneqFamily::AntiHole: counter = &pool.count_anti_hole; break;
            case IneqFamily::Star: counter = &pool.count_star; break;
            case IneqFamily::DoubleStar: counter = &pool.count_double_star; break;
            case IneqFamily::Fan: counter = &pool.count_fan; break;
            case IneqFamily::Wheel: counter = &pool.count_wheel; break;
            default: break;
        }
        push_cut(q, *counter);
    }

    // reconstruct the covered side of the partition
    std::unordered_set<uint64_t> residual_keys;
    residual_keys.reserve(pool.residual_ot.size() * 2);
    for (const auto& t : pool.residual_ot) residual_keys.insert(triple_key(t.center, t.a, t.b));
    for (size_t i = 0; i < ots.size(); ++i)
        if (!residual_keys.count(triple_key(ots[i].center, ots[i].a, ots[i].b)))
            pool.covered_ot.push_back((int)i);

#ifndef NDEBUG
    if (g.vertex_count() <= 20)
        for (const auto& q : pool.inequalities) assert(validate_inequality(g, q));
#endif

    pool.generation_seconds = seconds_since(t0);
    return pool;
}

std::optional<LinearInequality> separate_star_exact_independent(
    const Graph& g, int hub, const Bitset& leaf_candidates, const std::vector<double>& point) {
    if (hub < 0 || hub >= g.vertex_count())
        throw std::out_of_range("separate_star_exact_independent: hub out of range");
    StructureWitness star;
    star.kind = StructureKind::Star;
    star.hub = hub;
    double margin_sum = 0;
    for (int v : leaf_candidates.to_vector()) {
        if (!g.has_edge(hub, v))
            throw std::invalid_argument("separate_star_exact_independent: candidate not a leaf");
        double m = point[v] + point[hub] - 1;
        if (m > 0) {
            star.leaves.push_back(v);
            margin_sum += m;
        }
    }
    if (star.leaves.size() < 2) return std::nullopt;
    if (margin_sum - point[hub] <= 1e-6) return std::nullopt;
    return star_inequality(star);
}

std::vector<int> greedy_incumbent(const Graph& g) {
    const int n = g.vertex_count();
    Bitset in(n);
    std::vector<char> chosen(n, 0);
    for (;;) {
        int best = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (chosen[v]) continue;
            Bitset trial = in;
            trial.set(v);
            if (!is_iuc(g, trial)) continue;
            int deg = g.neighbors(v).intersection_count(in);
            if (deg > best_deg) {
                best = v;
                best_deg = deg;
            }
        }
        if (best < 0) break;
        in.set(best);
        chosen[best] = 1;
    }
    return in.to_vector();
}

namespace {

struct SearchNode {
    double bound = 0;
    long long id = 0;
    std::vector<int8_t> fix; // -1 free, otherwise the forced value
    std::vector<int> active; // active-row hint from the parent LP
};

struct BestBoundFirst {
    bool operator()(const SearchNode& a, const SearchNode& b) const {
        if (a.bound != b.bound) return a.bound < b.bound;
        return a.id > b.id;
    }
};

} // namespace

SolveResult solve_max_iuc(const Graph& g, const SolveConfig& cfg) {
    auto t_start = Clock::now();
    SolveResult res;
    const int n = g.vertex_count();
    if (n == 0) {
        res.best_bound = 0;
        res.total_seconds = seconds_since(t_start);
        return res;
    }

    res.pool = generate_root_cuts(g, cfg);
    res.cut_seconds = res.pool.generation_seconds;

    auto base = build_base_relaxation(g);
    auto base_rel = solve_with_active_rows(base);
    if (base_rel.sol.status != LPStatus::Optimal)
        throw std::runtime_error("solve_max_iuc: base relaxation did not solve");
    res.root_lp_base = base_rel.sol.value;

    LPProblem<double> prob;
    prob.num_vars = n;
    prob.objective.assign(n, 1.0);
    prob.lower.assign(n, 0.0);
    prob.upper.assign(n, 1.0);
    for (const auto& t : res.pool.residual_ot)
        prob.rows.push_back(row_from_inequality<double>(ot_inequality(t)));
    for (const auto& q : res.pool.inequalities) prob.rows.push_back(row_from_inequality<double>(q));

    auto t_search = Clock::now();
    auto root_rel = solve_with_active_rows(prob);
    if (root_rel.sol.status != LPStatus::Optimal)
        throw std::runtime_error("solve_max_iuc: root relaxation did not solve");
    res.root_lp_with_cuts = root_rel.sol.value;

    auto incumbent = greedy_incumbent(g);
    {
        Bitset check(n);
        for (int v : incumbent) check.set(v);
        if (!is_iuc(g, check)) throw std::logic_error("solve_max_iuc: greedy incumbent invalid");
    }
    res.best_value = (long long)incumbent.size();
    res.witness = incumbent;

    std::unordered_set<std::string> row_prints; // guards the node-cut hook
    if (cfg.node_star_separation)
        for (const auto& q : res.pool.inequalities) row_prints.insert(fingerprint(q));

    std::priority_queue<SearchNode, std::vector<SearchNode>, BestBoundFirst> best_first;
    std::vector<SearchNode> stack;
    long long next_id = 0;
    auto push_node = [&](SearchNode nd) {
        if (cfg.depth_first)
            stack.push_back(std::move(nd));
        else
            best_first.push(std::move(nd));
    };
    auto open_empty = [&] { return cfg.depth_first ? stack.empty() : best_first.empty(); };
    auto pop_node = [&] {
        if (cfg.depth_first) {
            SearchNode nd = std::move(stack.back());
            stack.pop_back();
            return nd;
        }
        SearchNode nd = best_first.top();
        best_first.pop();
        return nd;
    };
    auto open_best_bound = [&]() -> double {
        if (cfg.depth_first) {
            double b = -1;
            for (const auto& nd : stack) b = std::max(b, nd.bound);
            return b;
        }
        return best_first.empty() ? -1 : best_first.top().bound;
    };

    SearchNode root;
    root.bound = res.root_lp_with_cuts;
    root.id = next_id++;
    root.fix.assign(n, -1);
    root.active = root_rel.active;
    push_node(std::move(root));

    bool interrupted = false;
    while (!open_empty()) {
        if (cfg.time_limit_s >= 0 && seconds_since(t_start) > cfg.time_limit_s) {
            res.status = SolveStatus::TimeLimit;
            interrupted = true;
            break;
        }
        if (cfg.node_limit >= 0 && res.node_count >= cfg.node_limit) {
            res.status = SolveStatus::NodeLimit;
            interrupted = true;
            break;
        }
        SearchNode nd = pop_node();
        if (nd.bound < (double)res.best_value + 1 - 1e-6) continue;

        ++res.node_count;
        for (int v = 0; v < n; ++v) {
            prob.lower[v] = nd.fix[v] == 0 ? 0.0 : (nd.fix[v] == 1 ? 1.0 : 0.0);
            prob.upper[v] = nd.fix[v] == 0 ? 0.0 : 1.0;
        }
        auto rel = solve_with_active_rows(prob, nd.active);
        if (rel.sol.status == LPStatus::Infeasible) continue;
        if (rel.sol.status != LPStatus::Optimal)
            throw std::runtime_error("solve_max_iuc: node relaxation did not solve");

        if (cfg.node_star_separation) {
            for (int round = 0; round < 3; ++round) {
                std::vector<LPRow<double>> found;
                for (int v = 0; v < n; ++v) {
                    auto star = maximal_star_at(g, v);
                    if (!star) continue;
                    Bitset cand(n);
                    for (int leaf : star->leaves) cand.set(leaf);
                    auto cut = separate_star_exact_independent(g, v, cand, rel.sol.x);
                    if (cut && row_prints.insert(fingerprint(*cut)).second) {
                        found.push_back(row_from_inequality<double>(*cut));
                        ++res.pool.count_star;
                    }
                }
                if (found.empty()) break;
                for (auto& r : found) {
                    prob.rows.push_back(std::move(r));
                    rel.active.push_back((int)prob.rows.size() - 1);
                }
                rel = solve_with_active_rows(prob, rel.active);
                if (rel.sol.status != LPStatus::Optimal) break;
            }
            if (rel.sol.status == LPStatus::Infeasible) continue;
            if (rel.sol.status != LPStatus::Optimal)
                throw std::runtime_error("solve_max_iuc: node relaxation did not solve");
        }

        double value = rel.sol.value;
        if (value < (double)res.best_value + 1 - 1e-6) continue;

        int branch_v = -1;
        double branch_score = 2.0;
        for (int v = 0; v < n; ++v) {
            double x = rel.sol.x[v];
            double frac = std::fabs(x - std::round(x));
            if (frac <= 1e-6) continue;
            double score = std::fabs(x - 0.5);
            if (score < branch_score - 1e-12) {
                branch_score = score;
                branch_v = v;
            }
        }

        if (branch_v < 0) {
            Bitset set(n);
            std::vector<int> vec;
            for (int v = 0; v < n; ++v)
                if (rel.sol.x[v] > 0.5) {
                    set.set(v);
                    vec.push_back(v);
                }
            if (!is_iuc(g, set))
                throw std::logic_error("solve_max_iuc: integral node point is not an IUC");
            if ((long long)vec.size() > res.best_value) {
                res.best_value = (long long)vec.size();
                res.witness = std::move(vec);
            }
            continue;
        }

        for (int side = 0; side < 2; ++side) {
            SearchNode child;
            child.bound = value;
            child.id = next_id++;
            child.fix = nd.fix;
            child.fix[branch_v] = (int8_t)(side == 0 ? 0 : 1);
            child.active = rel.active;
            push_node(std::move(child));
        }
    }

    if (interrupted) {
        res.best_bound = std::max((double)res.best_value, open_best_bound());
    } else {
        res.status = SolveStatus::Optimal;
        res.best_bound = (double)res.best_value;
    }
    std::sort(res.witness.begin(), res.witness.end());
    res.search_seconds = seconds_since(t_search);
    res.total_seconds = seconds_since(t_start);
    return res;
}

RootGap root_gap_report(const Graph& g, const SolveConfig& cfg) {
    RootGap gap;
    auto base_rel = solve_with_active_rows(build_base_relaxation(g));
    if (base_rel.sol.status != LPStatus::Optimal)
        throw std::runtime_error("root_gap_report: base relaxation did not solve");
    gap.base = base_rel.sol.value;

    CutPool pool = generate_root_cuts(g, cfg);
    LPProblem<double> prob;
    prob.num_vars = g.vertex_count();
    prob.objective.assign(prob.num_vars, 1.0);
    prob.lower.assign(prob.num_vars, 0.0);
    prob.upper.assign(prob.num_vars, 1.0);
    for (const auto& t : pool.residual_ot)
        prob.rows.push_back(row_from_inequality<double>(ot_inequality(t)));
    for (const auto& q : pool.inequalities) prob.rows.push_back(row_from_inequality<double>(q));
    auto rel = solve_with_active_rows(prob);
    if (rel.sol.status != LPStatus::Optimal)
        throw std::runtime_error("root_gap_report: cut relaxation did not solve");
    gap.with_cuts = rel.sol.value;
    return gap;
}

std::string solve_result_to_json(const SolveResult& r) {
    std::string s = "{\n";
    s += "  \"status\": \"" + status_name(r.status) + "\",\n";
    s += "  \"best_value\": " + std::to_string(r.best_value) + ",\n";
    s += "  \"best_bound\": " + format_double(r.best_bound) + ",\n";
    s += "  \"witness\": [";
    for (size_t i = 0; i < r.witness.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(r.witness[i]);
    }
    s += "],\n";
    s += "  \"node_count\": " + std::to_string(r.node_count) + ",\n";
    s += "  \"root_lp_base\": " + format_double(r.root_lp_base) + ",\n";
    s += "  \"root_lp_with_cuts\": " + format_double(r.root_lp_with_cuts) + ",\n";
    s += "  \"cut_counts\": {";
    s += "\"hole\": " + std::to_string(r.pool.count_hole);
    s += ", \"anti_hole\": " + std::to_string(r.pool.count_anti_hole);
    s += ", \"star\": " + std::to_string(r.pool.count_star);
    s += ", \"double_star\": " + std::to_string(r.pool.count_double_star);
    s += ", \"fan\": " + std::to_string(r.pool.count_fan);
    s += ", \"wheel\": " + std::to_string(r.pool.count_wheel);
    s += ", \"other\": " + std::to_string(r.pool.count_other);
    s += "},\n";
    s += "  \"residual_ot\": " + std::to_string(r.pool.residual_ot.size()) + ",\n";
    s += "  \"truncated\": " + std::string(r.pool.search_truncated ? "true" : "false") + ",\n";
    s += "  \"timings_s\": {\"cuts\": " + format_double(r.cut_seconds);
    s += ", \"search\": " + format_double(r.search_seconds);
    s += ", \"total\": " + format_double(r.total_seconds) + "}\n";
    s += "}";
    return s;
}

} // namespace iuc
