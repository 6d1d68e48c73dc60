// Command-line surface: instance generation, exact solving, cut-pool
// inspection, polyhedral certification, and the two benchmark studies.
#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "iuc/graph.hpp"
#include "iuc/inequality.hpp"
#include "iuc/instances.hpp"
#include "iuc/lp.hpp"
#include "iuc/oracle.hpp"
#include "iuc/polytope.hpp"
#include "iuc/solver.hpp"
#include "iuc/structures.hpp"

namespace {

using namespace iuc;

int g_verbosity = 0;

void note(const std::string& line) {
    if (g_verbosity > 0) std::cerr << line << "\n";
}

Graph read_graph(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return load_dimacs(buf.str());
    }
    return load_dimacs_file(path);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
}

StructureKind parse_kind(const std::string& name) {
    static const std::map<std::string, StructureKind> kinds = {
        {"cycle", StructureKind::Hole},          {"hole", StructureKind::Hole},
        {"anticycle", StructureKind::AntiHole},  {"antihole", StructureKind::AntiHole},
        {"star", StructureKind::Star},           {"doublestar", StructureKind::DoubleStar},
        {"fan", StructureKind::Fan},             {"wheel", StructureKind::Wheel},
    };
    auto it = kinds.find(name);
    if (it == kinds.end()) throw CLI::ValidationError("--kind", "unknown structure: " + name);
    return it->second;
}

void apply_cut_tokens(SolveConfig& cfg, const std::vector<std::string>& tokens) {
    for (const auto& t : tokens) {
        if (t == "ha") {
            cfg.use_hole_antihole = true;
        } else if (t == "sd") {
            cfg.use_star_doublestar = true;
        } else if (t == "fw") {
            cfg.use_fan_wheel = true;
        } else if (t == "all") {
            cfg.use_hole_antihole = cfg.use_star_doublestar = cfg.use_fan_wheel = true;
        } else if (t == "none") {
            cfg.use_hole_antihole = cfg.use_star_doublestar = cfg.use_fan_wheel = false;
        } else {
            throw CLI::ValidationError("--cuts", "unknown token: " + t);
        }
    }
}

std::vector<LinearInequality> structure_inequalities(const StructureWitness& w) {
    switch (w.kind) {
        case StructureKind::Hole: return {hole_inequality(w)};
        case StructureKind::AntiHole: return {antihole_inequality(w)};
        case StructureKind::Star: return {star_inequality(w)};
        case StructureKind::DoubleStar: {
            auto [a, b] = double_star_inequalities(w);
            return {a, b};
        }
        case StructureKind::Fan: return {fan_inequality(w)};
        case StructureKind::Wheel: return {wheel_inequality(w)};
    }
    return {};
}

StructureKind kind_from_name(const std::string& name) {
    if (name == "hole") return StructureKind::Hole;
    if (name == "antihole") return StructureKind::AntiHole;
    if (name == "star") return StructureKind::Star;
    if (name == "doublestar") return StructureKind::DoubleStar;
    if (name == "fan") return StructureKind::Fan;
    if (name == "wheel") return StructureKind::Wheel;
    throw std::runtime_error("unknown structure kind in truth file: " + name);
}

// sidecar format: {"parts": [{"alpha": N, "witness": {...}}, ...], ...}
std::vector<LinearInequality> cuts_from_truth_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read truth file: " + path);
    nlohmann::json doc = nlohmann::json::parse(in);
    std::vector<LinearInequality> cuts;
    for (const auto& part : doc.at("parts")) {
        const auto& jw = part.at("witness");
        StructureWitness w;
        w.kind = kind_from_name(jw.at("kind").get<std::string>());
        w.hub = jw.value("hub", -1);
        w.second_hub = jw.value("second_hub", -1);
        if (jw.contains("ring")) w.ring = jw["ring"].get<std::vector<int>>();
        if (jw.contains("leaves")) w.leaves = jw["leaves"].get<std::vector<int>>();
        for (auto& q : structure_inequalities(w)) cuts.push_back(std::move(q));
    }
    return cuts;
}

std::string composite_truth_json(const Composite& c, int parts, double mean, double dev,
                                 double inter_p, uint64_t seed) {
    std::ostringstream out;
    out << "{\n  \"generator\": {\"parts\": " << parts << ", \"size_mean\": " << mean
        << ", \"size_dev\": " << dev << ", \"inter_p\": " << inter_p << ", \"seed\": " << seed
        << "},\n";
    out << "  \"alpha_sum\": " << c.alpha_sum << ",\n  \"parts\": [\n";
    for (size_t i = 0; i < c.parts.size(); ++i) {
        out << "    {\"alpha\": " << c.parts[i].alpha
            << ", \"witness\": " << witness_to_json(c.parts[i].witness) << "}";
        out << (i + 1 < c.parts.size() ? ",\n" : "\n");
    }
    out << "  ]\n}\n";
    return out.str();
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

// ---- bench ----

struct BenchRow {
    std::string instance;
    std::string arm;
    int n = 0;
    long long m = 0;
    long long ot_count = 0;
    SolveResult result;
};

const char* kBenchHeader =
    "instance,arm,n,m,ot_count,hole_cuts,anti_hole_cuts,star_cuts,double_star_cuts,fan_cuts,"
    "wheel_cuts,other_cuts,residual_ot,root_lp_base,root_lp_with_cuts,best_value,best_bound,"
    "nodes,status,cut_s,search_s,total_s\n";

std::string bench_row_csv(const BenchRow& r) {
    const SolveResult& s = r.result;
    std::ostringstream out;
    out << r.instance << ',' << r.arm << ',' << r.n << ',' << r.m << ',' << r.ot_count << ','
        << s.pool.count_hole << ',' << s.pool.count_anti_hole << ',' << s.pool.count_star << ','
        << s.pool.count_double_star << ',' << s.pool.count_fan << ',' << s.pool.count_wheel << ','
        << s.pool.count_other << ',' << s.pool.residual_ot.size() << ','
        << format_double(s.root_lp_base) << ',' << format_double(s.root_lp_with_cuts) << ','
        << s.best_value << ',' << format_double(s.best_bound) << ',' << s.node_count << ','
        << status_name(s.status) << ',' << format_double(s.cut_seconds) << ','
        << format_double(s.search_seconds) << ',' << format_double(s.total_seconds) << '\n';
    return out.str();
}

struct BenchJob {
    std::string instance;
    std::string arm;
    Graph graph;
    SolveConfig cfg;
};

std::string run_bench(std::vector<BenchJob> jobs, int workers) {
    std::vector<BenchRow> rows(jobs.size());
    std::atomic<size_t> cursor{0};
    auto work = [&] {
        for (;;) {
            size_t i = cursor.fetch_add(1);
            if (i >= jobs.size()) break;
            note("bench: " + jobs[i].instance + " " + jobs[i].arm);
            BenchRow row;
            row.instance = jobs[i].instance;
            row.arm = jobs[i].arm;
            row.n = jobs[i].graph.vertex_count();
            row.m = jobs[i].graph.edge_count();
            row.ot_count = (long long)enumerate_open_triangles(jobs[i].graph).size();
            row.result = solve_max_iuc(jobs[i].graph, jobs[i].cfg);
            rows[i] = std::move(row);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> ts;
        for (int t = 0; t < workers; ++t) ts.emplace_back(work);
        for (auto& t : ts) t.join();
    }
    std::string csv = kBenchHeader;
    for (const auto& r : rows) csv += bench_row_csv(r);
    return csv;
}

// the eight composite-study arms, in table order
const std::vector<std::pair<std::string, unsigned>> kArms = {
    {"base", 0}, {"+ha", 1},    {"+sd", 2},    {"+fw", 4},
    {"+ha&sd", 3}, {"+ha&fw", 5}, {"+sd&fw", 6}, {"+all", 7},
};

bool arm_takes(unsigned mask, StructureKind kind) {
    switch (kind) {
        case StructureKind::Hole:
        case StructureKind::AntiHole: return mask & 1;
        case StructureKind::Star:
        case StructureKind::DoubleStar: return mask & 2;
        case StructureKind::Fan:
        case StructureKind::Wheel: return mask & 4;
    }
    return false;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"independent-union-of-cliques toolkit"};
    app.require_subcommand(1);
    app.add_flag("-v,--verbose", g_verbosity, "progress notes on stderr");

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate instances (DIMACS out)");
    gen->require_subcommand(1);
    std::string gen_out, gen_truth, gen_kind = "cycle";
    int gen_size = 7, gen_n = 20, gen_a = 2, gen_b = 3, gen_parts = 21;
    double gen_p = 0.5, gen_mean = 10.0, gen_sd = 1.0, gen_inter = 0.01;
    uint64_t gen_seed = 1;

    auto* gs = gen->add_subcommand("structure", "one canonical structure");
    gs->add_option("--kind", gen_kind, "cycle|anticycle|star|doublestar|fan|wheel");
    gs->add_option("--size", gen_size, "vertex count")->required();
    gs->add_option("--out", gen_out, "output path (default stdout)");

    auto* ger = gen->add_subcommand("er", "uniform random graph");
    ger->add_option("--n", gen_n)->required();
    ger->add_option("--p", gen_p)->required();
    ger->add_option("--seed", gen_seed);
    ger->add_option("--out", gen_out);

    auto* gt = gen->add_subcommand("tree", "uniform random labeled tree");
    gt->add_option("--n", gen_n)->required();
    gt->add_option("--seed", gen_seed);
    gt->add_option("--out", gen_out);

    auto* gb = gen->add_subcommand("bipartite", "complete bipartite graph");
    gb->add_option("--a", gen_a)->required();
    gb->add_option("--b", gen_b)->required();
    gb->add_option("--out", gen_out);

    auto* gc = gen->add_subcommand("composite", "disjoint structures plus sparse joins");
    gc->add_option("--parts", gen_parts);
    gc->add_option("--mean", gen_mean);
    gc->add_option("--sd", gen_sd);
    gc->add_option("--inter", gen_inter);
    gc->add_option("--seed", gen_seed);
    gc->add_option("--out", gen_out);
    gc->add_option("--truth", gen_truth, "sidecar ground-truth JSON path");

    // ---- shared solve/cuts options ----
    std::string in_path, truth_path;
    std::vector<std::string> cut_tokens;
    SolveConfig cfg;
    auto add_cut_options = [&](CLI::App* cmd) {
        cmd->add_option("--in", in_path, "DIMACS input ('-' for stdin)")->required();
        cmd->add_option("--cuts", cut_tokens, "ha,sd,fw or all or none")->delimiter(',');
        cmd->add_option("--min-ring", cfg.fan_wheel_min_ring, "fan/wheel minimum ring size");
        cmd->add_option("--hub-cap", cfg.per_hub_cap, "structures per hub");
        cmd->add_option("--hub-time", cfg.per_hub_seconds, "seconds per hub search");
    };

    auto* solve = app.add_subcommand("solve", "exact maximum IUC (JSON out)");
    add_cut_options(solve);
    solve->add_option("--node-limit", cfg.node_limit);
    solve->add_option("--time-limit", cfg.time_limit_s, "seconds");
    solve->add_option("--seed", cfg.seed);
    solve->add_flag("--depth-first", cfg.depth_first);
    solve->add_flag("--node-stars", cfg.node_star_separation, "star separation below the root");
    solve->add_option("--truth", truth_path, "add the inequalities of a ground-truth sidecar");

    auto* oracle = app.add_subcommand("oracle", "exhaustive reference optimum (JSON out)");
    oracle->add_option("--in", in_path, "DIMACS input ('-' for stdin)")->required();

    auto* cuts = app.add_subcommand("cuts", "root cut pool summary (JSON out)");
    add_cut_options(cuts);

    auto* certify = app.add_subcommand("certify", "facet verdict table");
    bool rational_extras = false;
    certify->add_flag("--rational", rational_extras,
                      "also run the exact descriptions and the extreme-point certificate");

    // ---- bench ----
    auto* bench = app.add_subcommand("bench", "benchmark studies (CSV out)");
    bench->require_subcommand(1);
    std::string bench_out;
    int bench_instances = 5, bench_workers = 1, bench_n = 60;
    double bench_pfrom = 0.1, bench_pto = 0.5, bench_pstep = 0.1;
    long long bench_node_limit = -1;
    double bench_time_limit = -1;
    uint64_t bench_seed = 1;
    int bench_parts = 21;
    double bench_mean = 10.0, bench_sd = 1.0, bench_inter = 0.01;

    auto* bc = bench->add_subcommand("composite",
                                     "known-structure study: ground-truth cuts, eight arms");
    bc->add_option("--instances", bench_instances);
    bc->add_option("--parts", bench_parts);
    bc->add_option("--mean", bench_mean);
    bc->add_option("--sd", bench_sd);
    bc->add_option("--inter", bench_inter);
    bc->add_option("--seed", bench_seed);
    bc->add_option("--node-limit", bench_node_limit);
    bc->add_option("--time-limit", bench_time_limit);
    bc->add_option("--workers", bench_workers);
    bc->add_option("--out", bench_out);

    auto* be = bench->add_subcommand("er", "detection study: base versus generated cuts");
    be->add_option("--n", bench_n);
    be->add_option("--p-from", bench_pfrom);
    be->add_option("--p-to", bench_pto);
    be->add_option("--p-step", bench_pstep);
    be->add_option("--seed", bench_seed);
    be->add_option("--min-ring", cfg.fan_wheel_min_ring);
    be->add_option("--hub-cap", cfg.per_hub_cap);
    be->add_option("--hub-time", cfg.per_hub_seconds);
    be->add_option("--node-limit", bench_node_limit);
    be->add_option("--time-limit", bench_time_limit);
    be->add_option("--workers", bench_workers);
    be->add_option("--out", bench_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gs->parsed()) {
            write_text(gen_out, to_dimacs(gen_structure(parse_kind(gen_kind), gen_size)));
        } else if (ger->parsed()) {
            write_text(gen_out, to_dimacs(gen_er(gen_n, gen_p, gen_seed)));
        } else if (gt->parsed()) {
            write_text(gen_out, to_dimacs(gen_tree(gen_n, gen_seed)));
        } else if (gb->parsed()) {
            write_text(gen_out, to_dimacs(gen_complete_bipartite(gen_a, gen_b)));
        } else if (gc->parsed()) {
            Composite c = gen_composite(gen_parts, gen_mean, gen_sd, gen_inter, gen_seed);
            write_text(gen_out, to_dimacs(c.graph));
            std::string truth =
                composite_truth_json(c, gen_parts, gen_mean, gen_sd, gen_inter, gen_seed);
            if (!gen_truth.empty())
                write_text(gen_truth, truth);
            else if (!gen_out.empty() && gen_out != "-")
                write_text(gen_out + ".truth.json", truth);
        } else if (solve->parsed()) {
            Graph g = read_graph(in_path);
            apply_cut_tokens(cfg, cut_tokens);
            if (!truth_path.empty()) cfg.extra_cuts = cuts_from_truth_file(truth_path);
            SolveResult res = solve_max_iuc(g, cfg);
            std::cout << solve_result_to_json(res) << "\n";
            if (res.status != SolveStatus::Optimal) return 3;
        } else if (oracle->parsed()) {
            Graph g = read_graph(in_path);
            OracleResult res = max_iuc_oracle(g);
            std::cout << "{\"value\": " << res.value << ", \"witness\": [";
            for (size_t i = 0; i < res.witness.size(); ++i)
                std::cout << (i ? ", " : "") << res.witness[i];
            std::cout << "]}\n";
        } else if (cuts->parsed()) {
            Graph g = read_graph(in_path);
            apply_cut_tokens(cfg, cut_tokens);
            CutPool pool = generate_root_cuts(g, cfg);
            std::cout << "{\"n\": " << g.vertex_count() << ", \"m\": " << g.edge_count()
                      << ", \"ot_count\": "
                      << pool.residual_ot.size() + pool.covered_ot.size()
                      << ", \"hole\": " << pool.count_hole
                      << ", \"anti_hole\": " << pool.count_anti_hole
                      << ", \"star\": " << pool.count_star
                      << ", \"double_star\": " << pool.count_double_star
                      << ", \"fan\": " << pool.count_fan << ", \"wheel\": " << pool.count_wheel
                      << ", \"other\": " << pool.count_other
                      << ", \"residual_ot\": " << pool.residual_ot.size()
                      << ", \"covered_ot\": " << pool.covered_ot.size()
                      << ", \"generation_s\": " << format_double(pool.generation_seconds)
                      << ", \"truncated\": " << (pool.search_truncated ? "true" : "false")
                      << "}\n";
        } else if (certify->parsed()) {
            auto rows = certify_theorem_matrix();
            std::printf("%-34s %-8s %-8s %-9s %-6s %s\n", "case", "expect", "got", "dim/amb",
                        "valid", "ok");
            int ok_rows = 0;
            for (const auto& r : rows) {
                std::printf("%-34s %-8s %-8s %4d/%-4d %-6s %s\n", r.name.c_str(),
                            r.expect_facet ? "facet" : "lower", r.got_facet ? "facet" : "lower",
                            r.dimension, r.ambient, r.valid ? "yes" : "no", r.ok ? "yes" : "NO");
                if (r.ok) ++ok_rows;
            }
            std::printf("certified %d/%zu rows\n", ok_rows, rows.size());
            bool all_ok = ok_rows == (int)rows.size();
            if (rational_extras) {
                auto tree_rep =
                    verify_complete_description(gen_tree(10, 1), DescriptionFamily::Stars, 12, 7);
                std::printf("stars describe tree(10): %s (%d objectives, %d cuts)\n",
                            tree_rep.ok ? "yes" : "NO", tree_rep.objectives_checked,
                            tree_rep.cuts_added);
                auto bip_rep = verify_complete_description(gen_complete_bipartite(2, 3),
                                                           DescriptionFamily::DoubleStars, 12, 7);
                std::printf("double stars describe K_{2,3}: %s (%d objectives, %d cuts)\n",
                            bip_rep.ok ? "yes" : "NO", bip_rep.objectives_checked,
                            bip_rep.cuts_added);
                auto ext = certify_fractional_extreme_point_12ring();
                std::printf("12-ring fractional point: rank %d/%d, %s\n", ext.binding_rank,
                            ext.ambient, ext.extreme ? "extreme" : "NOT extreme");
                all_ok = all_ok && tree_rep.ok && bip_rep.ok && ext.extreme;
            }
            if (!all_ok) return 1;
        } else if (bc->parsed()) {
            std::vector<BenchJob> jobs;
            for (int i = 0; i < bench_instances; ++i) {
                Composite c =
                    gen_composite(bench_parts, bench_mean, bench_sd, bench_inter,
                                  bench_seed + (uint64_t)i);
                std::string name = "comp" + std::to_string(bench_parts) + "_" +
                                   std::to_string((unsigned long long)(bench_seed + i));
                for (const auto& [arm, mask] : kArms) {
                    BenchJob job;
                    job.instance = name;
                    job.arm = arm;
                    job.graph = c.graph;
                    job.cfg.hole_cover_greedy = false;
                    job.cfg.node_limit = bench_node_limit;
                    job.cfg.time_limit_s = bench_time_limit;
                    for (const auto& part : c.parts)
                        if (arm_takes(mask, part.witness.kind))
                            for (auto& q : structure_inequalities(part.witness))
                                job.cfg.extra_cuts.push_back(std::move(q));
                    jobs.push_back(std::move(job));
                }
            }
            write_text(bench_out, run_bench(std::move(jobs), bench_workers));
        } else if (be->parsed()) {
            std::vector<BenchJob> jobs;
            for (double p = bench_pfrom; p <= bench_pto + 1e-9; p += bench_pstep) {
                Graph g = gen_er(bench_n, p, bench_seed);
                char name[64];
                std::snprintf(name, sizeof(name), "er%d_p%.2f", bench_n, p);
                for (int vi = 0; vi < 2; ++vi) {
                    BenchJob job;
                    job.instance = name;
                    job.arm = vi ? "+vi" : "base";
                    job.graph = g;
                    job.cfg = cfg;
                    job.cfg.node_limit = bench_node_limit;
                    job.cfg.time_limit_s = bench_time_limit;
                    if (vi) {
                        job.cfg.use_hole_antihole = true;
                        job.cfg.anti_hole_detection = false; // 4-hole cover, wheels, fans only
                        job.cfg.use_fan_wheel = true;
                    }
                    jobs.push_back(std::move(job));
                }
            }
            write_text(bench_out, run_bench(std::move(jobs), bench_workers));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
