#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "bpbvd/branch_solver.hpp"
#include "bpbvd/compression.hpp"
#include "bpbvd/difftest.hpp"
#include "bpbvd/generators.hpp"
#include "bpbvd/io.hpp"
#include "bpbvd/kernel.hpp"
#include "bpbvd/oracle.hpp"
#include "bpbvd/pclass.hpp"

namespace bpbvd::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string input = "-";
    std::string pclass = "biconnected";
    int d = 3;
    int k = 0;
    std::string solver = "branch";
    std::string output = "human";
    std::uint64_t seed = 0;
    std::string trace_path;
    std::string kernel_out;
};

Graph read_graph(const std::string& path, std::istream& in) {
    if (path == "-") return parse_edge_list(in);
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    return parse_edge_list(file);
}

void validate(const RunConfig& c) {
    if (c.d < 1) throw UsageError("--d must be at least 1");
    if (c.k < 0) throw UsageError("--k must be non-negative");
    if (c.solver == "compress" && c.pclass == "biconnected")
        throw UsageError("--solver compress needs --class cliques or cycles");
    if (c.solver == "kernel-branch" && c.d < 2) throw UsageError("--solver kernel-branch needs --d of at least 2");
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string join(const VertexSet& s) {
    std::ostringstream o;
    for (std::size_t i = 0; i < s.size(); ++i) o << (i ? " " : "") << s[i];
    return o.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

// Emits the record and returns the verdict exit status.
int emit(const RunConfig& c, json rec, std::ostream& out) {
    rec["format_version"] = kFormatVersion;
    if (c.output == "structured") {
        out << rec.dump(2) << '\n';
    } else {
        for (auto& [key, value] : rec.items()) {
            if (key == "format_version") continue;
            if (value.is_array() && (value.empty() || value.front().is_number())) {
                VertexSet s = value.get<VertexSet>();
                out << key << ": " << join(s) << '\n';
            } else {
                out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
            }
        }
    }
    const std::string answer = rec.value("answer", "");
    if (answer == "yes") return kExitYes;
    if (answer == "no") return kExitNo;
    return kExitRan;
}

json base_record(const char* command, const RunConfig& c, const Graph& g) {
    return json{{"command", command}, {"class", c.pclass}, {"d", c.d}, {"k", c.k},
                {"n", g.num_vertices()}, {"m", g.num_edges()}};
}

int cmd_solve(const RunConfig& c, std::istream& in, std::ostream& out) {
    validate(c);
    const Graph g = read_graph(c.input, in);
    const Instance inst{g, class_by_name(c.pclass), c.d, c.k};
    json rec = base_record("solve", c, g);
    rec["solver"] = c.solver;
    json stats = json::object();
    const auto t0 = std::chrono::steady_clock::now();
    std::optional<VertexSet> sol;
    std::string answer;

    if (c.solver == "branch") {
        auto r = solve(inst);
        sol = r.solution;
        stats["branch_nodes"] = r.stats.branch_nodes;
    } else if (c.solver == "brute") {
        auto r = brute_force(inst, oracle_cap_from_env());
        sol = r.solution;
    } else if (c.solver == "compress") {
        auto r = c.pclass == "cliques" ? solve_complete_block(g, c.d, c.k) : solve_cactus(g, c.d, c.k);
        sol = r.solution;
        stats["branch_nodes"] = r.stats.branch_nodes;
        stats["compressions"] = r.stats.compressions;
        stats["rules_applied"] = r.stats.rule_counts;
        stats["measure_violations"] = r.stats.measure_violations;
    } else if (c.solver == "kernel-branch") {
        auto kr = kernelize(inst);
        std::map<std::string, std::uint64_t> counts;
        for (auto [rule, n] : kr.stats.rule_counts) counts["rule" + std::to_string(rule)] = n;
        stats["rules_applied"] = counts;
        json kernel{{"vertices", kr.instance.graph.num_vertices()},
                    {"k", kr.instance.k},
                    {"verdict", kr.is_no() ? "no" : "reduced"}};
        if (!c.trace_path.empty()) {
            write_file(c.trace_path, kr.trace.serialize());
            kernel["trace_path"] = c.trace_path;
        }
        rec["kernel"] = kernel;
        if (!kr.is_no()) {
            auto r = solve(kr.instance);
            stats["branch_nodes"] = r.stats.branch_nodes;
            if (r.solution) sol = lift_kernel_solution(inst, kr, *r.solution);
        }
    } else if (c.solver == "approx") {
        auto a = approximate_detailed(g, inst.pclass, c.d);
        stats["lower_bound"] = a.lower_bound;
        stats["ratio_certified"] = a.ratio_certified;
        if (a.solution.size() <= static_cast<std::size_t>(c.k))
            sol = a.solution;
        else if (a.lower_bound > static_cast<std::size_t>(c.k) ||
                 (a.ratio_certified && a.solution.size() > static_cast<std::size_t>(2 * c.d + 6) * c.k))
            answer = "no";
        else
            answer = "unknown";
        rec["approximate_solution"] = a.solution;
    } else {
        throw UsageError("unknown solver " + c.solver);
    }

    if (answer.empty()) answer = sol ? "yes" : "no";
    rec["answer"] = answer;
    rec["solution"] = sol ? *sol : VertexSet{};
    stats["elapsed_ms"] = ms_since(t0);
    rec["stats"] = stats;
    return emit(c, rec, out);
}

int cmd_approx(const RunConfig& c, std::istream& in, std::ostream& out) {
    if (c.d < 1) throw UsageError("--d must be at least 1");
    const Graph g = read_graph(c.input, in);
    const auto t0 = std::chrono::steady_clock::now();
    auto a = approximate_detailed(g, class_by_name(c.pclass), c.d);
    json rec = base_record("approx", c, g);
    rec.erase("k");
    rec["solution"] = a.solution;
    rec["size"] = a.solution.size();
    rec["lower_bound"] = a.lower_bound;
    rec["obstructions_removed"] = a.obstructions;
    rec["ratio_certified"] = a.ratio_certified;
    rec["stats"] = json{{"elapsed_ms", ms_since(t0)}};
    return emit(c, rec, out);
}

int cmd_kernelize(const RunConfig& c, std::istream& in, std::ostream& out) {
    if (c.d < 2) throw UsageError("kernelize needs --d of at least 2");
    if (c.k < 0) throw UsageError("--k must be non-negative");
    const Graph g = read_graph(c.input, in);
    const auto t0 = std::chrono::steady_clock::now();
    auto kr = kernelize(Instance{g, class_by_name(c.pclass), c.d, c.k});
    json rec = base_record("kernelize", c, g);
    rec["verdict"] = kr.is_no() ? "no" : "reduced";
    if (kr.is_no()) {
        rec["answer"] = "no";
        rec["reason"] = kr.trace.no_reason;
    }
    rec["kernel_vertices"] = kr.instance.graph.num_vertices();
    rec["kernel_edges"] = kr.instance.graph.num_edges();
    rec["kernel_k"] = kr.instance.k;
    rec["size_bound"] = kernel_size_bound(c.d, c.k);
    if (!c.trace_path.empty()) {
        write_file(c.trace_path, kr.trace.serialize());
        rec["trace_path"] = c.trace_path;
    } else {
        rec["trace"] = kr.trace.serialize();
    }
    if (!kr.is_no() && !c.kernel_out.empty()) {
        write_file(c.kernel_out, to_edge_list_renumbered(kr.instance.graph));
        rec["kernel_path"] = c.kernel_out;
    }
    rec["stats"] = json{{"elapsed_ms", ms_since(t0)}};
    return emit(c, rec, out);
}

struct DifftestArgs {
    std::size_t trials = 100;
    std::size_t n = 10;
    std::uint64_t seed = 0;
    std::vector<std::string> solvers{"branch", "compress", "kernel-branch"};
    std::vector<std::string> classes{"biconnected", "cliques", "cycles"};
    int d_min = 3, d_max = 5, k_max = 4;
    std::string report_path;
    bool inject_bug = false;
    bool serial = false;
    std::string output = "human";
};

int cmd_difftest(const DifftestArgs& a, std::ostream& out) {
    DifftestConfig cfg;
    cfg.trials = a.trials;
    cfg.n = a.n;
    cfg.seed = a.seed;
    cfg.classes = a.classes;
    cfg.d_min = a.d_min;
    cfg.d_max = a.d_max;
    cfg.k_max = a.k_max;
    cfg.parallel = !a.serial;
    cfg.oracle_cap = oracle_cap_from_env();
    if (a.n > cfg.oracle_cap) throw UsageError("--n exceeds the oracle cap (set BPBVD_ORACLE_CAP to raise it)");
    for (const auto& cls : a.classes) class_by_name(cls);

    std::vector<NamedSolver> solvers;
    for (const auto& name : a.solvers) solvers.push_back(solver_by_name(name));
    if (a.inject_bug && !solvers.empty()) solvers.front() = negated_solver(solvers.front());

    const auto t0 = std::chrono::steady_clock::now();
    const auto report = differential_run(cfg, solvers);
    const std::string text = report.serialize();
    if (!a.report_path.empty()) write_file(a.report_path, text);

    if (a.output == "structured") {
        json rec{{"format_version", kFormatVersion}, {"command", "difftest"},
                 {"trials", report.trials.size()}, {"mismatches", report.mismatches()},
                 {"all_agree", report.all_agree()}, {"seed", a.seed},
                 {"stats", json{{"elapsed_ms", ms_since(t0)}}}};
        json rows = json::array();
        for (const auto& t : report.trials) {
            json verdicts = json::object();
            for (const auto& v : t.verdicts)
                verdicts[v.solver] = !v.applicable ? "n/a" : std::string(v.yes ? "yes" : "no") + (v.valid ? "" : "-invalid");
            rows.push_back(json{{"trial", t.index}, {"seed", t.seed}, {"hash", t.hash}, {"class", t.pclass},
                                {"d", t.d}, {"k", t.k}, {"oracle", t.oracle_yes ? "yes" : "no"},
                                {"verdicts", verdicts}, {"agree", t.agree}});
        }
        rec["records"] = rows;
        if (!a.report_path.empty()) rec["report_path"] = a.report_path;
        out << rec.dump(2) << '\n';
    } else {
        out << text;
    }
    return report.all_agree() ? kExitRan : kExitFailure;
}

struct GenArgs {
    std::string family = "random";
    std::size_t n = 10;
    double p = 0.4;
    std::uint64_t seed = 0;
    std::string shape = "cycle";
    int grid_k = 3;
    bool plant = false;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
    GeneratorSpec spec;
    spec.n = a.n;
    spec.p = a.p;
    spec.seed = a.seed;
    spec.shape = a.shape;
    spec.grid_k = a.grid_k;
    spec.plant = a.plant;
    if (a.family == "random") {
        spec.family = GeneratorFamily::Random;
    } else if (a.family == "kxk") {
        spec.family = GeneratorFamily::KxkReduction;
        Graph grid = random_grid(a.grid_k, a.p, a.plant, a.seed);
        Instance inst = gen_kxk_reduction(grid, a.grid_k);
        out << "# kxk grid_k=" << a.grid_k << " d=" << inst.d << " k=" << inst.k
            << " column_clique=" << (has_column_clique(grid, a.grid_k) ? "yes" : "no") << '\n';
        out << to_edge_list(inst.graph);
        return kExitRan;
    } else if (a.family == "structured") {
        spec.family = GeneratorFamily::Structured;
    } else {
        throw UsageError("unknown family " + a.family);
    }
    out << to_edge_list(generate(spec));
    return kExitRan;
}

void add_instance_flags(CLI::App* sub, RunConfig& c, bool with_k) {
    sub->add_option("input,--input,-i", c.input, "edge-list file, - for stdin");
    sub->add_option("--class", c.pclass, "permissible blocks")
        ->check(CLI::IsMember({"biconnected", "cliques", "cycles"}));
    sub->add_option("--d", c.d, "block size bound");
    if (with_k) sub->add_option("--k", c.k, "deletion budget");
    sub->add_option("--output,-o", c.output, "output mode")->check(CLI::IsMember({"human", "structured"}));
    sub->add_option("--seed", c.seed, "seed");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bounded P-block vertex deletion solvers", "bpbvd"};
    app.require_subcommand(1);

    RunConfig solve_cfg, approx_cfg, kernel_cfg;
    auto* solve_cmd = app.add_subcommand("solve", "decide an instance");
    add_instance_flags(solve_cmd, solve_cfg, true);
    solve_cmd->add_option("--solver", solve_cfg.solver, "solver")
        ->check(CLI::IsMember({"branch", "compress", "kernel-branch", "brute", "approx"}));
    solve_cmd->add_option("--trace", solve_cfg.trace_path, "kernel trace path (kernel-branch)");

    auto* approx_cmd = app.add_subcommand("approx", "approximate minimum solution");
    add_instance_flags(approx_cmd, approx_cfg, false);

    auto* kernel_cmd = app.add_subcommand("kernelize", "apply the reduction rules");
    add_instance_flags(kernel_cmd, kernel_cfg, true);
    kernel_cmd->add_option("--trace", kernel_cfg.trace_path, "write the rule trace here");
    kernel_cmd->add_option("--kernel-out", kernel_cfg.kernel_out, "write the reduced edge list here");

    DifftestArgs dt;
    auto* diff_cmd = app.add_subcommand("difftest", "compare solvers with the brute-force oracle");
    diff_cmd->add_option("--trials", dt.trials, "number of trials");
    diff_cmd->add_option("--n", dt.n, "vertices per graph");
    diff_cmd->add_option("--seed", dt.seed, "base seed");
    diff_cmd->add_option("--solvers", dt.solvers, "solvers to compare")->delimiter(',');
    diff_cmd->add_option("--classes", dt.classes, "classes to draw from")->delimiter(',');
    diff_cmd->add_option("--d-min", dt.d_min, "smallest d");
    diff_cmd->add_option("--d-max", dt.d_max, "largest d");
    diff_cmd->add_option("--k-max", dt.k_max, "largest k");
    diff_cmd->add_option("--report", dt.report_path, "write the per-trial report here");
    diff_cmd->add_flag("--inject-bug", dt.inject_bug, "negate the first solver");
    diff_cmd->add_flag("--serial", dt.serial, "run trials on one thread");
    diff_cmd->add_option("--output,-o", dt.output, "output mode")->check(CLI::IsMember({"human", "structured"}));

    GenArgs ga;
    auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
    gen_cmd->add_option("--family", ga.family, "random, kxk or structured")
        ->check(CLI::IsMember({"random", "kxk", "structured"}));
    gen_cmd->add_option("--n", ga.n, "vertices or shape size");
    gen_cmd->add_option("--p", ga.p, "edge probability");
    gen_cmd->add_option("--seed", ga.seed, "seed");
    gen_cmd->add_option("--shape", ga.shape, "path, cycle, clique, star, diamond, bowtie, chain");
    gen_cmd->add_option("--grid-k", ga.grid_k, "grid size for kxk");
    gen_cmd->add_flag("--plant", ga.plant, "plant a column clique (kxk)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitRan : kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(solve_cfg, in, out);
        if (approx_cmd->parsed()) return cmd_approx(approx_cfg, in, out);
        if (kernel_cmd->parsed()) return cmd_kernelize(kernel_cfg, in, out);
        if (diff_cmd->parsed()) return cmd_difftest(dt, out);
        if (gen_cmd->parsed()) return cmd_gen(ga, out);
    } catch (const ParseError& e) {
        err << "error: input " << e.what() << '\n';
        return kExitFailure;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace bpbvd::cli
