#include "bpbvd/difftest.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "bpbvd/branch_solver.hpp"
#include "bpbvd/compression.hpp"
#include "bpbvd/generators.hpp"
#include "bpbvd/kernel.hpp"
#include "bpbvd/oracle.hpp"
#include "bpbvd/pclass.hpp"

namespace bpbvd {

Graph generate(const GeneratorSpec& spec) {
    switch (spec.family) {
        case GeneratorFamily::Random:
            return random_graph(spec.n, spec.p, spec.seed);
        case GeneratorFamily::KxkReduction: {
            Graph grid = random_grid(spec.grid_k, spec.p, spec.plant, spec.seed);
            return gen_kxk_reduction(grid, spec.grid_k).graph;
        }
        case GeneratorFamily::Structured:
            return structured(spec.shape, spec.n);
    }
    throw std::invalid_argument("generate: unknown family");
}

namespace {

SolverOutcome run_branch(const Instance& inst) { return solve(inst).solution; }

SolverOutcome run_compress(const Instance& inst) {
    switch (inst.pclass.kind()) {
        case PClassKind::Cliques:
            return solve_complete_block(inst.graph, inst.d, inst.k).solution;
        case PClassKind::CyclesAndK2:
            return solve_cactus(inst.graph, inst.d, inst.k).solution;
        default:
            return std::nullopt;
    }
}

SolverOutcome run_kernel_branch(const Instance& inst) {
    if (inst.d < 2 || inst.pclass.degenerate()) return std::nullopt;
    auto kr = kernelize(inst);
    if (kr.is_no()) return std::optional<VertexSet>{};
    auto r = solve(kr.instance);
    if (!r.solution) return std::optional<VertexSet>{};
    return std::optional<VertexSet>{lift_kernel_solution(inst, kr, *r.solution)};
}

std::string hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace

std::vector<NamedSolver> default_solvers() {
    return {{"branch", run_branch}, {"compress", run_compress}, {"kernel-branch", run_kernel_branch}};
}

NamedSolver solver_by_name(const std::string& name) {
    for (auto& s : default_solvers())
        if (s.name == name) return s;
    throw std::invalid_argument("unknown solver: " + name);
}

NamedSolver negated_solver(NamedSolver base) {
    auto inner = base.run;
    return {base.name + "-negated", [inner](const Instance& inst) -> SolverOutcome {
                auto r = inner(inst);
                if (!r) return r;
                if (*r) return std::optional<VertexSet>{};
                // Claim Yes with the whole vertex set, which fails validation unless k is large.
                return std::optional<VertexSet>{inst.graph.vertices()};
            }};
}

std::uint64_t trial_seed(std::uint64_t base, std::size_t index) {
    SplitMix64 mix(base ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1)));
    return mix.next();
}

std::size_t DifftestReport::mismatches() const {
    std::size_t n = 0;
    for (const auto& t : trials) n += !t.agree;
    return n;
}

std::string DifftestReport::serialize() const {
    std::ostringstream out;
    for (const auto& t : trials) {
        out << "trial=" << t.index << " seed=" << t.seed << " hash=" << hex(t.hash) << " class=" << t.pclass
            << " d=" << t.d << " k=" << t.k << " n=" << t.n << " m=" << t.m
            << " oracle=" << (t.oracle_yes ? "yes" : "no");
        for (const auto& v : t.verdicts) {
            out << ' ' << v.solver << '=';
            if (!v.applicable)
                out << "n/a";
            else
                out << (v.yes ? "yes" : "no") << (v.valid ? "" : "-invalid");
        }
        out << " agree=" << (t.agree ? 1 : 0) << '\n';
    }
    out << "summary trials=" << trials.size() << " mismatches=" << mismatches()
        << (all_agree() ? " all agree" : " DISAGREEMENT") << '\n';
    return out.str();
}

DifftestReport differential_run(const DifftestConfig& config, const std::vector<NamedSolver>& solvers) {
    if (config.edge_probabilities.empty() || config.classes.empty() || config.d_min > config.d_max ||
        config.k_min > config.k_max)
        throw std::invalid_argument("differential_run: empty parameter range");
    DifftestReport report;
    report.trials.resize(config.trials);

    auto run_trial = [&](std::size_t i) {
        TrialRecord& t = report.trials[i];
        t.index = i;
        t.seed = trial_seed(config.seed, i);
        SplitMix64 rng(t.seed);
        const double p = config.edge_probabilities[rng.below(config.edge_probabilities.size())];
        t.pclass = config.classes[rng.below(config.classes.size())];
        t.d = config.d_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(config.d_max - config.d_min + 1)));
        t.k = config.k_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(config.k_max - config.k_min + 1)));
        Graph g = random_graph(config.n, p, rng.next());
        t.hash = instance_hash(g);
        t.n = g.num_vertices();
        t.m = g.num_edges();

        const Instance inst{std::move(g), class_by_name(t.pclass), t.d, t.k};
        t.oracle_yes = brute_force(inst, config.oracle_cap).feasible();
        for (const auto& s : solvers) {
            SolverVerdict v;
            v.solver = s.name;
            auto out = s.run(inst);
            v.applicable = out.has_value();
            if (v.applicable) {
                v.yes = out->has_value();
                if (v.yes) v.valid = is_valid_solution(inst, **out);
                if (v.yes != t.oracle_yes || !v.valid) t.agree = false;
            }
            t.verdicts.push_back(std::move(v));
        }
    };

    const long count = static_cast<long>(config.trials);
    if (config.parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < count; ++i) run_trial(static_cast<std::size_t>(i));
    } else {
        for (long i = 0; i < count; ++i) run_trial(static_cast<std::size_t>(i));
    }
    return report;
}

}  // namespace bpbvd
