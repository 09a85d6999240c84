#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bpbvd/graph.hpp"
#include "bpbvd/problem.hpp"

namespace bpbvd {

enum class GeneratorFamily { Random, KxkReduction, Structured };

struct GeneratorSpec {
    GeneratorFamily family = GeneratorFamily::Random;
    std::size_t n = 10;         // Random: vertices; Structured: size argument
    double p = 0.4;             // Random: edge probability; Kxk: cross-column edge probability
    std::string shape;          // Structured: shape name
    int grid_k = 3;             // Kxk
    bool plant = false;         // Kxk
    std::uint64_t seed = 0;
};

/// Same spec, same graph. For Kxk the grid is generated and then reduced.
Graph generate(const GeneratorSpec& spec);

/// Verdict of one solver: nullopt when it does not apply to the instance,
/// otherwise the returned solution (itself nullopt for No).
using SolverOutcome = std::optional<std::optional<VertexSet>>;
using SolverFn = std::function<SolverOutcome(const Instance&)>;

struct NamedSolver {
    std::string name;
    SolverFn run;
};

/// branch, compress (cliques and cycles only), kernel-branch.
std::vector<NamedSolver> default_solvers();
/// Reports the opposite verdict of `base`; used to check the harness catches bugs.
NamedSolver negated_solver(NamedSolver base);
NamedSolver solver_by_name(const std::string& name);

struct SolverVerdict {
    std::string solver;
    bool applicable = false;
    bool yes = false;
    bool valid = true;  // a returned solution passed validation
};

struct TrialRecord {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    std::uint64_t hash = 0;
    std::string pclass;
    int d = 0;
    int k = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    bool oracle_yes = false;
    std::vector<SolverVerdict> verdicts;
    bool agree = true;
};

struct DifftestReport {
    std::vector<TrialRecord> trials;

    std::size_t mismatches() const;
    bool all_agree() const { return mismatches() == 0; }
    /// One line per trial, then a summary line.
    std::string serialize() const;
};

struct DifftestConfig {
    std::size_t trials = 0;
    std::size_t n = 10;
    std::vector<double> edge_probabilities{0.2, 0.4, 0.6};
    std::vector<std::string> classes{"biconnected", "cliques", "cycles"};
    int d_min = 3, d_max = 5;
    int k_min = 0, k_max = 4;
    std::uint64_t seed = 0;
    bool parallel = true;
    std::size_t oracle_cap = 14;
};

/// Trial i draws its graph and parameters from a stream seeded by (seed, i), runs
/// every applicable solver and the oracle, and records the verdicts.
DifftestReport differential_run(const DifftestConfig& config, const std::vector<NamedSolver>& solvers);

/// Seed of trial i.
std::uint64_t trial_seed(std::uint64_t base, std::size_t index);

}  // namespace bpbvd
