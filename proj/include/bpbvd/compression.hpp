#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "bpbvd/graph.hpp"
#include "bpbvd/problem.hpp"

namespace bpbvd {

enum class TargetClass {
    CompleteBlock,  // every block a clique on at most d vertices
    Cactus,         // every block an edge or a cycle on at most d vertices
};

/// Disjoint-compression subproblem: find R with R ∩ S = ∅ and |R| <= k such that
/// G - R lies in the target class. G - S is assumed to lie in it already.
struct DisjointInstance {
    Graph graph;
    VertexSet forbidden;  // S
    int d = 1;
    int k = 0;
};

struct CompressionStats {
    std::uint64_t compressions = 0;    // outer compression steps
    std::uint64_t disjoint_calls = 0;  // intersections tried
    std::uint64_t branch_nodes = 0;
    std::uint64_t reductions = 0;
    /// Reduction that did not shrink V(G) - S, or branch that did not lower k + cc(S).
    std::uint64_t measure_violations = 0;
    /// Structural property expected once a rule tier is exhausted failed to hold.
    std::uint64_t claim_violations = 0;
    /// Exhaustive two-way branches taken when no rule applied.
    std::uint64_t fallback_branches = 0;
    std::map<std::string, std::uint64_t> rule_counts;

    void merge(const CompressionStats& o);
};

struct CompressionOptions {
    /// Return a minimum-size solution by trying budgets 0..k in turn.
    bool minimize = true;
    /// Try the intersections of one compression step in parallel.
    bool parallel = false;
};

struct CompressionResult {
    std::optional<VertexSet> solution;
    CompressionStats stats;
    bool feasible() const { return solution.has_value(); }
};

bool in_target_class(const Graph& g, TargetClass target, int d);

CompressionResult solve_complete_block(const Graph& g, int d, int k, CompressionOptions opts = {});
CompressionResult solve_cactus(const Graph& g, int d, int k, CompressionOptions opts = {});

/// Returns R or nullopt. Statistics are accumulated into `stats` when given.
std::optional<VertexSet> disjoint_complete_block(const DisjointInstance& di, CompressionStats* stats = nullptr);
std::optional<VertexSet> disjoint_cactus(const DisjointInstance& di, CompressionStats* stats = nullptr);

}  // namespace bpbvd
