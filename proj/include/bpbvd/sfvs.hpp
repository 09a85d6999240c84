#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bpbvd/clustering.hpp"
#include "bpbvd/graph.hpp"
#include "bpbvd/problem.hpp"

namespace bpbvd {

/// Split vertex v(x, H): the copy of external vertex `original` inside cluster `cluster`.
struct SplitVertex {
    Vertex split;
    Vertex original;
    std::size_t cluster;
};

/// Subset Feedback Vertex Set instance: remove at most k vertices so that no cycle
/// of `graph` passes through a terminal.
struct SfvsInstance {
    Graph graph;
    VertexSet terminals;
    int k = 0;
    /// Ids below this bound are vertices of the source graph.
    Vertex source_bound = 0;
    std::vector<SplitVertex> splits;

    bool is_split(Vertex v) const { return v >= source_bound; }
    const SplitVertex& split_info(Vertex v) const { return splits.at(v - source_bound); }
};

/// Each external vertex x loses its edges and gets one split vertex per cluster H
/// containing it, joined to x and to x's neighbours in H (external neighbours are
/// replaced by their own split copies in H).
SfvsInstance build_sfvs_instance(const Graph& g, const ClusterSet& cs, int k);

struct SfvsOptions {
    /// Return the lexicographically smallest minimum solution. Costs extra
    /// feasibility searches.
    bool lexicographic = true;
};

/// Minimum solution of size at most inst.k, or infeasible.
SolveResult solve_sfvs(const SfvsInstance& inst, SfvsOptions opts = {});

/// S = (S' ∩ V(G)) plus every external vertex with a split copy in S'.
VertexSet lift_solution(const SfvsInstance& inst, const VertexSet& s_prime);

/// Bounded search: a set of at most `budget` vertices avoiding `forbidden` that
/// meets every cycle through a terminal, or nullopt.
std::optional<VertexSet> sfvs_search(const Graph& g, const VertexSet& terminals, int budget,
                                     const VertexSet& forbidden, std::uint64_t* nodes = nullptr);

/// No cycle of g - s passes through a terminal.
bool hits_terminal_cycles(const Graph& g, const VertexSet& terminals, const VertexSet& s);

}  // namespace bpbvd
