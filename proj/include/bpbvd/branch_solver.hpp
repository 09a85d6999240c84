#pragma once

#include <cstdint>

#include "bpbvd/problem.hpp"

namespace bpbvd {

/// Bounded search tree: branch on the vertices of an obstruction while one exists,
/// then solve the clustered remainder through Subset FVS. Returns a minimum-size
/// solution of size at most k.
///
/// d = 1 and degenerate classes forbid every edge and run as vertex cover.
SolveResult solve(const Instance& inst);

/// Nodes explored by `solve`.
std::uint64_t count_branch_nodes(const Instance& inst);

/// Upper bound on the branch tree size: sum over i = 0..k of (2d-2)^i.
std::uint64_t branch_node_bound(int d, int k);

/// Minimum vertex cover of size at most k by branching on edge endpoints.
SolveResult solve_vertex_cover(const Graph& g, int k);

}  // namespace bpbvd
