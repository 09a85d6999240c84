#pragma once

#include <cstdint>
#include <optional>

#include "bpbvd/graph.hpp"
#include "bpbvd/pclass.hpp"

namespace bpbvd {

/// (G, P, d, k): delete at most k vertices so that G - S lies in Phi_{P ∩ B_{2,d}}.
struct Instance {
    Graph graph;
    PClass pclass = PClass::all_biconnected();
    int d = 1;
    int k = 0;
};

struct SolveStats {
    std::uint64_t branch_nodes = 0;
    std::uint64_t leaves = 0;
};

/// Outcome of a solver run. An empty `solution` means the instance is infeasible.
struct SolveResult {
    std::optional<VertexSet> solution;
    SolveStats stats;

    bool feasible() const { return solution.has_value(); }
};

/// |S| <= k and G - S in Phi_{P ∩ B_{2,d}}.
bool is_valid_solution(const Instance& inst, const VertexSet& s);

}  // namespace bpbvd
