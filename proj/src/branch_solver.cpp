#include "bpbvd/branch_solver.hpp"

#include "bpbvd/clustering.hpp"
#include "bpbvd/sfvs.hpp"

namespace bpbvd {

namespace {

class BranchSearch {
public:
    explicit BranchSearch(const Instance& inst) : inst_(inst) {}

    SolveResult run() {
        VertexSet chosen;
        visit(inst_.graph, chosen);
        SolveResult r;
        r.stats = stats_;
        if (found_) {
            normalize(best_);
            r.solution = best_;
        }
        return r;
    }

private:
    int limit() const { return found_ ? std::min<int>(inst_.k, static_cast<int>(best_.size()) - 1) : inst_.k; }

    void visit(const Graph& g, VertexSet& chosen) {
        ++stats_.branch_nodes;
        const int depth = static_cast<int>(chosen.size());
        if (auto ob = find_obstruction(g, inst_.pclass, inst_.d)) {
            for (Vertex v : ob->vertices) {
                if (depth + 1 > limit()) return;
                chosen.push_back(v);
                visit(g.without(v), chosen);
                chosen.pop_back();
            }
            return;
        }
        ++stats_.leaves;
        int budget = limit() - depth;
        if (budget < 0) return;
        auto cs = clusters_unchecked(g, inst_.pclass, inst_.d);
        auto sf = build_sfvs_instance(g, cs, budget);
        auto res = solve_sfvs(sf, {.lexicographic = false});
        if (!res.feasible()) return;
        auto lifted = lift_solution(sf, *res.solution);
        best_ = chosen;
        best_.insert(best_.end(), lifted.begin(), lifted.end());
        normalize(best_);
        found_ = true;
    }

    const Instance& inst_;
    SolveStats stats_;
    VertexSet best_;
    bool found_ = false;
};

struct CoverSearch {
    SolveStats stats;
    VertexSet best;
    bool found = false;
    int k;

    void visit(const Graph& g, VertexSet& chosen) {
        ++stats.branch_nodes;
        const int cap = found ? std::min<int>(k, static_cast<int>(best.size()) - 1) : k;
        auto edges = g.edges();
        if (edges.empty()) {
            ++stats.leaves;
            if (static_cast<int>(chosen.size()) <= cap) {
                best = chosen;
                normalize(best);
                found = true;
            }
            return;
        }
        if (static_cast<int>(chosen.size()) + 1 > cap) return;
        for (Vertex v : {edges.front().u, edges.front().v}) {
            if (found && static_cast<int>(chosen.size()) + 1 > std::min<int>(k, static_cast<int>(best.size()) - 1))
                return;
            chosen.push_back(v);
            visit(g.without(v), chosen);
            chosen.pop_back();
        }
    }
};

}  // namespace

SolveResult solve_vertex_cover(const Graph& g, int k) {
    CoverSearch search;
    search.k = k;
    if (k >= 0) {
        VertexSet chosen;
        search.visit(g, chosen);
    }
    SolveResult r;
    r.stats = search.stats;
    if (search.found) r.solution = search.best;
    return r;
}

SolveResult solve(const Instance& inst) {
    if (inst.d < 1) throw std::invalid_argument("solve: d must be positive");
    if (inst.k < 0) return {};
    if (inst.d == 1 || inst.pclass.degenerate()) return solve_vertex_cover(inst.graph, inst.k);
    return BranchSearch(inst).run();
}

std::uint64_t count_branch_nodes(const Instance& inst) { return solve(inst).stats.branch_nodes; }

std::uint64_t branch_node_bound(int d, int k) {
    std::uint64_t total = 0, term = 1;
    const std::uint64_t factor = d >= 1 ? static_cast<std::uint64_t>(2 * d - 2) : 0;
    for (int i = 0; i <= k; ++i) {
        total += term;
        term *= factor;
    }
    return total;
}

}  // namespace bpbvd
