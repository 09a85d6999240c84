#include "bpbvd/compression.hpp"

#include <algorithm>
#include <stdexcept>

#include "bpbvd/branch_solver.hpp"
#include "bpbvd/pclass.hpp"
#include "compression_detail.hpp"

namespace bpbvd {

void CompressionStats::merge(const CompressionStats& o) {
    compressions += o.compressions;
    disjoint_calls += o.disjoint_calls;
    branch_nodes += o.branch_nodes;
    reductions += o.reductions;
    measure_violations += o.measure_violations;
    claim_violations += o.claim_violations;
    fallback_branches += o.fallback_branches;
    for (const auto& [rule, n] : o.rule_counts) rule_counts[rule] += n;
}

bool in_target_class(const Graph& g, TargetClass target, int d) {
    return is_in_phi(g, target == TargetClass::CompleteBlock ? PClass::cliques() : PClass::cycles_and_k2(), d);
}

namespace detail {

VertexSet DisjointState::outside() const {
    VertexSet out;
    for (Vertex v : g.vertices())
        if (!s(v)) out.push_back(v);
    return out;
}

std::size_t DisjointState::outside_count() const {
    std::size_t n = 0;
    for (Vertex v : g.vertices())
        if (!s(v)) ++n;
    return n;
}

void DisjointState::delete_to_r(Vertex v) {
    g.remove_vertex(v);
    r.push_back(v);
    --k;
}

void DisjointState::drop(Vertex v) { g.remove_vertex(v); }

void DisjointState::add_to_s(Vertex v) {
    if (v >= in_s.size()) in_s.resize(v + 1, 0);
    in_s[v] = 1;
}

std::vector<int> s_components(const DisjointState& st, int* count) {
    std::vector<int> comp(st.g.id_bound(), -1);
    int c = 0;
    std::vector<Vertex> stack;
    for (Vertex v : st.g.vertices()) {
        if (!st.s(v) || comp[v] >= 0) continue;
        comp[v] = c;
        stack.assign(1, v);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : st.g.neighbors(u))
                if (st.s(w) && comp[w] < 0) {
                    comp[w] = c;
                    stack.push_back(w);
                }
        }
        ++c;
    }
    if (count) *count = c;
    return comp;
}

int measure(const DisjointState& st) {
    int cc = 0;
    s_components(st, &cc);
    return st.k + cc;
}

bool s_plus_in_class(const DisjointState& st, const VertexSet& extra, TargetClass target, int d) {
    VertexSet keep;
    for (Vertex v : st.g.vertices())
        if (st.s(v) || set_contains(extra, v)) keep.push_back(v);
    return in_target_class(st.g.induced(keep), target, d);
}

std::size_t s_degree(const DisjointState& st, Vertex v) {
    std::size_t n = 0;
    for (Vertex w : st.g.neighbors(v))
        if (st.s(w)) ++n;
    return n;
}

bool is_red(const DisjointState& st, Vertex v) { return !st.s(v) && s_degree(st, v) > 0; }

std::vector<int> touched_components(const DisjointState& st, const std::vector<int>& comp, Vertex v) {
    std::vector<int> out;
    for (Vertex w : st.g.neighbors(v))
        if (st.s(w)) out.push_back(comp[w]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Graph outside_graph(const DisjointState& st) { return st.g.induced(st.outside()); }

DisjointState make_state(const DisjointInstance& di) {
    DisjointState st;
    st.g = di.graph;
    st.in_s.assign(di.graph.id_bound(), 0);
    for (Vertex v : di.forbidden)
        if (di.graph.contains(v)) st.in_s[v] = 1;
    st.k = di.k;
    return st;
}

std::optional<VertexSet> run_disjoint(DisjointState st, TargetClass target, int d,
                                      CompressionStats& stats, const RuleEngine& rules) {
    ++stats.branch_nodes;
    while (true) {
        if (st.k < 0) return std::nullopt;
        const std::size_t before = st.outside_count();
        if (before == 0) {
            normalize(st.r);
            return st.r;
        }
        const int mu = measure(st);
        Step step = rules(st);
        if (step.claim_violation) ++stats.claim_violations;
        if (step.kind == StepKind::Reduced) {
            ++stats.reductions;
            ++stats.rule_counts[step.rule];
            if (st.outside_count() >= before) ++stats.measure_violations;
            continue;
        }
        if (step.kind == StepKind::Branched) {
            ++stats.rule_counts[step.rule];
            for (auto& child : step.children) {
                if (measure(child) >= mu) ++stats.measure_violations;
                if (auto r = run_disjoint(std::move(child), target, d, stats, rules)) return r;
            }
            return std::nullopt;
        }

        auto rest = st.outside();
        if (s_plus_in_class(st, rest, target, d)) {
            ++stats.rule_counts["absorb"];
            normalize(st.r);
            return st.r;
        }
        ++stats.claim_violations;
        ++stats.fallback_branches;
        Vertex u = rest.front();
        DisjointState del = st;
        del.delete_to_r(u);
        if (auto r = run_disjoint(std::move(del), target, d, stats, rules)) return r;
        if (!s_plus_in_class(st, {u}, target, d)) return std::nullopt;
        st.add_to_s(u);
        return run_disjoint(std::move(st), target, d, stats, rules);
    }
}

}  // namespace detail

namespace {

using DisjointFn = std::optional<VertexSet> (*)(const DisjointInstance&, CompressionStats*);

// One compression step: S is a solution of size k+1 for g; find one of size <= k.
std::optional<VertexSet> compress(const Graph& g, const VertexSet& s, int d, int k, DisjointFn disjoint,
                                  TargetClass target, bool parallel, CompressionStats& stats) {
    ++stats.compressions;
    const std::size_t masks = std::size_t{1} << s.size();

    auto attempt = [&](std::size_t mask, CompressionStats& local) -> std::optional<VertexSet> {
        VertexSet inter, keep;
        for (std::size_t i = 0; i < s.size(); ++i) (mask >> i & 1 ? inter : keep).push_back(s[i]);
        if (static_cast<int>(inter.size()) > k) return std::nullopt;
        Graph h = g.without(inter);
        if (!in_target_class(h.induced(keep), target, d)) return std::nullopt;
        ++local.disjoint_calls;
        auto r = disjoint(DisjointInstance{std::move(h), keep, d, k - static_cast<int>(inter.size())}, &local);
        if (!r) return std::nullopt;
        return set_union(inter, *r);
    };

    if (!parallel) {
        for (std::size_t mask = 0; mask < masks; ++mask)
            if (auto r = attempt(mask, stats)) return r;
        return std::nullopt;
    }

    std::vector<std::optional<VertexSet>> found(masks);
    std::vector<CompressionStats> local(masks);
    const long count = static_cast<long>(masks);
#pragma omp parallel for schedule(dynamic)
    for (long mask = 0; mask < count; ++mask) found[mask] = attempt(static_cast<std::size_t>(mask), local[mask]);
    for (const auto& l : local) stats.merge(l);
    for (auto& r : found)
        if (r) return r;
    return std::nullopt;
}

CompressionResult solve_with_budget(const Graph& g, int d, int k, DisjointFn disjoint, TargetClass target,
                                    bool parallel, CompressionStats& stats) {
    CompressionResult res;
    if (k < 0) return res;
    VertexSet present, s;
    for (Vertex v : g.vertices()) {
        present.push_back(v);
        Graph gi = g.induced(present);
        if (in_target_class(gi.without(s), target, d)) continue;
        s.push_back(v);
        if (static_cast<int>(s.size()) <= k) continue;
        auto smaller = compress(gi, s, d, k, disjoint, target, parallel, stats);
        if (!smaller) return res;
        s = std::move(*smaller);
    }
    res.solution = s;
    return res;
}

CompressionResult solve_target(const Graph& g, int d, int k, CompressionOptions opts, DisjointFn disjoint,
                               TargetClass target) {
    if (d < 1) throw std::invalid_argument("compression: d must be positive");
    CompressionResult out;
    if (k < 0) return out;
    for (int budget = opts.minimize ? 0 : k; budget <= k; ++budget) {
        auto r = solve_with_budget(g, d, budget, disjoint, target, opts.parallel, out.stats);
        if (r.solution) {
            out.solution = std::move(r.solution);
            break;
        }
    }
    return out;
}

}  // namespace

CompressionResult solve_complete_block(const Graph& g, int d, int k, CompressionOptions opts) {
    return solve_target(g, d, k, opts, &disjoint_complete_block, TargetClass::CompleteBlock);
}

CompressionResult solve_cactus(const Graph& g, int d, int k, CompressionOptions opts) {
    if (d >= 1 && d < 3) {
        // No cycle fits, so the class is forests (d = 2) or edgeless graphs (d = 1).
        auto r = solve(Instance{g, PClass::cycles_and_k2(), d, k});
        CompressionResult out;
        out.solution = std::move(r.solution);
        out.stats.branch_nodes = r.stats.branch_nodes;
        return out;
    }
    return solve_target(g, d, k, opts, &disjoint_cactus, TargetClass::Cactus);
}

}  // namespace bpbvd
