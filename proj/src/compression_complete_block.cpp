#include <algorithm>

#include "bpbvd/compression.hpp"
#include "compression_detail.hpp"

namespace bpbvd {

namespace {

using detail::DisjointState;
using detail::Step;
using detail::StepKind;

constexpr TargetClass kTarget = TargetClass::CompleteBlock;

VertexSet s_neighbors(const DisjointState& st, Vertex v) {
    VertexSet out;
    for (Vertex w : st.g.neighbors(v))
        if (st.s(w)) out.push_back(w);
    return out;
}

bool intersects(const std::vector<int>& a, const std::vector<int>& b) {
    for (int x : a)
        if (std::binary_search(b.begin(), b.end(), x)) return true;
    return false;
}

Step reduced(const char* rule) { return {StepKind::Reduced, rule, {}}; }

// Pushes a child with `add` moved into S, unless that breaks G[S].
void push_absorbed(Step& step, const DisjointState& st, const VertexSet& add, int d) {
    if (!detail::s_plus_in_class(st, add, kTarget, d)) return;
    DisjointState child = st;
    for (Vertex v : add) child.add_to_s(v);
    step.children.push_back(std::move(child));
}

void push_deleted(Step& step, const DisjointState& st, const VertexSet& del) {
    DisjointState child = st;
    for (Vertex v : del) child.delete_to_r(v);
    step.children.push_back(std::move(child));
}

// Outside vertices see nothing, one vertex, or a whole block of G[S].
bool neighbourhoods_well_formed(const DisjointState& st, const VertexSet& outside) {
    VertexSet in_s;
    for (Vertex v : st.g.vertices())
        if (st.s(v)) in_s.push_back(v);
    auto bd = block_decomposition(st.g.induced(in_s));
    for (Vertex u : outside) {
        auto ns = s_neighbors(st, u);
        if (ns.size() <= 1) continue;
        if (std::find(bd.blocks.begin(), bd.blocks.end(), ns) == bd.blocks.end()) return false;
    }
    return true;
}

Step complete_block_step(DisjointState& st, int d) {
    const VertexSet outside = st.outside();

    for (Vertex u : outside)
        if (st.g.degree(u) <= 1) {
            st.drop(u);
            return reduced("cb.low-degree");
        }

    for (Vertex u : outside)
        if (!detail::s_plus_in_class(st, {u}, kTarget, d)) {
            st.delete_to_r(u);
            return reduced("cb.direct-obstruction");
        }

    auto comp = detail::s_components(st);
    std::vector<std::vector<int>> touched(st.g.id_bound());
    for (Vertex u : outside) touched[u] = detail::touched_components(st, comp, u);

    // A pair can only close a new block through S when both reach a common component.
    for (std::size_t i = 0; i < outside.size(); ++i)
        for (std::size_t j = i + 1; j < outside.size(); ++j) {
            Vertex u = outside[i], v = outside[j];
            if (!st.g.adjacent(u, v) && !intersects(touched[u], touched[v])) continue;
            if (detail::s_plus_in_class(st, {u, v}, kTarget, d)) continue;
            Step step{StepKind::Branched, "cb.pair-obstruction", {}};
            push_deleted(step, st, {u});
            push_deleted(step, st, {v});
            return step;
        }

    for (Vertex u : outside)
        if (touched[u].size() >= 2) {
            Step step{StepKind::Branched, "cb.joins-components", {}};
            push_deleted(step, st, {u});
            push_absorbed(step, st, {u}, d);
            return step;
        }

    for (Vertex u : outside)
        for (Vertex v : st.g.neighbors(u)) {
            if (v <= u || st.s(v) || touched[u].empty() || touched[v].empty()) continue;
            if (touched[u] == touched[v] && touched[u].size() == 1) continue;
            Step step{StepKind::Branched, "cb.edge-joins-components", {}};
            push_deleted(step, st, {u});
            push_deleted(step, st, {v});
            push_absorbed(step, st, {u, v}, d);
            return step;
        }

    Step none;
    if (!neighbourhoods_well_formed(st, outside)) none.claim_violation = true;

    Graph h = st.g.induced(outside);
    auto bd = block_decomposition(h);
    std::size_t leaf = bd.blocks.size();
    for (std::size_t b = 0; b < bd.blocks.size(); ++b)
        if (bd.is_leaf_block(b)) {
            leaf = b;
            break;
        }
    if (leaf == bd.blocks.size()) {
        none.claim_violation = true;
        return none;
    }
    const VertexSet& c = bd.blocks[leaf];
    const VertexSet cut = bd.block_cuts[leaf];
    const VertexSet c_prime = set_difference(c, cut);

    VertexSet c1, c2;
    for (Vertex x : c) (detail::is_red(st, x) ? c1 : c2).push_back(x);
    const VertexSet red_prime = set_intersection(c1, c_prime);

    if (red_prime.empty()) {
        for (Vertex x : c_prime) st.drop(x);
        return reduced("cb.leaf-without-red");
    }
    if (c1.size() == 1) {
        Vertex w = c1.front();
        VertexSet add = cut.empty() ? c : VertexSet{w};
        if (!detail::s_plus_in_class(st, add, kTarget, d)) {
            none.claim_violation = true;
            return none;
        }
        for (Vertex x : add) st.add_to_s(x);
        return reduced(cut.empty() ? "cb.unique-red-component" : "cb.unique-red-leaf");
    }

    const VertexSet a = s_neighbors(st, c1.front());
    for (Vertex x : c1)
        if (s_neighbors(st, x) != a) {
            none.claim_violation = true;
            return none;
        }

    if (c2.empty()) {
        const long excess = static_cast<long>(c_prime.size()) - d + static_cast<long>(a.size());
        const std::size_t s = static_cast<std::size_t>(std::max(0L, excess));
        VertexSet keep(c_prime.begin() + static_cast<long>(std::min(s, c_prime.size())), c_prime.end());
        if (!detail::s_plus_in_class(st, keep, kTarget, d)) {
            none.claim_violation = true;
            return none;
        }
        for (std::size_t i = 0; i < s && i < c_prime.size(); ++i) st.delete_to_r(c_prime[i]);
        for (Vertex x : keep) st.add_to_s(x);
        return reduced("cb.twin-leaf");
    }

    Step step{StepKind::Branched, "cb.split-leaf", {}};
    push_deleted(step, st, c2);
    Vertex x = red_prime.front();
    VertexSet rest = c1;
    rest.erase(std::find(rest.begin(), rest.end(), x));
    push_deleted(step, st, rest);
    return step;
}

}  // namespace

std::optional<VertexSet> disjoint_complete_block(const DisjointInstance& di, CompressionStats* stats) {
    CompressionStats local;
    CompressionStats& out = stats ? *stats : local;
    auto st = detail::make_state(di);
    if (!detail::s_plus_in_class(st, {}, kTarget, di.d)) return std::nullopt;
    const int d = di.d;
    return detail::run_disjoint(std::move(st), kTarget, d, out,
                                [d](DisjointState& s) { return complete_block_step(s, d); });
}

}  // namespace bpbvd
