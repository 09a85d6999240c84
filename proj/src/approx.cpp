#include <algorithm>

#include "bpbvd/blocks.hpp"
#include "bpbvd/clustering.hpp"
#include "bpbvd/kernel.hpp"
#include "bpbvd/pclass.hpp"
#include "bpbvd/sfvs.hpp"

namespace bpbvd {

namespace {

ApproxResult matching_cover(const Graph& g) {
    ApproxResult out;
    std::vector<char> used(g.id_bound(), 0);
    for (auto [u, v] : g.edges()) {
        if (used[u] || used[v]) continue;
        used[u] = used[v] = 1;
        out.solution.push_back(u);
        out.solution.push_back(v);
        ++out.lower_bound;
    }
    normalize(out.solution);
    out.ratio_certified = true;
    return out;
}

// Repeatedly takes the vertex lying in the most terminal-carrying blocks of size >= 3.
VertexSet greedy_sfvs(const Graph& g, const VertexSet& terminals) {
    VertexSet s;
    while (!hits_terminal_cycles(g, terminals, s)) {
        Graph h = g.without(s);
        auto bd = block_decomposition(h);
        std::vector<std::size_t> score(g.id_bound(), 0);
        for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
            const auto& blk = bd.blocks[b];
            if (blk.size() < 3 || set_intersection(blk, terminals).empty()) continue;
            for (Vertex x : blk) ++score[x];
        }
        Vertex best = 0;
        std::size_t best_score = 0, best_deg = 0;
        for (Vertex x : h.vertices()) {
            if (score[x] == 0) continue;
            if (score[x] > best_score || (score[x] == best_score && h.degree(x) > best_deg)) {
                best = x;
                best_score = score[x];
                best_deg = h.degree(x);
            }
        }
        s.push_back(best);
        normalize(s);
    }
    return s;
}

}  // namespace

ApproxResult approximate_detailed(const Graph& g, const PClass& p, int d, int exact_cap) {
    if (d < 1) throw std::invalid_argument("approximate: d must be positive");
    if (d == 1 || p.degenerate()) return matching_cover(g);

    ApproxResult out;
    Graph rest = g;
    while (auto obs = find_obstruction(rest, p, d)) {
        ++out.obstructions;
        for (Vertex v : obs->vertices) out.solution.push_back(v);
        rest.remove_vertices(obs->vertices);
    }

    auto cs = clusters_unchecked(rest, p, d);
    auto inst = build_sfvs_instance(rest, cs, exact_cap);
    VertexSet s_prime;
    auto exact = solve_sfvs(inst, SfvsOptions{false});
    if (exact.solution) {
        s_prime = *exact.solution;
        out.ratio_certified = true;
    } else {
        s_prime = greedy_sfvs(inst.graph, inst.terminals);
    }
    const VertexSet lifted = lift_solution(inst, s_prime);
    out.solution.insert(out.solution.end(), lifted.begin(), lifted.end());
    normalize(out.solution);

    out.lower_bound = out.obstructions;
    if (out.ratio_certified) out.lower_bound = std::max(out.lower_bound, s_prime.size());
    if (!out.solution.empty()) out.lower_bound = std::max<std::size_t>(out.lower_bound, 1);
    return out;
}

VertexSet approximate(const Graph& g, const PClass& p, int d) { return approximate_detailed(g, p, d).solution; }

}  // namespace bpbvd
