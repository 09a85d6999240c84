#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bpbvd/blocks.hpp"
#include "bpbvd/kernel.hpp"
#include "bpbvd/oracle.hpp"
#include "bpbvd/pclass.hpp"

namespace bpbvd {

namespace {

using Separators = std::vector<std::optional<VertexSet>>;

bool in_phi(const Instance& inst, const Graph& g) { return is_in_phi(g, inst.pclass, inst.d); }

std::uint64_t potential(const Graph& g) {
    std::uint64_t heavy = 0;
    for (auto [u, v] : g.edges()) heavy += g.degree(u) >= 3 && g.degree(v) >= 3;
    return g.num_vertices() + heavy;
}

TraceEntry entry(int rule, VertexSet verts, const Graph& g) {
    TraceEntry e;
    e.rule = rule;
    e.vertices = std::move(verts);
    e.size_after = g.num_vertices();
    return e;
}

VertexSet neighbourhood(const Graph& g, Vertex v) {
    auto nb = g.neighbors(v);
    return VertexSet(nb.begin(), nb.end());
}

// Components of G - (s_v + v).
std::vector<VertexSet> components_around(const Graph& g, Vertex v, const VertexSet& s_v) {
    VertexSet gone = s_v;
    gone.push_back(v);
    normalize(gone);
    return connected_components(g.without(gone));
}

bool with_v_in_phi(const Instance& inst, const VertexSet& comp, Vertex v) {
    VertexSet verts = comp;
    verts.push_back(v);
    normalize(verts);
    return in_phi(inst, inst.graph.induced(verts));
}

std::optional<TraceEntry> sunflower_one_with(Instance& inst, Separators& seps) {
    for (Vertex v : inst.graph.vertices()) {
        if (seps[v]) continue;
        inst.graph.remove_vertex(v);
        --inst.k;
        auto e = entry(4, {v}, inst.graph);
        e.to_solution = true;
        return e;
    }
    return std::nullopt;
}

bool disjoint_obstructions_with(const Instance& inst, const Separators& seps, Vertex* witness) {
    for (Vertex v : inst.graph.vertices()) {
        if (!seps[v]) continue;
        int bad = 0;
        for (const auto& c : components_around(inst.graph, v, *seps[v]))
            if (!in_phi(inst, inst.graph.induced(c))) ++bad;
        if (bad >= inst.k + 1) {
            if (witness) *witness = v;
            return true;
        }
    }
    return false;
}

std::optional<TraceEntry> sunflower_two_with(Instance& inst, const Separators& seps) {
    for (Vertex v : inst.graph.vertices()) {
        if (!seps[v]) continue;
        int count = 0;
        for (const auto& c : components_around(inst.graph, v, *seps[v]))
            if (in_phi(inst, inst.graph.induced(c)) && !with_v_in_phi(inst, c, v)) ++count;
        if (count >= inst.k + 1) {
            inst.graph.remove_vertex(v);
            --inst.k;
            auto e = entry(6, {v}, inst.graph);
            e.to_solution = true;
            return e;
        }
    }
    return std::nullopt;
}

Separators all_separators(const Instance& inst) {
    Separators seps(inst.graph.id_bound());
    for (Vertex v : inst.graph.vertices()) seps[v] = rules::separator_for(inst, v);
    return seps;
}

}  // namespace

std::uint64_t kernel_size_bound(int d, int k) {
    const std::uint64_t dd = static_cast<std::uint64_t>(d), kk = static_cast<std::uint64_t>(k);
    const std::uint64_t ell = 2 * dd * dd * (2 * kk + 1) * (dd * dd - dd + 3);
    return 4 * dd * (2 * dd + 3) * (dd + 3) * kk * ell;
}

namespace rules {

std::optional<TraceEntry> component(Instance& inst) {
    for (const auto& c : connected_components(inst.graph)) {
        if (!in_phi(inst, inst.graph.induced(c))) continue;
        inst.graph.remove_vertices(c);
        return entry(1, c, inst.graph);
    }
    return std::nullopt;
}

std::optional<TraceEntry> cut_vertex(Instance& inst) {
    const auto bd = block_decomposition(inst.graph);
    for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
        if (bd.block_degree(b) != 1) continue;
        const auto& blk = bd.blocks[b];
        if (static_cast<int>(blk.size()) > inst.d) continue;
        if (!inst.pclass.accepts_block(inst.graph, blk, bd.block_edges[b])) continue;
        VertexSet h = set_difference(blk, bd.block_cuts[b]);
        inst.graph.remove_vertices(h);
        return entry(2, h, inst.graph);
    }
    return std::nullopt;
}

std::optional<TraceEntry> bypassing(Instance& inst, const VertexSet& u) {
    Graph& g = inst.graph;
    const Graph h = g.without(u);
    const auto bd = block_decomposition(h);
    std::vector<char> touches_u(g.id_bound(), 0);
    for (Vertex x : u)
        if (g.contains(x))
            for (Vertex y : g.neighbors(x)) touches_u[y] = 1;

    auto interior_clean = [&](std::size_t b) {
        for (Vertex x : bd.blocks[b])
            if (!bd.is_cut(x) && touches_u[x]) return false;
        return true;
    };
    auto other_cut = [&](std::size_t b, Vertex c) {
        const auto& cs = bd.block_cuts[b];
        return cs[0] == c ? cs[1] : cs[0];
    };

    for (Vertex v1 : bd.cut_vertices) {
        for (std::size_t b1 : bd.vertex_blocks[v1]) {
            if (bd.block_degree(b1) != 2 || !interior_clean(b1)) continue;
            VertexSet w = bd.blocks[b1];
            std::vector<Vertex> cuts{v1, other_cut(b1, v1)};
            std::size_t prev = b1;
            bool ok = true;
            while (static_cast<int>(w.size()) < inst.d + 1) {
                Vertex c = cuts.back();
                if (touches_u[c] || bd.cut_degree(c) != 2) {
                    ok = false;
                    break;
                }
                const auto& bs = bd.vertex_blocks[c];
                std::size_t next = bs[0] == prev ? bs[1] : bs[0];
                if (bd.block_degree(next) != 2 || !interior_clean(next)) {
                    ok = false;
                    break;
                }
                w = set_union(w, bd.blocks[next]);
                cuts.push_back(other_cut(next, c));
                prev = next;
            }
            if (!ok) continue;

            VertexSet cut_set(cuts.begin(), cuts.end());
            normalize(cut_set);
            const VertexSet free_verts = set_difference(w, cut_set);
            VertexSet ends{v1, cuts.back()};
            normalize(ends);
            TraceEntry e;
            if (free_verts.empty()) {
                g.contract(v1, cuts[1]);
                e = entry(3, {v1, cuts[1]}, g);
                ends.push_back(cuts[1]);
            } else {
                g.remove_vertex(free_verts.front());
                e = entry(3, {free_verts.front()}, g);
                ends.push_back(free_verts.front());
            }
            normalize(ends);
            e.region = set_difference(w, ends);
            e.anchor = v1;
            e.chain_end = cuts.back();
            return e;
        }
    }
    return std::nullopt;
}

std::optional<VertexSet> separator_for(const Instance& inst, Vertex v) {
    const Graph rest = inst.graph.without(v);
    const VertexSet nb = neighbourhood(inst.graph, v);
    auto r = find_ad_trees(rest, nb, inst.d, inst.k + 1);
    if (r.found_trees()) return std::nullopt;
    return *r.separator;
}

std::optional<TraceEntry> sunflower_one(Instance& inst) {
    if (inst.k < 0) return std::nullopt;
    Separators seps = all_separators(inst);
    return sunflower_one_with(inst, seps);
}

bool disjoint_obstructions(const Instance& inst, Vertex* witness) {
    if (inst.k < 0) return false;
    return disjoint_obstructions_with(inst, all_separators(inst), witness);
}

std::optional<TraceEntry> sunflower_two(Instance& inst) {
    if (inst.k < 0) return std::nullopt;
    return sunflower_two_with(inst, all_separators(inst));
}

std::size_t large_degree_threshold(int d, int k) {
    const std::size_t dd = static_cast<std::size_t>(d);
    return 2 * dd * static_cast<std::size_t>(2 * k + 1) * (dd * dd - dd + 1);
}

// With d = 2, two added paths and alpha = 3 are needed for the forced block and for
// the potential to drop.
int large_degree_alpha(int d) { return std::max(d, 3); }
int large_degree_paths(int d) { return std::max(d - 1, 2); }

std::optional<TraceEntry> large_degree(Instance& inst, Vertex v, const VertexSet& s_v,
                                       std::size_t min_components) {
    Graph& g = inst.graph;
    if (!g.contains(v)) return std::nullopt;
    const int alpha = large_degree_alpha(inst.d);

    std::vector<VertexSet> comps;
    VertexSet x;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto& c : components_around(g, v, s_v)) {
        bool near_v = false;
        VertexSet touch;
        for (Vertex y : c)
            for (Vertex z : g.neighbors(y)) {
                if (z == v) near_v = true;
                if (set_contains(s_v, z)) touch.push_back(z);
            }
        normalize(touch);
        if (!near_v || touch.empty() || !with_v_in_phi(inst, c, v)) continue;
        const Vertex id = static_cast<Vertex>(comps.size());
        for (Vertex z : touch) edges.emplace_back(z, id);
        x = set_union(x, touch);
        comps.push_back(std::move(c));
    }
    if (comps.empty() || comps.size() < min_components) return std::nullopt;
    if (comps.size() < static_cast<std::size_t>(alpha) * x.size()) return std::nullopt;

    VertexSet y;
    for (Vertex i = 0; i < comps.size(); ++i) y.push_back(i);
    const ExpansionResult ex = expansion(x, y, edges, alpha);

    for (Vertex ci : ex.y_prime)
        for (Vertex z : comps[ci])
            if (g.adjacent(v, z)) g.remove_edge(v, z);
    TraceEntry e;
    for (Vertex xv : ex.x_prime)
        for (int p = 0; p < large_degree_paths(inst.d); ++p) {
            Vertex r = g.add_vertex();
            g.add_edge(v, r);
            g.add_edge(r, xv);
            e.synthetic.push_back(r);
        }
    VertexSet pendant;
    for (Vertex z : g.vertices())
        if (g.degree(z) == 1) pendant.push_back(z);
    g.remove_vertices(pendant);

    VertexSet verts = ex.x_prime;
    verts.push_back(v);
    normalize(verts);
    e.rule = 7;
    e.vertices = std::move(verts);
    e.size_after = g.num_vertices();
    e.anchor = v;
    return e;
}

}  // namespace rules

std::string KernelTrace::serialize() const {
    std::ostringstream out;
    for (const auto& e : entries) {
        out << "RULE " << e.rule << " verts=";
        for (std::size_t i = 0; i < e.vertices.size(); ++i) out << (i ? "," : "") << e.vertices[i];
        out << " size=" << e.size_after << '\n';
    }
    if (verdict == KernelVerdict::No)
        out << "VERDICT no reason=" << no_reason << '\n';
    else
        out << "VERDICT reduced\n";
    return out.str();
}

KernelResult kernelize(const Instance& inst) {
    if (inst.d < 2) throw std::invalid_argument("kernelize: d must be at least 2");
    if (inst.pclass.degenerate()) throw std::invalid_argument("kernelize: class must be non-degenerate");

    KernelResult res;
    res.instance = inst;
    Instance& cur = res.instance;
    auto no = [&](std::string reason) {
        res.trace.verdict = KernelVerdict::No;
        res.trace.no_reason = std::move(reason);
        return res;
    };

    while (true) {
        if (cur.k < 0) return no("budget-exhausted");
        const std::uint64_t before = potential(cur.graph);
        auto record = [&](TraceEntry e) {
            ++res.stats.rule_counts[e.rule];
            if (potential(cur.graph) >= before) ++res.stats.potential_violations;
            res.trace.entries.push_back(std::move(e));
        };

        if (auto e = rules::component(cur)) {
            record(std::move(*e));
            continue;
        }
        if (auto e = rules::cut_vertex(cur)) {
            record(std::move(*e));
            continue;
        }

        const auto approx = approximate_detailed(cur.graph, cur.pclass, cur.d);
        if (approx.lower_bound > static_cast<std::size_t>(cur.k)) return no("approximation-lower-bound");
        if (approx.ratio_certified &&
            approx.solution.size() > static_cast<std::size_t>(2 * cur.d + 6) * static_cast<std::size_t>(cur.k))
            return no("approximation-ratio");

        if (auto e = rules::bypassing(cur, approx.solution)) {
            record(std::move(*e));
            continue;
        }

        Separators seps = all_separators(cur);
        if (auto e = sunflower_one_with(cur, seps)) {
            record(std::move(*e));
            continue;
        }
        Vertex witness = 0;
        if (disjoint_obstructions_with(cur, seps, &witness)) {
            auto e = entry(5, {witness}, cur.graph);
            ++res.stats.rule_counts[5];
            res.trace.entries.push_back(std::move(e));
            return no("disjoint-obstructions");
        }
        if (auto e = sunflower_two_with(cur, seps)) {
            record(std::move(*e));
            continue;
        }
        bool fired = false;
        const std::size_t threshold = rules::large_degree_threshold(cur.d, cur.k);
        for (Vertex v : cur.graph.vertices()) {
            if (!seps[v]) continue;
            if (auto e = rules::large_degree(cur, v, *seps[v], threshold)) {
                record(std::move(*e));
                fired = true;
                break;
            }
        }
        if (fired) continue;
        break;
    }

    if (cur.graph.num_vertices() > kernel_size_bound(cur.d, cur.k)) return no("size-above-bound");
    return res;
}

VertexSet lift_kernel_solution(const Instance& original, const KernelResult& kernel, const VertexSet& s_in) {
    (void)original;
    VertexSet s = s_in;
    normalize(s);
    for (auto it = kernel.trace.entries.rbegin(); it != kernel.trace.entries.rend(); ++it) {
        const TraceEntry& e = *it;
        switch (e.rule) {
            case 3:
                // Interior chain vertices trade for v1 unless an end is already deleted.
                if (!set_intersection(s, e.region).empty()) {
                    s = set_difference(s, e.region);
                    if (!set_contains(s, e.chain_end) && !set_contains(s, e.anchor)) s.push_back(e.anchor);
                }
                break;
            case 4:
            case 6:
                s.insert(s.end(), e.vertices.begin(), e.vertices.end());
                break;
            case 7:
                if (!set_intersection(s, e.synthetic).empty()) {
                    s = set_difference(s, e.synthetic);
                    s.push_back(e.anchor);
                }
                break;
            default:
                break;
        }
        normalize(s);
    }
    return s;
}

bool kernel_equivalence_check(const Instance& before, const Instance& after) {
    const std::size_t cap = oracle_cap_from_env();
    const bool yes_before = brute_force(before, cap).feasible();
    const bool yes_after = after.k >= 0 && brute_force(after, cap).feasible();
    return yes_before == yes_after;
}

}  // namespace bpbvd
