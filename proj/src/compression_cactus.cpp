#include <algorithm>
#include <limits>

#include "bpbvd/compression.hpp"
#include "compression_detail.hpp"

namespace bpbvd {

namespace {

using detail::DisjointState;
using detail::Step;
using detail::StepKind;

constexpr TargetClass kTarget = TargetClass::Cactus;
constexpr Vertex kNone = std::numeric_limits<Vertex>::max();

struct ChainEnd {
    Vertex end = kNone;
    VertexSet interior;
};

// Snapshot of the structures every cactus rule looks at.
struct View {
    const DisjointState& st;
    VertexSet outside;
    Graph h;  // G - S
    BlockDecomposition bd;
    std::vector<int> comp;
    std::vector<char> red;
    std::vector<std::vector<int>> touched;

    explicit View(const DisjointState& s) : st(s), outside(s.outside()), h(s.g.induced(outside)) {
        bd = block_decomposition(h);
        comp = detail::s_components(st);
        red.assign(st.g.id_bound(), 0);
        touched.resize(st.g.id_bound());
        for (Vertex u : outside) {
            touched[u] = detail::touched_components(st, comp, u);
            red[u] = !touched[u].empty();
        }
    }

    bool share_block(Vertex a, Vertex b) const {
        for (std::size_t x : bd.vertex_blocks[a])
            for (std::size_t y : bd.vertex_blocks[b])
                if (x == y) return true;
        return false;
    }
    bool is_cut(Vertex v) const { return bd.is_cut(v); }

    // Follows degree-2 non-red vertices from `from` through `first`.
    ChainEnd walk(Vertex from, Vertex first) const {
        ChainEnd out;
        Vertex prev = from, cur = first;
        while (!red[cur] && st.g.degree(cur) == 2) {
            out.interior.push_back(cur);
            auto nb = st.g.neighbors(cur);
            Vertex next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
            if (cur == from) break;
        }
        out.end = cur;
        return out;
    }

    // Red vertices linked to red v by a chain inside a common block of G - S.
    std::vector<ChainEnd> consecutive_reds(Vertex v) const {
        std::vector<ChainEnd> out;
        for (Vertex x : h.neighbors(v)) {
            auto c = walk(v, x);
            if (c.end == v || st.s(c.end) || !red[c.end] || !share_block(v, c.end)) continue;
            bool dup = false;
            for (const auto& o : out) dup = dup || o.end == c.end;
            if (!dup) out.push_back(std::move(c));
        }
        return out;
    }

    VertexSet reds_in(const VertexSet& block) const {
        VertexSet out;
        for (Vertex x : block)
            if (red[x]) out.push_back(x);
        return out;
    }
};

Step reduced(const char* rule) { return {StepKind::Reduced, rule, {}}; }

void push_deleted(Step& step, const DisjointState& st, Vertex v) {
    DisjointState child = st;
    child.delete_to_r(v);
    step.children.push_back(std::move(child));
}

void push_absorbed(Step& step, const DisjointState& st, VertexSet add, int d) {
    normalize(add);
    if (!detail::s_plus_in_class(st, add, kTarget, d)) return;
    DisjointState child = st;
    for (Vertex v : add) child.add_to_s(v);
    step.children.push_back(std::move(child));
}

Step branch_on(const char* rule, const DisjointState& st, VertexSet verts) {
    Step step{StepKind::Branched, rule, {}};
    normalize(verts);
    for (Vertex v : verts) push_deleted(step, st, v);
    return step;
}

std::optional<Step> tier_one(DisjointState& st, const View& vw, int d) {
    for (Vertex u : vw.outside)
        if (st.g.degree(u) <= 1) {
            st.drop(u);
            return reduced("cactus.low-degree");
        }
    for (Vertex u : vw.outside)
        if (vw.touched[u].size() >= 2) {
            Step step{StepKind::Branched, "cactus.joins-components", {}};
            push_deleted(step, st, u);
            push_absorbed(step, st, {u}, d);
            return step;
        }
    for (Vertex u : vw.outside)
        if (!detail::s_plus_in_class(st, {u}, kTarget, d)) {
            st.delete_to_r(u);
            return reduced("cactus.direct-obstruction");
        }
    for (Vertex v : vw.outside) {
        if (!vw.red[v]) continue;
        for (const auto& c : vw.consecutive_reds(v)) {
            Vertex w = c.end;
            if (vw.touched[v] == vw.touched[w]) continue;
            Step step{StepKind::Branched, "cactus.red-pair-joins", {}};
            push_deleted(step, st, v);
            push_deleted(step, st, w);
            VertexSet add = c.interior;
            add.push_back(v);
            add.push_back(w);
            push_absorbed(step, st, std::move(add), d);
            return step;
        }
    }
    return std::nullopt;
}

std::optional<Step> tier_two(DisjointState& st, const View& vw) {
    for (Vertex v : vw.outside) {
        if (!vw.red[v]) continue;
        auto partners = vw.consecutive_reds(v);
        for (std::size_t i = 0; i < partners.size(); ++i)
            for (std::size_t j = i + 1; j < partners.size(); ++j) {
                Vertex u = partners[i].end, w = partners[j].end;
                bool common = false;
                for (std::size_t b : vw.bd.vertex_blocks[v])
                    common = common || (set_contains(vw.bd.blocks[b], u) && set_contains(vw.bd.blocks[b], w));
                if (common) return branch_on("cactus.three-reds", st, {u, v, w});
            }
    }

    for (std::size_t b = 0; b < vw.bd.blocks.size(); ++b) {
        const auto& blk = vw.bd.blocks[b];
        if (blk.size() != 2 || !vw.bd.is_leaf_block(b)) continue;
        for (int flip = 0; flip < 2; ++flip) {
            Vertex u = blk[flip], v = blk[1 - flip];
            if (vw.is_cut(u)) continue;
            if (!vw.red[u] || detail::s_degree(st, u) != 1) continue;
            if (vw.is_cut(v) || (vw.red[v] && detail::s_degree(st, v) == 1)) {
                st.add_to_s(u);
                return reduced("cactus.leaf-edge-single");
            }
        }
        for (int flip = 0; flip < 2; ++flip) {
            Vertex u = blk[flip], v = blk[1 - flip];
            if (vw.red[u] && vw.red[v] && detail::s_degree(st, u) >= 2)
                return branch_on("cactus.leaf-edge-double", st, {u, v});
        }
    }
    return std::nullopt;
}

std::optional<Step> tier_three(DisjointState& st, const View& vw, bool& claim) {
    for (std::size_t b = 0; b < vw.bd.blocks.size(); ++b) {
        const auto& blk = vw.bd.blocks[b];
        if (blk.size() < 3 || !vw.bd.is_leaf_block(b)) continue;
        auto reds = vw.reds_in(blk);
        if (reds.size() < 2) continue;
        if (reds.size() > 2) claim = true;
        VertexSet verts{reds[0], reds[1]};
        for (Vertex c : vw.bd.block_cuts[b]) verts.push_back(c);
        return branch_on("cactus.two-reds-in-leaf", st, verts);
    }
    for (std::size_t b = 0; b < vw.bd.blocks.size(); ++b) {
        if (!vw.bd.is_leaf_block(b)) continue;
        const auto& blk = vw.bd.blocks[b];
        const VertexSet c_prime = set_difference(blk, vw.bd.block_cuts[b]);
        const VertexSet reds = vw.reds_in(c_prime);
        if (reds.empty()) {
            for (Vertex x : c_prime) st.drop(x);
            return reduced("cactus.leaf-without-red");
        }
        if (vw.bd.block_cuts[b].empty() && reds.size() == 1 && c_prime.size() > 1) {
            for (Vertex x : c_prime)
                if (x != reds.front()) st.drop(x);
            return reduced("cactus.component-one-red");
        }
    }
    for (std::size_t b = 0; b < vw.bd.blocks.size(); ++b) {
        if (!vw.bd.is_leaf_block(b)) continue;
        auto reds = vw.reds_in(vw.bd.blocks[b]);
        if (reds.size() != 1 || vw.is_cut(reds.front())) continue;
        if (detail::s_degree(st, reds.front()) == 1) {
            st.add_to_s(reds.front());
            return reduced("cactus.leaf-red-single");
        }
    }
    return std::nullopt;
}

// Each leaf block holds exactly one red vertex, not a cut vertex, with two S-neighbours.
bool leaf_blocks_well_formed(const DisjointState& st, const View& vw) {
    for (std::size_t b = 0; b < vw.bd.blocks.size(); ++b) {
        if (!vw.bd.is_leaf_block(b)) continue;
        auto reds = vw.reds_in(vw.bd.blocks[b]);
        if (reds.size() != 1 || vw.is_cut(reds.front()) || detail::s_degree(st, reds.front()) != 2) return false;
    }
    return true;
}

Vertex unique_red(const View& vw, std::size_t block) {
    auto reds = vw.reds_in(vw.bd.blocks[block]);
    if (reds.size() != 1 || vw.is_cut(reds.front())) return kNone;
    return reds.front();
}

std::size_t other_block(const View& vw, Vertex cut, std::size_t b) {
    const auto& bs = vw.bd.vertex_blocks[cut];
    return bs[0] == b ? bs[1] : bs[0];
}

Vertex other_cut(const View& vw, std::size_t b, Vertex cut) {
    const auto& cs = vw.bd.block_cuts[b];
    return cs[0] == cut ? cs[1] : cs[0];
}

std::optional<Step> tier_four(const DisjointState& st, const View& vw, int d, bool& claim) {
    const auto& bd = vw.bd;
    for (std::size_t b1 = 0; b1 < bd.blocks.size(); ++b1) {
        if (bd.block_degree(b1) != 1) continue;
        Vertex v = unique_red(vw, b1);
        if (v == kNone) {
            claim = true;
            continue;
        }
        VertexSet absorbed = bd.blocks[b1];
        Vertex cut = bd.block_cuts[b1].front();
        std::size_t prev = b1;
        while (bd.cut_degree(cut) == 2) {
            std::size_t next = other_block(vw, cut, prev);
            const auto& blk = bd.blocks[next];
            Vertex w = kNone;
            VertexSet chain;
            for (Vertex x : vw.h.neighbors(cut)) {
                if (!set_contains(blk, x)) continue;
                auto c = vw.walk(cut, x);
                if (c.end != cut && vw.red[c.end] && set_contains(blk, c.end)) {
                    w = c.end;
                    chain = std::move(c.interior);
                    break;
                }
            }
            if (w != kNone) {
                const bool joined = vw.touched[v] == vw.touched[w];
                Step step = branch_on(joined ? "cactus.path-to-red" : "cactus.path-to-red-joins", st, {v, w, cut});
                if (!joined) {
                    VertexSet add = absorbed;
                    add.insert(add.end(), chain.begin(), chain.end());
                    add.push_back(w);
                    push_absorbed(step, st, std::move(add), d);
                }
                return step;
            }
            if (!vw.reds_in(blk).empty() || bd.block_degree(next) != 2) break;
            absorbed = set_union(absorbed, blk);
            cut = other_cut(vw, next, cut);
            prev = next;
        }
    }
    return std::nullopt;
}

// Block tree nodes: blocks are 0..nb-1, cut vertex c is nb + c.
struct TreeWalk {
    const View& vw;
    std::size_t nb;

    bool is_block(std::size_t node) const { return node < nb; }
    Vertex cut_of(std::size_t node) const { return static_cast<Vertex>(node - nb); }
    std::size_t degree(std::size_t node) const {
        return is_block(node) ? vw.bd.block_degree(node) : vw.bd.cut_degree(cut_of(node));
    }
    std::vector<std::size_t> neighbours(std::size_t node) const {
        std::vector<std::size_t> out;
        if (is_block(node))
            for (Vertex c : vw.bd.block_cuts[node]) out.push_back(nb + c);
        else
            for (std::size_t b : vw.bd.vertex_blocks[cut_of(node)]) out.push_back(b);
        return out;
    }
};

std::optional<Step> tier_five(const DisjointState& st, const View& vw, int d, bool& claim) {
    const auto& bd = vw.bd;
    TreeWalk tw{vw, bd.blocks.size()};
    const std::size_t total = tw.nb + st.g.id_bound();
    constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> parent(total, kUnset), tparent(total, kUnset), tdepth(total, 0);
    std::vector<char> seen(total, 0);

    for (Vertex root_cut : bd.cut_vertices) {
        const std::size_t root = tw.nb + root_cut;
        if (seen[root]) continue;
        std::vector<std::size_t> order{root};
        seen[root] = 1;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::size_t nx : tw.neighbours(order[i]))
                if (!seen[nx]) {
                    seen[nx] = 1;
                    parent[nx] = order[i];
                    order.push_back(nx);
                }
        auto smoothed = [&](std::size_t node) { return node != root && tw.degree(node) == 2; };
        std::size_t deepest = kUnset;
        for (std::size_t node : order) {
            if (node == root) continue;
            std::size_t p = parent[node];
            tparent[node] = smoothed(p) ? tparent[p] : p;
            tdepth[node] = tdepth[tparent[node]] + 1;
            if (tw.degree(node) == 1 && (deepest == kUnset || tdepth[node] > tdepth[deepest])) deepest = node;
        }
        if (deepest == kUnset) continue;
        const std::size_t p = tparent[deepest];

        // Leaf children of p, each with the B-neighbour of p on its path and the
        // blocks along that path.
        struct Child {
            std::size_t leaf;
            std::size_t attach;
            VertexSet path_vertices;
        };
        std::vector<Child> kids;
        for (std::size_t node : order) {
            if (node == root || smoothed(node) || tparent[node] != p) continue;
            if (tw.degree(node) != 1) {
                claim = true;
                continue;
            }
            Child c{node, node, {}};
            for (std::size_t cur = node; cur != p; cur = parent[cur]) {
                c.attach = cur;
                if (tw.is_block(cur)) c.path_vertices = set_union(c.path_vertices, bd.blocks[cur]);
            }
            kids.push_back(std::move(c));
        }
        if (kids.size() < 2) {
            claim = true;
            continue;
        }

        const Child* cx = nullptr;
        const Child* cy = nullptr;
        VertexSet chain;
        Vertex x = kNone, y = kNone;
        if (tw.is_block(p)) {
            const auto& blk = bd.blocks[p];
            for (const auto& a : kids) {
                Vertex ax = tw.cut_of(a.attach);
                for (Vertex z : vw.h.neighbors(ax)) {
                    if (!set_contains(blk, z)) continue;
                    auto c = vw.walk(ax, z);
                    for (const auto& bkid : kids)
                        if (&bkid != &a && tw.cut_of(bkid.attach) == c.end) {
                            cx = &a;
                            cy = &bkid;
                            chain = c.interior;
                            break;
                        }
                    if (cx) break;
                }
                if (cx) break;
            }
            if (!cx) {
                claim = true;
                continue;
            }
            x = tw.cut_of(cx->attach);
            y = tw.cut_of(cy->attach);
        } else {
            cx = &kids[0];
            cy = &kids[1];
            x = y = tw.cut_of(p);
        }

        Vertex v = unique_red(vw, cx->leaf), w = unique_red(vw, cy->leaf);
        if (v == kNone || w == kNone) {
            claim = true;
            continue;
        }
        const bool joined = vw.touched[v] == vw.touched[w];
        Step step = branch_on(joined ? "cactus.deepest-parent" : "cactus.deepest-parent-joins", st, {v, w, x, y});
        if (!joined) {
            VertexSet add = set_union(cx->path_vertices, cy->path_vertices);
            add.insert(add.end(), chain.begin(), chain.end());
            add.push_back(x);
            add.push_back(y);
            push_absorbed(step, st, std::move(add), d);
        }
        return step;
    }
    return std::nullopt;
}

std::optional<Step> final_sweep(const DisjointState& st, const View& vw, int d) {
    for (std::size_t i = 0; i < vw.outside.size(); ++i)
        for (std::size_t j = i + 1; j < vw.outside.size(); ++j) {
            Vertex v = vw.outside[i], w = vw.outside[j];
            if (!detail::s_plus_in_class(st, {v, w}, kTarget, d))
                return branch_on("cactus.pair-obstruction", st, {v, w});
        }
    return std::nullopt;
}

Step cactus_step(DisjointState& st, int d) {
    View vw(st);
    bool claim = false;
    auto finish = [&](Step s) {
        s.claim_violation = claim;
        return s;
    };

    if (auto s = tier_one(st, vw, d)) return *s;
    for (Vertex u : vw.outside)
        if (detail::s_degree(st, u) > 2) claim = true;
    if (auto s = tier_two(st, vw)) return finish(std::move(*s));
    if (auto s = tier_three(st, vw, claim)) return finish(std::move(*s));
    if (!leaf_blocks_well_formed(st, vw)) claim = true;
    if (auto s = tier_four(st, vw, d, claim)) return finish(std::move(*s));
    if (auto s = tier_five(st, vw, d, claim)) return finish(std::move(*s));
    if (vw.h.num_edges() > 0) claim = true;
    if (auto s = final_sweep(st, vw, d)) return finish(std::move(*s));
    return finish(Step{});
}

}  // namespace

std::optional<VertexSet> disjoint_cactus(const DisjointInstance& di, CompressionStats* stats) {
    CompressionStats local;
    CompressionStats& out = stats ? *stats : local;
    auto st = detail::make_state(di);
    if (!detail::s_plus_in_class(st, {}, kTarget, di.d)) return std::nullopt;
    const int d = di.d;
    return detail::run_disjoint(std::move(st), kTarget, d, out, [d](DisjointState& s) { return cactus_step(s, d); });
}

}  // namespace bpbvd
