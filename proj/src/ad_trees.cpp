#include <algorithm>
#include <deque>
#include <sstream>

#include "bpbvd/kernel.hpp"

namespace bpbvd {

namespace {

// The growing forest H.
struct Forest {
    std::vector<char> in;
    std::vector<VertexSet> adj;
    std::size_t trees = 0;

    explicit Forest(std::size_t bound) : in(bound, 0), adj(bound) {}

    void add_path(const std::vector<Vertex>& path) {
        for (Vertex v : path) in[v] = 1;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            adj[path[i]].push_back(path[i + 1]);
            adj[path[i + 1]].push_back(path[i]);
        }
    }
};

// Shortest path inside `comp_mask` from any source to the nearest vertex satisfying
// `is_target`; returned from target back to its source.
template <class Target>
std::vector<Vertex> nearest(const Graph& g, const std::vector<char>& comp_mask, const VertexSet& sources,
                            Target is_target) {
    constexpr Vertex kNone = static_cast<Vertex>(-1);
    std::vector<Vertex> parent(g.id_bound(), kNone);
    std::vector<char> seen(g.id_bound(), 0);
    std::deque<Vertex> queue;
    for (Vertex s : sources) {
        seen[s] = 1;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (seen[w] || !comp_mask[w]) continue;
            seen[w] = 1;
            parent[w] = u;
            if (is_target(w)) {
                std::vector<Vertex> path{w};
                for (Vertex x = u; x != kNone; x = parent[x]) path.push_back(x);
                return path;
            }
            queue.push_back(w);
        }
    }
    return {};
}

TreeSubgraph tree_on(const Forest& h, const VertexSet& verts) {
    TreeSubgraph t;
    t.vertices = verts;
    for (Vertex u : verts)
        for (Vertex w : h.adj[u])
            if (u < w && set_contains(verts, w)) t.edges.emplace_back(u, w);
    return t;
}

// Cuts (A,d)-trees out of one component of H: take a lowest node whose subtree holds
// at least d vertices of A, keep the subtree spanning those, discard the subtree.
void harvest(const Forest& h, Vertex start, const std::vector<char>& in_a, int d, int k,
             std::vector<TreeSubgraph>& out) {
    std::vector<char> alive(h.in.size(), 0);
    VertexSet comp{start};
    alive[start] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
        for (Vertex w : h.adj[comp[i]])
            if (!alive[w]) {
                alive[w] = 1;
                comp.push_back(w);
            }

    Vertex root = comp.front();
    for (Vertex v : comp)
        if (h.adj[v].size() >= 2) {
            root = v;
            break;
        }

    while (static_cast<int>(out.size()) < k && alive[root]) {
        std::vector<Vertex> order{root}, parent(h.in.size(), root);
        std::vector<char> seen(h.in.size(), 0);
        seen[root] = 1;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (Vertex w : h.adj[order[i]])
                if (alive[w] && !seen[w]) {
                    seen[w] = 1;
                    parent[w] = order[i];
                    order.push_back(w);
                }
        std::vector<int> weight(h.in.size(), 0);
        Vertex pick = root;
        bool found = false;
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            Vertex t = *it;
            weight[t] += in_a[t] ? 1 : 0;
            if (weight[t] >= d) {
                pick = t;
                found = true;
                break;
            }
            if (t != root) weight[parent[t]] += weight[t];
        }
        if (!found) return;

        VertexSet sub{pick};
        std::vector<char> in_sub(h.in.size(), 0);
        in_sub[pick] = 1;
        for (std::size_t i = 0; i < sub.size(); ++i)
            for (Vertex w : h.adj[sub[i]])
                if (alive[w] && !in_sub[w] && w != parent[sub[i]]) {
                    in_sub[w] = 1;
                    sub.push_back(w);
                }
        if (pick != root) in_sub[parent[pick]] = 0;

        // Prune leaves outside A until all leaves are in A.
        std::vector<char> keep = in_sub;
        bool changed = true;
        while (changed) {
            changed = false;
            for (Vertex v : sub) {
                if (!keep[v] || in_a[v]) continue;
                int deg = 0;
                for (Vertex w : h.adj[v]) deg += keep[w] && in_sub[w];
                if (deg <= 1) {
                    keep[v] = 0;
                    changed = true;
                }
            }
        }
        VertexSet verts;
        for (Vertex v : sub)
            if (keep[v]) verts.push_back(v);
        normalize(verts);
        out.push_back(tree_on(h, verts));
        for (Vertex v : sub) alive[v] = 0;
    }
}

}  // namespace

std::uint64_t ad_separator_bound(int d, int k) {
    const std::uint64_t dd = static_cast<std::uint64_t>(d);
    return 2 * static_cast<std::uint64_t>(2 * k - 1) * (dd * dd - dd + 1);
}

ADTreeResult find_ad_trees(const Graph& g, const VertexSet& a, int d, int k) {
    if (d < 1 || k < 1) throw std::invalid_argument("find_ad_trees: d and k must be positive");
    const std::size_t bound = g.id_bound();
    std::vector<char> in_a(bound, 0);
    for (Vertex v : a)
        if (g.contains(v)) in_a[v] = 1;

    Forest h(bound);
    const std::uint64_t dd = static_cast<std::uint64_t>(d);
    const std::uint64_t harvest_at = static_cast<std::uint64_t>(2 * k - 1) * (dd * dd - dd + 1);
    ADTreeResult out;

    while (true) {
        std::uint64_t a_in_h = 0;
        for (Vertex v : g.vertices()) a_in_h += h.in[v] && in_a[v];

        if (h.trees >= static_cast<std::size_t>(k) || a_in_h >= harvest_at) {
            std::vector<char> done(bound, 0);
            for (Vertex v : g.vertices()) {
                if (!h.in[v] || done[v]) continue;
                VertexSet comp{v};
                done[v] = 1;
                for (std::size_t i = 0; i < comp.size(); ++i)
                    for (Vertex w : h.adj[comp[i]])
                        if (!done[w]) {
                            done[w] = 1;
                            comp.push_back(w);
                        }
                if (h.trees >= static_cast<std::size_t>(k)) {
                    normalize(comp);
                    out.trees.push_back(tree_on(h, comp));
                } else {
                    harvest(h, v, in_a, d, k, out.trees);
                }
                if (static_cast<int>(out.trees.size()) >= k) break;
            }
            out.trees.resize(std::min<std::size_t>(out.trees.size(), static_cast<std::size_t>(k)));
            return out;
        }

        VertexSet blocked;
        std::vector<char> is_blocked(bound, 0);
        for (Vertex v : g.vertices())
            if (h.in[v] && (in_a[v] || h.adj[v].size() != 2)) {
                blocked.push_back(v);
                is_blocked[v] = 1;
            }

        // First component of g - blocked with at least d vertices of A.
        std::vector<char> comp_mask(bound, 0), seen(bound, 0);
        VertexSet comp;
        for (Vertex s : g.vertices()) {
            if (is_blocked[s] || seen[s]) continue;
            VertexSet c{s};
            seen[s] = 1;
            for (std::size_t i = 0; i < c.size(); ++i)
                for (Vertex w : g.neighbors(c[i]))
                    if (!seen[w] && !is_blocked[w]) {
                        seen[w] = 1;
                        c.push_back(w);
                    }
            int a_count = 0;
            for (Vertex x : c) a_count += in_a[x];
            if (a_count >= d) {
                comp = std::move(c);
                break;
            }
        }
        if (comp.empty()) {
            out.separator = blocked;
            return out;
        }
        normalize(comp);
        for (Vertex x : comp) comp_mask[x] = 1;

        VertexSet touching;
        for (Vertex x : comp)
            if (h.in[x]) touching.push_back(x);

        if (!touching.empty()) {
            auto path = nearest(g, comp_mask, touching, [&](Vertex w) { return in_a[w] && !h.in[w]; });
            h.add_path(path);
            continue;
        }

        Vertex s = 0;
        for (Vertex x : comp)
            if (in_a[x]) {
                s = x;
                break;
            }
        VertexSet q{s};
        std::vector<char> in_q(bound, 0);
        in_q[s] = 1;
        h.in[s] = 1;
        for (int j = 1; j < d; ++j) {
            auto path = nearest(g, comp_mask, q, [&](Vertex w) { return in_a[w] && !in_q[w]; });
            h.add_path(path);
            for (Vertex v : path)
                if (!in_q[v]) {
                    in_q[v] = 1;
                    q.push_back(v);
                }
        }
        ++h.trees;
    }
}

std::string check_ad_tree_result(const Graph& g, const VertexSet& a, int d, int k, const ADTreeResult& r) {
    std::ostringstream err;
    if (r.found_trees()) {
        if (static_cast<int>(r.trees.size()) != k) {
            err << "expected " << k << " trees, got " << r.trees.size();
            return err.str();
        }
        std::vector<char> used(g.id_bound(), 0);
        for (const auto& t : r.trees) {
            if (static_cast<int>(t.vertices.size()) < d) return "tree smaller than d";
            if (t.edges.size() + 1 != t.vertices.size()) return "tree edge count is not |V| - 1";
            Graph tg(g.id_bound());
            for (Vertex v = 0; v < g.id_bound(); ++v)
                if (!set_contains(t.vertices, v)) tg.remove_vertex(v);
            for (auto [u, w] : t.edges) {
                if (!g.adjacent(u, w)) return "tree edge not in graph";
                if (!set_contains(t.vertices, u) || !set_contains(t.vertices, w)) return "tree edge leaves tree";
                tg.add_edge(u, w);
            }
            if (count_components(tg) != 1) return "tree is disconnected";
            for (Vertex v : t.vertices) {
                if (used[v]) return "trees overlap";
                used[v] = 1;
                if (tg.degree(v) <= 1 && !set_contains(a, v)) return "leaf outside A";
            }
        }
        return {};
    }
    const VertexSet& s = *r.separator;
    if (s.size() > ad_separator_bound(d, k)) {
        err << "separator of size " << s.size() << " exceeds " << ad_separator_bound(d, k);
        return err.str();
    }
    Graph rest = g.without(s);
    for (const auto& comp : connected_components(rest)) {
        int count = 0;
        for (Vertex v : comp) count += set_contains(a, v);
        if (count >= d) return "component of g - S holds d or more vertices of A";
    }
    return {};
}

}  // namespace bpbvd
