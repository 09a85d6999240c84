#include "bpbvd/clustering.hpp"

#include <algorithm>
#include <limits>

namespace bpbvd {

namespace {

constexpr Vertex kNone = std::numeric_limits<Vertex>::max();
constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

std::size_t induced_edge_count(const Graph& g, const VertexSet& x) {
    std::size_t m = 0;
    for (Vertex v : x)
        for (Vertex w : g.neighbors(v))
            if (w > v && set_contains(x, w)) ++m;
    return m;
}

bool in_p(const Graph& g, const PClass& p, const VertexSet& x) {
    return p.accepts_block(g, x, induced_edge_count(g, x));
}

Obstruction make_obstruction(VertexSet x, int d) {
    auto kind = static_cast<int>(x.size()) <= d ? ObstructionKind::InB2dNotP : ObstructionKind::TooBig;
    return {std::move(x), kind};
}

void remove_induced_edges(Graph& gp, const VertexSet& x) {
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (gp.adjacent(x[i], x[j])) gp.remove_edge(x[i], x[j]);
}

// BFS scratch reused across searches on one graph.
struct Scratch {
    std::vector<std::size_t> dist;
    std::vector<Vertex> parent;
    std::vector<Vertex> touched;

    explicit Scratch(Vertex bound) : dist(bound, kInf), parent(bound, kNone) {}

    void visit(Vertex v, std::size_t dv, Vertex par) {
        dist[v] = dv;
        parent[v] = par;
        touched.push_back(v);
    }
    void reset() {
        for (Vertex v : touched) {
            dist[v] = kInf;
            parent[v] = kNone;
        }
        touched.clear();
    }
    void trace(Vertex v, std::vector<Vertex>& out) const {
        for (; v != kNone; v = parent[v]) out.push_back(v);
    }
};

// Shortest non-trivial X-path in `gp` with at most `max_internal` internal vertices.
// Returns all its vertices (endpoints included), or empty.
VertexSet shortest_x_path(const Graph& gp, const VertexSet& x, const std::vector<char>& in_x,
                          std::size_t max_internal, Scratch& s) {
    std::size_t best = max_internal + 1;
    VertexSet best_path;
    for (Vertex a : x) {
        if (best <= 1) break;
        s.reset();
        std::vector<Vertex> queue;
        for (Vertex w : gp.neighbors(a))
            if (!in_x[w]) {
                s.visit(w, 1, kNone);
                queue.push_back(w);
            }
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            Vertex u = queue[qi];
            if (s.dist[u] >= best) break;
            Vertex hit = kNone;
            for (Vertex w : gp.neighbors(u)) {
                if (in_x[w]) {
                    if (w != a) {
                        hit = w;
                        break;
                    }
                } else if (s.dist[w] == kInf) {
                    s.visit(w, s.dist[u] + 1, u);
                    queue.push_back(w);
                }
            }
            if (hit != kNone) {
                best = s.dist[u];
                best_path.clear();
                s.trace(u, best_path);
                best_path.push_back(a);
                best_path.push_back(hit);
                normalize(best_path);
                break;
            }
        }
    }
    s.reset();
    return best_path;
}

// Distances and parents inside G[X] from `src`.
void bfs_inside(const Graph& g, const std::vector<char>& in_x, Vertex src, Scratch& s) {
    s.reset();
    s.visit(src, 0, kNone);
    for (std::size_t qi = 0; qi < s.touched.size(); ++qi) {
        Vertex u = s.touched[qi];
        for (Vertex w : g.neighbors(u))
            if (in_x[w] && s.dist[w] == kInf) s.visit(w, s.dist[u] + 1, u);
    }
}

// Pair check: u,v in X with a uv-path inside G[X] and a uv-path in G' - E(G[X])
// whose combined length is at most `limit`. Any such P' whose interior meets X splits
// into several X-paths each too long to matter, so only X-paths are searched.
VertexSet pair_cycle(const Graph& g, const Graph& gp, const VertexSet& x,
                     const std::vector<char>& in_x, std::size_t limit) {
    Scratch outside(gp.id_bound()), inside(g.id_bound());
    std::size_t best = limit + 1;
    VertexSet best_cycle;
    for (Vertex a : x) {
        outside.reset();
        std::vector<Vertex> queue;
        for (Vertex w : gp.neighbors(a))
            if (!in_x[w]) {
                outside.visit(w, 1, kNone);
                queue.push_back(w);
            }
        bool inside_ready = false;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            Vertex u = queue[qi];
            if (outside.dist[u] + 2 >= best) break;
            for (Vertex w : gp.neighbors(u)) {
                if (in_x[w]) {
                    if (w <= a) continue;
                    if (!inside_ready) {
                        bfs_inside(g, in_x, a, inside);
                        inside_ready = true;
                    }
                    if (inside.dist[w] == kInf) continue;
                    std::size_t total = outside.dist[u] + 1 + inside.dist[w];
                    if (total < best) {
                        best = total;
                        best_cycle.clear();
                        outside.trace(u, best_cycle);
                        inside.trace(w, best_cycle);
                        normalize(best_cycle);
                    }
                } else if (outside.dist[w] == kInf) {
                    outside.visit(w, outside.dist[u] + 1, u);
                    queue.push_back(w);
                }
            }
        }
    }
    return best_cycle;
}

// Grows X by shortest non-trivial X-paths while |X ∪ V(P)| <= d. When `p` is given,
// stops with the first X outside P.
bool grow(const Graph& g, const Graph& gp, VertexSet& x, std::vector<char>& in_x, int d,
          const PClass* p, Scratch& s) {
    while (static_cast<int>(x.size()) < d) {
        auto path = shortest_x_path(gp, x, in_x, d - x.size(), s);
        if (path.empty()) break;
        for (Vertex v : path) in_x[v] = 1;
        x = set_union(x, path);
        if (p && !in_p(g, *p, x)) return false;
    }
    return true;
}

}  // namespace

const char* to_string(ObstructionKind kind) {
    return kind == ObstructionKind::InB2dNotP ? "in-B2d-not-P" : "too-big";
}

std::vector<Vertex> shortest_cycle(const Graph& g, std::size_t max_len) {
    const Vertex bound = g.id_bound();
    std::vector<std::size_t> dist(bound, kInf);
    std::vector<Vertex> parent(bound, kNone), branch(bound, kNone);
    std::vector<Vertex> queue;
    std::size_t best = max_len + 1;
    std::vector<Vertex> cycle;

    for (Vertex r : g.vertices()) {
        if (g.degree(r) < 2) continue;
        for (Vertex v : queue) dist[v] = kInf;
        queue.assign(1, r);
        dist[r] = 0;
        parent[r] = kNone;
        branch[r] = kNone;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            Vertex u = queue[qi];
            if (2 * dist[u] + 1 >= best) break;
            for (Vertex w : g.neighbors(u)) {
                if (w == parent[u]) continue;
                if (dist[w] == kInf) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    branch[w] = u == r ? w : branch[u];
                    queue.push_back(w);
                } else if (u != r && w != r && branch[w] != branch[u]) {
                    std::size_t len = dist[u] + dist[w] + 1;
                    if (len < best) {
                        best = len;
                        cycle.clear();
                        for (Vertex x = u; x != kNone; x = parent[x]) cycle.push_back(x);
                        std::reverse(cycle.begin(), cycle.end());
                        for (Vertex x = w; x != r; x = parent[x]) cycle.push_back(x);
                    }
                }
            }
        }
    }
    return cycle;
}

std::optional<Obstruction> find_obstruction(const Graph& g, const PClass& p, int d) {
    if (p.degenerate()) throw std::invalid_argument("find_obstruction: degenerate class");
    if (d <= 2) return std::nullopt;

    const std::size_t limit = 2 * static_cast<std::size_t>(d) - 2;
    Graph gp = g;
    Scratch scratch(g.id_bound());
    std::vector<char> in_x(g.id_bound(), 0);

    while (true) {
        auto cyc = shortest_cycle(gp, limit);
        if (cyc.empty()) return std::nullopt;
        VertexSet x(cyc.begin(), cyc.end());
        normalize(x);
        if (static_cast<int>(x.size()) > d || !in_p(g, p, x)) return make_obstruction(std::move(x), d);

        std::fill(in_x.begin(), in_x.end(), 0);
        for (Vertex v : x) in_x[v] = 1;
        if (!grow(g, gp, x, in_x, d, &p, scratch)) return make_obstruction(std::move(x), d);

        auto path = shortest_x_path(gp, x, in_x, limit - x.size(), scratch);
        if (!path.empty()) return make_obstruction(set_union(x, path), d);

        Graph rest = gp;
        remove_induced_edges(rest, x);
        auto cycle = pair_cycle(g, rest, x, in_x, limit);
        if (!cycle.empty()) return make_obstruction(std::move(cycle), d);

        gp = std::move(rest);
    }
}

ClusterSet clusters_unchecked(const Graph& g, const PClass& p, int d) {
    (void)p;
    ClusterSet cs;
    Graph gp = g;
    if (d >= 3) {
        Scratch scratch(g.id_bound());
        std::vector<char> in_x(g.id_bound(), 0);
        while (true) {
            auto cyc = shortest_cycle(gp, static_cast<std::size_t>(d));
            if (cyc.empty()) break;
            VertexSet x(cyc.begin(), cyc.end());
            normalize(x);
            std::fill(in_x.begin(), in_x.end(), 0);
            for (Vertex v : x) in_x[v] = 1;
            grow(g, gp, x, in_x, d, nullptr, scratch);
            remove_induced_edges(gp, x);
            cs.clusters.push_back(std::move(x));
        }
    }
    for (const auto& e : gp.edges()) cs.clusters.push_back({e.u, e.v});
    for (Vertex v : g.vertices())
        if (g.degree(v) == 0) cs.clusters.push_back({v});
    std::sort(cs.clusters.begin(), cs.clusters.end());

    std::vector<unsigned> count(g.id_bound(), 0);
    for (const auto& c : cs.clusters)
        for (Vertex v : c) ++count[v];
    for (Vertex v = 0; v < count.size(); ++v)
        if (count[v] >= 2) cs.external_vertices.push_back(v);
    return cs;
}

ClusterSet clusters(const Graph& g, const PClass& p, int d) {
    if (auto o = find_obstruction(g, p, d)) throw NotClusterable(std::move(*o));
    return clusters_unchecked(g, p, d);
}

bool check_clusterable(const Graph& g, const ClusterSet& cs) {
    (void)g;
    for (std::size_t i = 0; i < cs.clusters.size(); ++i)
        for (std::size_t j = i + 1; j < cs.clusters.size(); ++j)
            if (set_intersection(cs.clusters[i], cs.clusters[j]).size() > 1) return false;
    return true;
}

}  // namespace bpbvd
