#include "bpbvd/sfvs.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "bpbvd/blocks.hpp"

namespace bpbvd {

namespace {

constexpr Vertex kNone = std::numeric_limits<Vertex>::max();
constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

// Strips vertices of degree at most one; they lie on no cycle.
void prune(Graph& g) {
    std::vector<Vertex> queue;
    for (Vertex v : g.vertices())
        if (g.degree(v) <= 1) queue.push_back(v);
    while (!queue.empty()) {
        Vertex v = queue.back();
        queue.pop_back();
        if (!g.contains(v) || g.degree(v) > 1) continue;
        std::vector<Vertex> nb(g.neighbors(v).begin(), g.neighbors(v).end());
        g.remove_vertex(v);
        for (Vertex w : nb)
            if (g.degree(w) <= 1) queue.push_back(w);
    }
}

// Shortest cycle through some terminal, in cycle order starting at the terminal.
std::vector<Vertex> shortest_terminal_cycle(const Graph& g, const std::vector<char>& terminal) {
    const Vertex bound = g.id_bound();
    std::vector<std::size_t> dist(bound, kInf);
    std::vector<Vertex> parent(bound, kNone), branch(bound, kNone), queue;
    std::size_t best = kInf;
    std::vector<Vertex> cycle;
    for (Vertex t : g.vertices()) {
        if (t >= terminal.size() || !terminal[t] || g.degree(t) < 2) continue;
        for (Vertex v : queue) dist[v] = kInf;
        queue.assign(1, t);
        dist[t] = 0;
        parent[t] = kNone;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            Vertex u = queue[qi];
            if (best != kInf && 2 * dist[u] + 1 >= best) break;
            for (Vertex w : g.neighbors(u)) {
                if (w == parent[u] || w == t) continue;
                if (dist[w] == kInf) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    branch[w] = u == t ? w : branch[u];
                    queue.push_back(w);
                } else if (u != t && branch[w] != branch[u]) {
                    std::size_t len = dist[u] + dist[w] + 1;
                    if (len < best) {
                        best = len;
                        cycle.clear();
                        for (Vertex x = u; x != kNone; x = parent[x]) cycle.push_back(x);
                        std::reverse(cycle.begin(), cycle.end());
                        for (Vertex x = w; x != t; x = parent[x]) cycle.push_back(x);
                    }
                }
            }
        }
    }
    return cycle;
}

struct Search {
    const std::vector<char>& terminal;
    std::uint64_t nodes = 0;

    bool run(Graph g, std::vector<char> forbidden, int budget, VertexSet& out) {
        ++nodes;
        prune(g);
        auto cycle = shortest_terminal_cycle(g, terminal);
        if (cycle.empty()) return true;
        if (budget <= 0) return false;

        // Consecutive degree-2 vertices on the cycle meet exactly the same cycles,
        // so one representative per run is enough.
        const std::size_t len = cycle.size();
        std::size_t start = 0;
        while (start < len && g.degree(cycle[start]) == 2) ++start;
        std::vector<std::vector<Vertex>> runs;
        if (start == len) {
            runs.push_back(cycle);
        } else {
            for (std::size_t i = 0; i < len; ++i) {
                Vertex v = cycle[(start + i) % len];
                bool chained = g.degree(v) == 2 && !runs.empty() && i > 0 &&
                               g.degree(cycle[(start + i - 1) % len]) == 2;
                if (chained)
                    runs.back().push_back(v);
                else
                    runs.push_back({v});
            }
        }

        std::vector<std::pair<Vertex, std::size_t>> options;
        for (std::size_t r = 0; r < runs.size(); ++r) {
            Vertex rep = kNone;
            for (Vertex v : runs[r])
                if (!forbidden[v] && v < rep) rep = v;
            if (rep != kNone) options.emplace_back(rep, r);
        }
        std::sort(options.begin(), options.end());

        for (auto [rep, r] : options) {
            Graph h = g.without(rep);
            if (run(std::move(h), forbidden, budget - 1, out)) {
                out.push_back(rep);
                return true;
            }
            for (Vertex v : runs[r]) forbidden[v] = 1;
        }
        return false;
    }
};

std::vector<char> flags(Vertex bound, const VertexSet& s) {
    std::vector<char> f(bound, 0);
    for (Vertex v : s)
        if (v < bound) f[v] = 1;
    return f;
}

}  // namespace

SfvsInstance build_sfvs_instance(const Graph& g, const ClusterSet& cs, int k) {
    SfvsInstance inst;
    inst.graph = g;
    inst.k = k;
    inst.source_bound = g.id_bound();
    inst.terminals = cs.external_vertices;

    auto external = flags(g.id_bound(), cs.external_vertices);
    std::map<std::pair<Vertex, std::size_t>, Vertex> split_of;
    for (std::size_t i = 0; i < cs.clusters.size(); ++i)
        for (Vertex x : cs.clusters[i])
            if (external[x]) {
                Vertex s = inst.graph.add_vertex();
                split_of[{x, i}] = s;
                inst.splits.push_back({s, x, i});
            }

    for (Vertex x : cs.external_vertices) {
        std::vector<Vertex> nb(inst.graph.neighbors(x).begin(), inst.graph.neighbors(x).end());
        for (Vertex y : nb) inst.graph.remove_edge(x, y);
    }
    for (std::size_t i = 0; i < cs.clusters.size(); ++i) {
        const auto& h = cs.clusters[i];
        for (Vertex x : h) {
            if (!external[x]) continue;
            Vertex s = split_of.at({x, i});
            inst.graph.add_edge(s, x);
            for (Vertex y : g.neighbors(x)) {
                if (!set_contains(h, y)) continue;
                inst.graph.add_edge(s, external[y] ? split_of.at({y, i}) : y);
            }
        }
    }
    return inst;
}

std::optional<VertexSet> sfvs_search(const Graph& g, const VertexSet& terminals, int budget,
                                     const VertexSet& forbidden, std::uint64_t* nodes) {
    auto term = flags(g.id_bound(), terminals);
    Search search{term};
    VertexSet out;
    bool ok = search.run(g, flags(g.id_bound(), forbidden), budget, out);
    if (nodes) *nodes += search.nodes;
    if (!ok) return std::nullopt;
    normalize(out);
    return out;
}

SolveResult solve_sfvs(const SfvsInstance& inst, SfvsOptions opts) {
    SolveResult result;
    const Graph& g = inst.graph;
    auto term = flags(g.id_bound(), inst.terminals);
    Search search{term};

    int size = -1;
    VertexSet found;
    for (int b = 0; b <= inst.k; ++b) {
        VertexSet out;
        if (search.run(g, std::vector<char>(g.id_bound(), 0), b, out)) {
            size = b;
            found = std::move(out);
            break;
        }
    }
    if (size < 0) {
        result.stats.branch_nodes = search.nodes;
        return result;
    }
    normalize(found);
    size = static_cast<int>(found.size());

    if (opts.lexicographic && size > 0) {
        // Fix the smallest vertex that still extends to a minimum solution whose
        // remaining members are all larger.
        VertexSet chosen;
        Graph rest = g;
        std::vector<char> forbidden(g.id_bound(), 0);
        for (Vertex v : g.vertices()) {
            if (static_cast<int>(chosen.size()) == size) break;
            VertexSet out;
            Graph h = rest.without(v);
            if (search.run(std::move(h), forbidden, size - static_cast<int>(chosen.size()) - 1, out)) {
                chosen.push_back(v);
                rest.remove_vertex(v);
            } else {
                forbidden[v] = 1;
            }
        }
        found = std::move(chosen);
    }
    result.stats.branch_nodes = search.nodes;
    result.solution = std::move(found);
    return result;
}

VertexSet lift_solution(const SfvsInstance& inst, const VertexSet& s_prime) {
    VertexSet s;
    for (Vertex v : s_prime) s.push_back(inst.is_split(v) ? inst.split_info(v).original : v);
    normalize(s);
    return s;
}

bool hits_terminal_cycles(const Graph& g, const VertexSet& terminals, const VertexSet& s) {
    Graph h = g.without(s);
    auto bd = block_decomposition(h);
    for (Vertex t : terminals) {
        if (!h.contains(t)) continue;
        for (std::size_t b : bd.vertex_blocks[t])
            if (bd.blocks[b].size() >= 3) return false;
    }
    return true;
}

}  // namespace bpbvd
