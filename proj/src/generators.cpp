#include "bpbvd/generators.hpp"

#include <stdexcept>

namespace bpbvd {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("SplitMix64::below: empty range");
    return next() % bound;
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.next_double() < p) g.add_edge(u, v);
    return g;
}

namespace shapes {

Graph path(std::size_t n) {
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
    return g;
}

Graph cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g = path(n);
    g.add_edge(0, static_cast<Vertex>(n - 1));
    return g;
}

Graph complete(std::size_t n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph star(std::size_t leaves) {
    Graph g(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph diamond() {
    Graph g = complete(4);
    g.remove_edge(0, 3);
    return g;
}

Graph bowtie() {
    Graph g(5);
    for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}})
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return g;
}

Graph block_chain(std::size_t count, std::size_t length) {
    if (length < 2) throw std::invalid_argument("block_chain: blocks need at least 2 vertices");
    if (count == 0) return Graph();
    Graph g(count * (length - 1) + 1);
    for (std::size_t b = 0; b < count; ++b) {
        Vertex first = static_cast<Vertex>(b * (length - 1));
        for (Vertex i = 0; i + 1 < length; ++i) g.add_edge(first + i, first + i + 1);
        if (length >= 3) g.add_edge(first, first + static_cast<Vertex>(length - 1));
    }
    return g;
}

Graph disjoint_copies(const Graph& h, std::size_t copies) {
    const Vertex n = h.id_bound();
    Graph g(n * copies);
    for (std::size_t c = 0; c < copies; ++c)
        for (const auto& e : h.edges()) g.add_edge(e.u + c * n, e.v + c * n);
    for (std::size_t c = 0; c < copies; ++c)
        for (Vertex v = 0; v < n; ++v)
            if (!h.contains(v)) g.remove_vertex(v + c * n);
    return g;
}

}  // namespace shapes

Graph structured(const std::string& name, std::size_t n) {
    if (name == "path") return shapes::path(n);
    if (name == "cycle") return shapes::cycle(n);
    if (name == "clique") return shapes::complete(n);
    if (name == "star") return shapes::star(n == 0 ? 0 : n - 1);
    if (name == "diamond") return shapes::diamond();
    if (name == "bowtie") return shapes::bowtie();
    if (name == "chain") return shapes::block_chain(n, 4);
    throw std::invalid_argument("unknown structured family: " + name);
}

KxkLayout kxk_layout(const Graph& grid, int k) {
    if (k < 1) throw std::invalid_argument("kxk: k must be positive");
    const std::size_t kk = static_cast<std::size_t>(k) * static_cast<std::size_t>(k);
    if (grid.num_vertices() != kk || grid.id_bound() != kk)
        throw std::invalid_argument("kxk: grid must have exactly k*k vertices with ids 0..k*k-1");
    const std::size_t m = grid.num_edges();
    return {kk, m, static_cast<Vertex>(kk), static_cast<Vertex>(kk + m)};
}

Instance gen_kxk_reduction(const Graph& grid, int k) {
    auto layout = kxk_layout(grid, k);
    auto edges = grid.edges();
    for (const auto& e : edges)
        if (e.u / k == e.v / k) throw std::invalid_argument("kxk: column contains an edge");

    const std::size_t total = layout.grid_vertices + 2 * layout.edges;
    Graph g(total);
    const Vertex clique_end = layout.independent_begin;
    for (Vertex u = 0; u < clique_end; ++u)
        for (Vertex v = u + 1; v < clique_end; ++v) g.add_edge(u, v);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        Vertex e1 = layout.clique_edges_begin + static_cast<Vertex>(i);
        Vertex e2 = layout.independent_begin + static_cast<Vertex>(i);
        g.add_edge(edges[i].u, e2);
        g.add_edge(edges[i].v, e2);
        g.add_edge(e1, e2);
    }
    Instance inst;
    inst.graph = std::move(g);
    inst.pclass = PClass::all_biconnected();
    inst.k = k;
    inst.d = static_cast<int>(total) - k - k * (k - 1) / 2;
    return inst;
}

Graph random_grid(int k, double p, bool plant, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const Vertex n = static_cast<Vertex>(k * k);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (u / k != v / k && rng.next_double() < p) g.add_edge(u, v);
    if (plant) {
        std::vector<Vertex> pick;
        for (int c = 0; c < k; ++c) pick.push_back(static_cast<Vertex>(c * k + rng.below(k)));
        for (std::size_t i = 0; i < pick.size(); ++i)
            for (std::size_t j = i + 1; j < pick.size(); ++j) g.add_edge(pick[i], pick[j]);
    }
    return g;
}

bool has_column_clique(const Graph& grid, int k) {
    std::vector<Vertex> chosen;
    auto extend = [&](auto&& self, int col) -> bool {
        if (col == k) return true;
        for (int r = 0; r < k; ++r) {
            Vertex v = static_cast<Vertex>(col * k + r);
            bool ok = true;
            for (Vertex u : chosen) ok = ok && grid.adjacent(u, v);
            if (!ok) continue;
            chosen.push_back(v);
            if (self(self, col + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return extend(extend, 0);
}

std::uint64_t instance_hash(const Graph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    };
    mix(g.num_vertices());
    for (Vertex v : g.vertices()) mix(v);
    for (const auto& e : g.edges()) {
        mix(e.u);
        mix(e.v);
    }
    return h;
}

}  // namespace bpbvd
