#include "contracts.hpp"

#include "oracles.hpp"

namespace contracts {

using namespace bpbvd;

bool ad_trees_ok(const Graph& g, const VertexSet& a, int d, int k, const ADTreeResult& r) {
    if (!r.found_trees()) {
        const std::uint64_t bound = 2 * static_cast<std::uint64_t>(2 * k - 1) * static_cast<std::uint64_t>(d * d - d + 1);
        if (r.separator->size() > bound) return false;
        for (const auto& c : connected_components(g.without(*r.separator))) {
            int hits = 0;
            for (Vertex v : c) hits += set_contains(a, v);
            if (hits >= d) return false;
        }
        return true;
    }
    if (static_cast<int>(r.trees.size()) != k) return false;
    VertexSet used;
    for (const auto& t : r.trees) {
        if (static_cast<int>(t.vertices.size()) < d || t.edges.size() + 1 != t.vertices.size()) return false;
        Graph tree(g.id_bound());
        for (Vertex v = 0; v < g.id_bound(); ++v)
            if (!set_contains(t.vertices, v)) tree.remove_vertex(v);
        for (auto [u, w] : t.edges) {
            if (!g.adjacent(u, w) || !tree.contains(u) || !tree.contains(w)) return false;
            tree.add_edge(u, w);
        }
        if (!oracle::connected(tree, t.vertices)) return false;
        for (Vertex v : t.vertices)
            if (tree.degree(v) <= 1 && !set_contains(a, v)) return false;
        used.insert(used.end(), t.vertices.begin(), t.vertices.end());
    }
    const std::size_t total = used.size();
    normalize(used);
    return used.size() == total;
}

}  // namespace contracts
