#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace bpbvd {

/// Opaque vertex identifier. Ids are never renumbered or reused once issued.
using Vertex = std::uint32_t;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

struct Edge {
    Vertex u;
    Vertex v;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with stable vertex ids.
///
/// Adjacency lists are kept sorted so membership tests are O(log deg).
/// Removing a vertex retires its id; `add_vertex` always issues a fresh one.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    Vertex add_vertex();
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    void remove_vertex(Vertex v);
    void remove_vertices(std::span<const Vertex> vs);
    /// Merges `gone` into `keep`; parallel edges collapse, the edge between them disappears.
    void contract(Vertex keep, Vertex gone);

    bool contains(Vertex v) const { return v < alive_.size() && alive_[v]; }
    bool adjacent(Vertex u, Vertex v) const;
    std::span<const Vertex> neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    std::size_t num_vertices() const { return live_; }
    std::size_t num_edges() const { return edges_; }
    bool empty() const { return live_ == 0; }
    /// One past the largest id ever issued; size for id-indexed scratch arrays.
    Vertex id_bound() const { return static_cast<Vertex>(adj_.size()); }

    VertexSet vertices() const;
    std::vector<Edge> edges() const;

    /// Subgraph induced by `keep` (ids preserved).
    Graph induced(std::span<const Vertex> keep) const;
    /// G - X (ids preserved).
    Graph without(std::span<const Vertex> drop) const;
    Graph without(Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    void check(Vertex v) const;

    std::vector<std::vector<Vertex>> adj_;
    std::vector<char> alive_;
    std::size_t live_ = 0;
    std::size_t edges_ = 0;
};

namespace mutation {
struct DeleteVertices { VertexSet vertices; };
struct DeleteEdges { std::vector<Edge> edges; };
struct ContractEdge { Vertex keep; Vertex gone; };
struct AddVertex {};
struct AddEdge { Vertex u; Vertex v; };
}  // namespace mutation

using Mutation = std::variant<mutation::DeleteVertices, mutation::DeleteEdges,
                              mutation::ContractEdge, mutation::AddVertex, mutation::AddEdge>;

/// Copy-and-mutate: the input graph is left untouched.
/// Throws std::out_of_range for unknown vertex ids.
Graph mutate(const Graph& g, const Mutation& op);

// Set helpers over sorted vectors.
bool set_contains(const VertexSet& s, Vertex v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
void normalize(VertexSet& s);

/// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
std::size_t count_components(const Graph& g);

}  // namespace bpbvd
