#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bpbvd/graph.hpp"
#include "bpbvd/pclass.hpp"

namespace bpbvd {

enum class ObstructionKind {
    InB2dNotP,  // biconnected, at most d vertices, rejected by P
    TooBig,     // biconnected, between d+1 and 2d-2 vertices
};

const char* to_string(ObstructionKind kind);

/// Induced subgraph that every solution must hit.
struct Obstruction {
    VertexSet vertices;
    ObstructionKind kind;
};

/// Maximal induced subgraphs isomorphic to K1, K2 or a member of P with at most d
/// vertices. External vertices are those lying in two or more clusters.
struct ClusterSet {
    std::vector<VertexSet> clusters;
    VertexSet external_vertices;
};

class NotClusterable : public std::runtime_error {
public:
    explicit NotClusterable(Obstruction o)
        : std::runtime_error("graph is not clusterable: contains an obstruction"), obstruction_(std::move(o)) {}
    const Obstruction& obstruction() const { return obstruction_; }

private:
    Obstruction obstruction_;
};

/// Returns an obstruction, or nullopt when the graph is free of them (and hence
/// clusterable). For d <= 2 this is always nullopt. Throws std::invalid_argument
/// for degenerate classes.
std::optional<Obstruction> find_obstruction(const Graph& g, const PClass& p, int d);

/// Cluster extraction for an obstruction-free graph. Throws NotClusterable
/// carrying an obstruction otherwise.
ClusterSet clusters(const Graph& g, const PClass& p, int d);

/// Same as `clusters` without re-checking freeness first.
ClusterSet clusters_unchecked(const Graph& g, const PClass& p, int d);

/// Every pair of clusters shares at most one vertex.
bool check_clusterable(const Graph& g, const ClusterSet& cs);

/// Shortest cycle of length at most `max_len`, as a vertex sequence in cycle order.
/// Ties go to the smallest BFS root. Empty if none.
std::vector<Vertex> shortest_cycle(const Graph& g, std::size_t max_len);

}  // namespace bpbvd
