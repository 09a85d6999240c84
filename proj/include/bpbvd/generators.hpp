#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bpbvd/graph.hpp"
#include "bpbvd/problem.hpp"

namespace bpbvd {

/// SplitMix64: small, portable, and fully specified, so seeds reproduce across
/// languages.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform in [0, 1) from the top 53 bits.
    double next_double();
    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

/// G(n, p): pairs u < v visited in lex order, one draw each.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

namespace shapes {
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph star(std::size_t leaves);  // centre 0
Graph diamond();                 // K4 minus the edge 0-3
Graph bowtie();                  // triangles 0-1-2 and 2-3-4
/// `count` cycles of `length` vertices, consecutive ones sharing one vertex.
Graph block_chain(std::size_t count, std::size_t length);
/// Copies of `h` with ids shifted per copy.
Graph disjoint_copies(const Graph& h, std::size_t copies);
}  // namespace shapes

/// Named shape lookup used by the CLI: path, cycle, clique, star, diamond, bowtie,
/// chain. Throws std::invalid_argument for unknown names.
Graph structured(const std::string& name, std::size_t n);

/// Hardness construction from a k x k grid graph. Grid vertex v sits in column v / k
/// and columns must be independent sets. Vertices of the result: the grid vertices,
/// then one vertex per edge for the clique side, then one per edge for the
/// independent side. Throws std::invalid_argument on a malformed grid.
Instance gen_kxk_reduction(const Graph& grid, int k);

struct KxkLayout {
    std::size_t grid_vertices;
    std::size_t edges;
    /// First id of the clique-side edge copies and of the independent-side copies.
    Vertex clique_edges_begin;
    Vertex independent_begin;
};
KxkLayout kxk_layout(const Graph& grid, int k);

/// Random k x k grid graph with cross-column edge probability p. When `plant` is set a
/// clique with one vertex per column is added.
Graph random_grid(int k, double p, bool plant, std::uint64_t seed);

/// Does the grid graph contain a k-clique hitting every column once?
bool has_column_clique(const Graph& grid, int k);

/// FNV-1a over the canonical edge list.
std::uint64_t instance_hash(const Graph& g);

}  // namespace bpbvd
