#pragma once

#include <cstddef>
#include <vector>

#include "bpbvd/graph.hpp"

namespace bpbvd {

/// Blocks, cut vertices and the block tree B(G) of a graph.
///
/// Isolated vertices form single-vertex blocks. Blocks are ordered by their
/// smallest vertex; every edge of G belongs to exactly one block.
struct BlockDecomposition {
    std::vector<VertexSet> blocks;
    std::vector<std::size_t> block_edges;          // edges inside each block
    VertexSet cut_vertices;
    std::vector<VertexSet> block_cuts;             // cut vertices of each block
    std::vector<std::vector<std::size_t>> vertex_blocks;  // id -> blocks containing it

    bool is_cut(Vertex v) const { return v < vertex_blocks.size() && vertex_blocks[v].size() >= 2; }
    /// Degree of a block node in B(G).
    std::size_t block_degree(std::size_t b) const { return block_cuts[b].size(); }
    /// Degree of a cut-vertex node in B(G).
    std::size_t cut_degree(Vertex v) const { return vertex_blocks[v].size(); }
    /// Leaf of B(G), including isolated nodes (whole-component blocks).
    bool is_leaf_block(std::size_t b) const { return block_cuts[b].size() <= 1; }
};

/// Linear-time DFS low-point decomposition.
BlockDecomposition block_decomposition(const Graph& g);

bool is_biconnected(const Graph& g);

}  // namespace bpbvd
