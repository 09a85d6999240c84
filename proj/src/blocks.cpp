#include "bpbvd/blocks.hpp"

#include <algorithm>
#include <numeric>

namespace bpbvd {

namespace {

struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;  // index into neighbors(v)
};

constexpr Vertex kNone = static_cast<Vertex>(-1);

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
    BlockDecomposition bd;
    const Vertex bound = g.id_bound();
    bd.vertex_blocks.resize(bound);

    std::vector<std::uint32_t> disc(bound, 0), low(bound, 0);
    std::uint32_t timer = 0;
    std::vector<Vertex> vstack;
    std::vector<Frame> dfs;
    std::vector<VertexSet> raw;

    for (Vertex root : g.vertices()) {
        if (disc[root]) continue;
        if (g.degree(root) == 0) {
            disc[root] = ++timer;
            raw.push_back({root});
            continue;
        }
        disc[root] = low[root] = ++timer;
        vstack.push_back(root);
        dfs.push_back({root, kNone, 0});
        while (!dfs.empty()) {
            Frame& f = dfs.back();
            auto nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                Vertex w = nb[f.next++];
                if (!disc[w]) {
                    disc[w] = low[w] = ++timer;
                    vstack.push_back(w);
                    dfs.push_back({w, f.v, 0});
                } else if (w != f.parent) {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            Vertex child = f.v;
            Vertex parent = f.parent;
            dfs.pop_back();
            if (parent == kNone) {
                vstack.clear();
                continue;
            }
            low[parent] = std::min(low[parent], low[child]);
            if (low[child] >= disc[parent]) {
                VertexSet block;
                while (true) {
                    Vertex x = vstack.back();
                    vstack.pop_back();
                    block.push_back(x);
                    if (x == child) break;
                }
                block.push_back(parent);
                std::sort(block.begin(), block.end());
                raw.push_back(std::move(block));
            }
        }
    }

    std::sort(raw.begin(), raw.end());
    bd.blocks = std::move(raw);
    for (std::size_t b = 0; b < bd.blocks.size(); ++b)
        for (Vertex v : bd.blocks[b]) bd.vertex_blocks[v].push_back(b);

    bd.block_edges.assign(bd.blocks.size(), 0);
    for (const auto& e : g.edges()) {
        const auto& bu = bd.vertex_blocks[e.u];
        const auto& bv = bd.vertex_blocks[e.v];
        for (std::size_t b : bu)
            if (std::find(bv.begin(), bv.end(), b) != bv.end()) {
                ++bd.block_edges[b];
                break;
            }
    }

    bd.block_cuts.resize(bd.blocks.size());
    for (Vertex v = 0; v < bound; ++v) {
        if (bd.vertex_blocks[v].size() < 2) continue;
        bd.cut_vertices.push_back(v);
        for (std::size_t b : bd.vertex_blocks[v]) bd.block_cuts[b].push_back(v);
    }
    return bd;
}

bool is_biconnected(const Graph& g) {
    if (g.empty()) return false;
    auto bd = block_decomposition(g);
    return bd.blocks.size() == 1;
}

}  // namespace bpbvd
