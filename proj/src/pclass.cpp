#include "bpbvd/pclass.hpp"

#include <random>
#include <stdexcept>

namespace bpbvd {

PClass PClass::all_biconnected() { return {PClassKind::AllBiconnected, "biconnected", nullptr, false}; }
PClass PClass::cliques() { return {PClassKind::Cliques, "cliques", nullptr, false}; }
PClass PClass::cycles_and_k2() { return {PClassKind::CyclesAndK2, "cycles", nullptr, false}; }

PClass PClass::custom(std::string name, Recognizer recognizer, bool degenerate) {
    return {PClassKind::Custom, std::move(name), std::move(recognizer), degenerate};
}

PClass class_by_name(const std::string& name) {
    if (name == "biconnected") return PClass::all_biconnected();
    if (name == "cliques") return PClass::cliques();
    if (name == "cycles") return PClass::cycles_and_k2();
    throw std::invalid_argument("unknown class: " + name);
}

bool named_class_accepts(PClassKind kind, std::size_t n, std::size_t m) {
    switch (kind) {
        case PClassKind::AllBiconnected:
            return true;
        case PClassKind::Cliques:
            return m == n * (n - 1) / 2;
        case PClassKind::CyclesAndK2:
            return n == 2 ? m == 1 : m == n;
        case PClassKind::Custom:
            break;
    }
    return false;
}

bool PClass::accepts(const Graph& block) const {
    if (kind_ != PClassKind::Custom) return named_class_accepts(kind_, block.num_vertices(), block.num_edges());
    return recognizer_ && recognizer_(block);
}

bool PClass::accepts_block(const Graph& g, const VertexSet& vertices, std::size_t edge_count) const {
    if (kind_ != PClassKind::Custom) return named_class_accepts(kind_, vertices.size(), edge_count);
    return recognizer_ && recognizer_(g.induced(vertices));
}

bool is_in_phi(const Graph& g, const BlockDecomposition& bd, const PClass& p, int d) {
    for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
        const auto& blk = bd.blocks[b];
        if (blk.size() < 2) continue;
        if (static_cast<int>(blk.size()) > d) return false;
        if (!p.accepts_block(g, blk, bd.block_edges[b])) return false;
    }
    return true;
}

bool is_in_phi(const Graph& g, const PClass& p, int d) {
    return is_in_phi(g, block_decomposition(g), p, d);
}

bool sample_block_hereditary(const PClass& p, std::span<const Graph> accepted, int samples,
                             std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (const Graph& g : accepted) {
        if (!is_biconnected(g) || !p.accepts(g)) continue;
        auto verts = g.vertices();
        for (int s = 0; s < samples && verts.size() > 2; ++s) {
            VertexSet drop;
            for (Vertex v : verts)
                if (std::bernoulli_distribution(0.3)(rng)) drop.push_back(v);
            if (drop.size() == verts.size()) continue;
            Graph h = g.without(drop);
            auto bd = block_decomposition(h);
            for (std::size_t b = 0; b < bd.blocks.size(); ++b)
                if (bd.blocks[b].size() >= 2 && !p.accepts(h.induced(bd.blocks[b]))) return false;
        }
    }
    return true;
}

}  // namespace bpbvd
