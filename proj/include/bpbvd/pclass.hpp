#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "bpbvd/blocks.hpp"
#include "bpbvd/graph.hpp"

namespace bpbvd {

enum class PClassKind { AllBiconnected, Cliques, CyclesAndK2, Custom };

/// A block-hereditary class P of permissible blocks.
///
/// Recognizers are only ever queried on biconnected graphs. For Custom classes
/// block-hereditarity is the caller's contract; see `sample_block_hereditary`.
class PClass {
public:
    using Recognizer = std::function<bool(const Graph&)>;

    static PClass all_biconnected();
    static PClass cliques();
    static PClass cycles_and_k2();
    static PClass custom(std::string name, Recognizer recognizer, bool degenerate = false);

    PClassKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    /// True iff the class contains no graph with an edge.
    bool degenerate() const { return degenerate_; }

    /// Membership of a biconnected graph.
    bool accepts(const Graph& block) const;
    /// Membership of the block of `g` on `vertices`, which has `edge_count` edges.
    bool accepts_block(const Graph& g, const VertexSet& vertices, std::size_t edge_count) const;

private:
    PClass(PClassKind kind, std::string name, Recognizer rec, bool degenerate)
        : kind_(kind), name_(std::move(name)), recognizer_(std::move(rec)), degenerate_(degenerate) {}

    PClassKind kind_;
    std::string name_;
    Recognizer recognizer_;
    bool degenerate_;
};

/// Closed-form membership for the named kinds given a biconnected graph's size.
/// "biconnected", "cliques" or "cycles"; throws std::invalid_argument otherwise.
PClass class_by_name(const std::string& name);

bool named_class_accepts(PClassKind kind, std::size_t n, std::size_t m);

/// G in Phi_{P ∩ B_{2,d}}: every block with an edge has at most d vertices and lies in P.
bool is_in_phi(const Graph& g, const PClass& p, int d);
bool is_in_phi(const Graph& g, const BlockDecomposition& bd, const PClass& p, int d);

/// Sampling sanity check for Custom classes: deletes random vertices from accepted
/// blocks of the given graphs and re-tests the resulting blocks. Returns false on the
/// first counterexample.
bool sample_block_hereditary(const PClass& p, std::span<const Graph> accepted, int samples,
                             std::uint64_t seed);

}  // namespace bpbvd
