#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bpbvd/blocks.hpp"
#include "bpbvd/compression.hpp"

namespace bpbvd::detail {

/// Working state of one disjoint search node: the remaining graph, the undeletable
/// set S (as flags), the partial solution R and the remaining budget.
struct DisjointState {
    Graph g;
    std::vector<char> in_s;
    VertexSet r;
    int k = 0;

    bool s(Vertex v) const { return v < in_s.size() && in_s[v]; }
    VertexSet outside() const;
    std::size_t outside_count() const;

    void delete_to_r(Vertex v);
    void drop(Vertex v);
    void add_to_s(Vertex v);
};

/// Component index of every S vertex (-1 elsewhere), and the component count.
std::vector<int> s_components(const DisjointState& st, int* count = nullptr);

/// k + cc(S).
int measure(const DisjointState& st);

/// Is G[S ∪ extra] in the target class?
bool s_plus_in_class(const DisjointState& st, const VertexSet& extra, TargetClass target, int d);

/// Number of S-neighbours of v.
std::size_t s_degree(const DisjointState& st, Vertex v);

/// Is v outside S with a neighbour in S?
bool is_red(const DisjointState& st, Vertex v);

/// Components of G[S] met by v's S-neighbours, sorted and deduplicated.
std::vector<int> touched_components(const DisjointState& st, const std::vector<int>& comp, Vertex v);

/// The graph G - S.
Graph outside_graph(const DisjointState& st);

enum class StepKind { Reduced, Branched, None };

struct Step {
    StepKind kind = StepKind::None;
    std::string rule;
    std::vector<DisjointState> children;
    /// Set when a structural property expected at this point did not hold.
    bool claim_violation = false;
};

using RuleEngine = std::function<Step(DisjointState&)>;

/// Applies `rules` until G - S is empty or the budget is exhausted, recursing into
/// branches. When no rule applies, the remaining vertices are moved into S if that
/// keeps G[S] in the class; otherwise an exhaustive delete-or-keep branch is taken
/// and counted as a claim violation.
std::optional<VertexSet> run_disjoint(DisjointState st, TargetClass target, int d,
                                      CompressionStats& stats, const RuleEngine& rules);

DisjointState make_state(const DisjointInstance& di);

}  // namespace bpbvd::detail
