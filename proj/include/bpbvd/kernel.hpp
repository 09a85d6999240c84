#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bpbvd/graph.hpp"
#include "bpbvd/problem.hpp"

namespace bpbvd {

// ---- approximation ---------------------------------------------------------

struct ApproxResult {
    VertexSet solution;
    /// Obstructions removed whole; they are pairwise disjoint, so OPT >= this.
    std::size_t obstructions = 0;
    /// The Subset FVS phase was solved exactly, which makes |solution| <= (2d+6) OPT.
    bool ratio_certified = false;
    /// A proven lower bound on OPT.
    std::size_t lower_bound = 0;
};

/// Largest Subset FVS budget tried exactly before the greedy fallback.
constexpr int kExactSfvsCap = 8;

/// Deletes whole obstructions until the graph is clusterable, then hits the
/// remaining cycles through Subset FVS. d = 1 or a degenerate class uses both
/// endpoints of a maximal matching.
ApproxResult approximate_detailed(const Graph& g, const PClass& p, int d, int exact_cap = kExactSfvsCap);
VertexSet approximate(const Graph& g, const PClass& p, int d);

// ---- (A,d)-trees -----------------------------------------------------------

struct TreeSubgraph {
    VertexSet vertices;
    std::vector<std::pair<Vertex, Vertex>> edges;
};

struct ADTreeResult {
    std::vector<TreeSubgraph> trees;  // exactly k when non-empty
    std::optional<VertexSet> separator;

    bool found_trees() const { return !separator.has_value(); }
};

/// Either k disjoint (A,d)-trees of g or a set S of at most 2(2k-1)(d^2-d+1)
/// vertices such that every component of g - S holds fewer than d vertices of A.
ADTreeResult find_ad_trees(const Graph& g, const VertexSet& a, int d, int k);

std::uint64_t ad_separator_bound(int d, int k);

/// Checks the output contract of find_ad_trees; returns an empty string when it
/// holds, else a description of the first failure.
std::string check_ad_tree_result(const Graph& g, const VertexSet& a, int d, int k, const ADTreeResult& r);

// ---- expansion -------------------------------------------------------------

struct ExpansionResult {
    VertexSet x_prime;
    VertexSet y_prime;
    std::map<Vertex, VertexSet> phi;
};

/// Bipartite graph between x and y given as an edge list (x side first). Requires
/// |y| >= alpha |x| and every y vertex to have a neighbour in x; throws
/// std::invalid_argument otherwise.
ExpansionResult expansion(const VertexSet& x, const VertexSet& y,
                          const std::vector<std::pair<Vertex, Vertex>>& edges, int alpha);

std::string check_expansion(const VertexSet& x, const VertexSet& y,
                            const std::vector<std::pair<Vertex, Vertex>>& edges, int alpha,
                            const ExpansionResult& r);

// ---- kernel ----------------------------------------------------------------

struct TraceEntry {
    int rule = 0;
    VertexSet vertices;
    std::size_t size_after = 0;

    // Lifting data.
    Vertex anchor = 0;         // rule 3: v1; rule 7: v
    Vertex chain_end = 0;      // rule 3: vt
    VertexSet region;          // rule 3: W minus v1 and vt after the rule
    VertexSet synthetic;       // rule 7: added path vertices
    bool to_solution = false;  // rules 4 and 6
};

enum class KernelVerdict { Reduced, No };

struct KernelTrace {
    std::vector<TraceEntry> entries;
    KernelVerdict verdict = KernelVerdict::Reduced;
    std::string no_reason;

    /// `RULE <id> verts=<list> size=<n>` per entry, then a VERDICT line.
    std::string serialize() const;
};

struct KernelStats {
    std::map<int, std::uint64_t> rule_counts;
    /// Rule applications that did not strictly decrease |V| + |E'|, where E' are the
    /// edges with both ends of degree at least 3.
    std::uint64_t potential_violations = 0;
};

struct KernelResult {
    Instance instance;
    KernelTrace trace;
    KernelStats stats;

    bool is_no() const { return trace.verdict == KernelVerdict::No; }
};

/// Vertex bound above which a reduced instance must be a No instance:
/// 4d(2d+3)(d+3)k l with l = 2d^2(2k+1)(d^2-d+3).
std::uint64_t kernel_size_bound(int d, int k);
/// The O(k^2 d^7) constant that dominates kernel_size_bound for d >= 2, k >= 1.
constexpr std::uint64_t kKernelConstant = 263;

/// Applies rules 1-7 exhaustively, rescanning from rule 1 after every change.
/// Requires a non-degenerate class and d >= 2.
KernelResult kernelize(const Instance& inst);

/// Maps a solution of the kernel back to the original graph.
VertexSet lift_kernel_solution(const Instance& original, const KernelResult& kernel, const VertexSet& s);

/// Brute-force verdicts of both instances agree.
bool kernel_equivalence_check(const Instance& before, const Instance& after);

// Single rule applications, for testing rules in isolation. Each returns the trace
// entry if the rule fired and updates `inst` in place.
namespace rules {

std::optional<TraceEntry> component(Instance& inst);
std::optional<TraceEntry> cut_vertex(Instance& inst);
/// `u` must be a solution of inst.
std::optional<TraceEntry> bypassing(Instance& inst, const VertexSet& u);
std::optional<TraceEntry> sunflower_one(Instance& inst);
/// Returns true when k+1 components of G - (S_v + v) lie outside Phi for some v.
bool disjoint_obstructions(const Instance& inst, Vertex* witness = nullptr);
std::optional<TraceEntry> sunflower_two(Instance& inst);
/// Large degree rule at v with separator s_v. Uses the components of
/// G - (s_v + v) that contain a neighbour of v, meet s_v and stay in Phi with v;
/// fires when there are at least `min_components` of them and at least
/// alpha |s_v|.
std::optional<TraceEntry> large_degree(Instance& inst, Vertex v, const VertexSet& s_v,
                                       std::size_t min_components);
/// Threshold 2d(2k+1)(d^2-d+1) for the large degree rule.
std::size_t large_degree_threshold(int d, int k);
/// Expansion parameter and number of added paths of the large degree rule.
int large_degree_alpha(int d);
int large_degree_paths(int d);

/// S_v from find_ad_trees on (G - v, N(v), d, k+1), or nullopt when k+1 trees exist.
std::optional<VertexSet> separator_for(const Instance& inst, Vertex v);

}  // namespace rules

}  // namespace bpbvd
