#include <doctest.h>

#include "bpbvd/branch_solver.hpp"
#include "bpbvd/generators.hpp"
#include "bpbvd/oracle.hpp"
#include "oracles.hpp"

using namespace bpbvd;

namespace {

Instance make(Graph g, const char* name, int d, int k) { return Instance{std::move(g), class_by_name(name), d, k}; }

}  // namespace

TEST_CASE("solve examples") {
    auto k4 = solve(make(shapes::complete(4), "cliques", 4, 0));
    REQUIRE(k4.solution);
    CHECK(k4.solution->empty());

    auto k4d3 = solve(make(shapes::complete(4), "cliques", 3, 1));
    REQUIRE(k4d3.solution);
    CHECK(k4d3.solution->size() == 1);

    CHECK_FALSE(solve(make(shapes::complete(4), "cycles", 4, 0)).feasible());
    auto k4c = solve(make(shapes::complete(4), "cycles", 4, 1));
    REQUIRE(k4c.solution);
    CHECK(k4c.solution->size() == 1);
}

TEST_CASE("branch node counts") {
    CHECK(count_branch_nodes(make(shapes::cycle(5), "cycles", 5, 2)) == 1);
    CHECK(count_branch_nodes(make(shapes::diamond(), "cycles", 4, 1)) <= 5);
    CHECK(branch_node_bound(4, 2) == 1 + 6 + 36);
    for (int d = 1; d <= 6; ++d)
        for (int k = 0; k <= 5; ++k) CHECK(branch_node_bound(d, k) == oracle::geometric_bound(d, k));
}

TEST_CASE("d = 1 and degenerate classes reduce to vertex cover") {
    auto vc = solve(make(shapes::cycle(5), "cliques", 1, 3));
    REQUIRE(vc.solution);
    CHECK(vc.solution->size() == 3);
    CHECK_FALSE(solve(make(shapes::cycle(5), "cliques", 1, 2)).feasible());

    const PClass none = PClass::custom("edgeless", [](const Graph& b) { return b.num_vertices() <= 1; }, true);
    auto r = solve(Instance{shapes::complete(4), none, 5, 3});
    REQUIRE(r.solution);
    CHECK(r.solution->size() == 3);

    auto cover = solve_vertex_cover(shapes::star(5), 1);
    REQUIRE(cover.solution);
    CHECK(*cover.solution == VertexSet{0});
}

TEST_CASE("agreement with the test oracle, bound on branch nodes") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        Graph g = random_graph(4 + seed % 6, 0.2 + 0.2 * static_cast<double>(seed % 3), seed + 5);
        for (const char* name : {"biconnected", "cliques", "cycles"})
            for (int d = 1; d <= 5; ++d) {
                const int opt = oracle::min_deletion(g, oracle::kind_of(name), d, 3);
                for (int k = 0; k <= 3; ++k) {
                    const Instance inst = make(g, name, d, k);
                    const auto r = solve(inst);
                    CAPTURE(seed);
                    CAPTURE(name);
                    CAPTURE(d);
                    CAPTURE(k);
                    REQUIRE(r.feasible() == (opt >= 0 && opt <= k));
                    if (r.solution) {
                        REQUIRE(static_cast<int>(r.solution->size()) == opt);
                        REQUIRE(oracle::in_phi(g.without(*r.solution), oracle::kind_of(name), d));
                    }
                    // d = 1 is vertex cover, a two-way branching.
                    const std::uint64_t bound = d == 1 ? (2ULL << k) - 1 : oracle::geometric_bound(d, k);
                    REQUIRE(r.stats.branch_nodes <= bound);
                }
            }
    }
}

TEST_CASE("monotone in k and in d for all-biconnected") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Graph g = random_graph(6 + seed % 5, 0.4, seed + 11);
        for (int d = 2; d <= 5; ++d)
            for (int k = 0; k <= 3; ++k) {
                if (!solve(make(g, "biconnected", d, k)).feasible()) continue;
                REQUIRE(solve(make(g, "biconnected", d, k + 1)).feasible());
                REQUIRE(solve(make(g, "biconnected", d + 1, k)).feasible());
            }
    }
}

TEST_CASE("custom class solves like its named twin") {
    const PClass triangles_only = PClass::custom("cliques-copy", [](const Graph& b) {
        const std::size_t n = b.num_vertices();
        return b.num_edges() == n * (n - 1) / 2;
    });
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Graph g = random_graph(8, 0.4, seed + 70);
        for (int d = 3; d <= 4; ++d) {
            auto a = solve(Instance{g, triangles_only, d, 3});
            auto b = solve(make(g, "cliques", d, 3));
            REQUIRE(a.feasible() == b.feasible());
            if (a.solution) REQUIRE(a.solution->size() == b.solution->size());
        }
    }
}
