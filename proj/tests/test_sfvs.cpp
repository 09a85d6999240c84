#include <doctest.h>

#include "bpbvd/clustering.hpp"
#include "bpbvd/generators.hpp"
#include "bpbvd/sfvs.hpp"
#include "oracles.hpp"

using namespace bpbvd;

namespace {

Graph three_triangles() {
    // Triangles {0,1,2}, {0,3,4}, {0,5,6} sharing vertex 0.
    Graph g(7);
    for (Vertex a = 1; a < 7; a += 2) {
        g.add_edge(0, a);
        g.add_edge(0, a + 1);
        g.add_edge(a, a + 1);
    }
    return g;
}

SfvsInstance from_graph(const Graph& g, int k) {
    return build_sfvs_instance(g, clusters(g, PClass::cliques(), 3), k);
}

}  // namespace

TEST_CASE("construction examples") {
    auto bowtie = from_graph(shapes::bowtie(), 1);
    CHECK(bowtie.graph.num_vertices() == 7);
    CHECK(bowtie.terminals == VertexSet{2});
    // Every cycle through the terminal uses both of its split copies.
    for (const auto& c : oracle::cycle_vertex_sets(bowtie.graph)) {
        if (!set_contains(c, 2)) continue;
        int splits = 0;
        for (Vertex v : c) splits += bowtie.is_split(v);
        CHECK(splits == 2);
    }

    auto tri = from_graph(three_triangles(), 1);
    CHECK(tri.terminals == VertexSet{0});
    CHECK(tri.splits.size() == 3);
    CHECK(tri.graph.num_vertices() == 10);

    Graph c5 = shapes::cycle(5);
    auto plain = build_sfvs_instance(c5, clusters(c5, PClass::cycles_and_k2(), 5), 0);
    CHECK(plain.graph == c5);
    CHECK(plain.terminals.empty());
}

TEST_CASE("split vertices touch exactly their own terminal") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Graph g = random_graph(4 + seed % 6, 0.3, seed);
        for (const char* name : {"biconnected", "cliques", "cycles"}) {
            const PClass p = class_by_name(name);
            if (find_obstruction(g, p, 3)) continue;
            const auto cs = clusters(g, p, 3);
            const auto inst = build_sfvs_instance(g, cs, 2);
            REQUIRE(inst.terminals == cs.external_vertices);
            for (const auto& s : inst.splits) {
                int terminal_neighbours = 0;
                for (Vertex w : inst.graph.neighbors(s.split)) terminal_neighbours += set_contains(inst.terminals, w);
                REQUIRE(terminal_neighbours == 1);
                REQUIRE(inst.graph.adjacent(s.split, s.original));
            }
        }
    }
}

TEST_CASE("solve_sfvs examples") {
    SfvsInstance empty{shapes::cycle(4), {}, 0, 4, {}};
    auto r = solve_sfvs(empty);
    REQUIRE(r.solution);
    CHECK(r.solution->empty());

    SfvsInstance tri{shapes::cycle(3), {0}, 0, 3, {}};
    CHECK_FALSE(solve_sfvs(tri).feasible());
    tri.k = 1;
    auto one = solve_sfvs(tri);
    REQUIRE(one.solution);
    CHECK(one.solution->size() == 1);
    CHECK(*one.solution == VertexSet{0});

    // Two triangles sharing a vertex are both clusters, so nothing needs deleting.
    auto bowtie = from_graph(shapes::bowtie(), 1);
    auto b = solve_sfvs(bowtie);
    REQUIRE(b.solution);
    CHECK(b.solution->empty());
}

TEST_CASE("lift_solution examples") {
    auto bowtie = from_graph(shapes::bowtie(), 1);
    CHECK(lift_solution(bowtie, {}).empty());
    const Vertex split = bowtie.splits.front().split;
    CHECK(lift_solution(bowtie, {split}) == VertexSet{bowtie.splits.front().original});
    CHECK(lift_solution(bowtie, {0, 4}) == VertexSet{0, 4});
}

TEST_CASE("solver is exact and lifted solutions validate") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Graph g = random_graph(5 + seed % 5, 0.3 + 0.05 * static_cast<double>(seed % 3), seed + 31);
        for (const char* name : {"biconnected", "cliques", "cycles"})
            for (int d = 3; d <= 4; ++d) {
                const PClass p = class_by_name(name);
                if (find_obstruction(g, p, d)) continue;
                const auto cs = clusters(g, p, d);
                auto inst = build_sfvs_instance(g, cs, static_cast<int>(g.num_vertices()));
                const std::size_t best = oracle::min_sfvs(inst.graph, inst.terminals);
                auto r = solve_sfvs(inst);
                CAPTURE(seed);
                REQUIRE(r.solution);
                REQUIRE(r.solution->size() == best);
                REQUIRE(hits_terminal_cycles(inst.graph, inst.terminals, *r.solution));
                const VertexSet lifted = lift_solution(inst, *r.solution);
                REQUIRE(lifted.size() <= r.solution->size());
                REQUIRE(oracle::in_phi(g.without(lifted), oracle::kind_of(name), d));

                if (best > 0) {
                    inst.k = static_cast<int>(best) - 1;
                    REQUIRE_FALSE(solve_sfvs(inst).feasible());
                }
            }
    }
}

TEST_CASE("sfvs_search respects forbidden vertices") {
    SfvsInstance tri{shapes::cycle(3), {0}, 1, 3, {}};
    auto s = sfvs_search(tri.graph, tri.terminals, 1, {0});
    REQUIRE(s);
    CHECK(s->size() == 1);
    CHECK_FALSE(set_contains(*s, 0));
    CHECK_FALSE(sfvs_search(tri.graph, tri.terminals, 1, {0, 1, 2}));
}
