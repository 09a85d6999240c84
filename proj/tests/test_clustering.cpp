#include <doctest.h>

#include "bpbvd/blocks.hpp"
#include "bpbvd/clustering.hpp"
#include "bpbvd/generators.hpp"
#include "oracles.hpp"

using namespace bpbvd;

namespace {

std::vector<VertexSet> sorted(std::vector<VertexSet> v) {
    std::sort(v.begin(), v.end());
    return v;
}

const char* kClasses[] = {"biconnected", "cliques", "cycles"};

}  // namespace

TEST_CASE("find_obstruction examples") {
    CHECK_FALSE(find_obstruction(shapes::cycle(5), PClass::cycles_and_k2(), 5));

    auto diamond = find_obstruction(shapes::diamond(), PClass::cycles_and_k2(), 4);
    REQUIRE(diamond);
    CHECK(diamond->vertices.size() == 4);
    CHECK(diamond->kind == ObstructionKind::InB2dNotP);

    auto c4 = find_obstruction(shapes::cycle(4), PClass::cliques(), 3);
    REQUIRE(c4);
    CHECK(c4->vertices == VertexSet{0, 1, 2, 3});
    CHECK(c4->kind == ObstructionKind::TooBig);

    CHECK_FALSE(find_obstruction(shapes::complete(6), PClass::cliques(), 2));
    CHECK_THROWS_AS(find_obstruction(shapes::cycle(3), PClass::custom("none", [](const Graph&) { return false; }, true), 3),
                    std::invalid_argument);
}

TEST_CASE("returned obstructions are biconnected and sized by kind") {
    int seen = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Graph g = random_graph(4 + seed % 8, 0.25 + 0.1 * static_cast<double>(seed % 4), seed);
        for (const char* name : kClasses)
            for (int d = 3; d <= 5; ++d) {
                const PClass p = class_by_name(name);
                auto o = find_obstruction(g, p, d);
                if (!o) continue;
                ++seen;
                const int size = static_cast<int>(o->vertices.size());
                CAPTURE(seed);
                REQUIRE(oracle::cut_free(g, o->vertices));
                REQUIRE(size >= 2);
                if (o->kind == ObstructionKind::InB2dNotP) {
                    REQUIRE(size <= d);
                    REQUIRE_FALSE(oracle::class_accepts(oracle::kind_of(name), g, o->vertices));
                } else {
                    REQUIRE(size >= d + 1);
                    REQUIRE(size <= 2 * d - 2);
                }
            }
    }
    CHECK(seen > 100);
}

TEST_CASE("Free means no induced obstruction exists") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Graph g = random_graph(4 + seed % 6, 0.2 + 0.1 * static_cast<double>(seed % 4), seed + 400);
        for (const char* name : kClasses)
            for (int d = 3; d <= 5; ++d) {
                if (find_obstruction(g, class_by_name(name), d)) continue;
                const VertexSet verts = g.vertices();
                for (std::uint64_t mask = 1; mask < (1ULL << verts.size()); ++mask) {
                    VertexSet s = oracle::subset(verts, mask);
                    const int size = static_cast<int>(s.size());
                    if (size < 2 || size > 2 * d - 2 || !oracle::cut_free(g, s)) continue;
                    CAPTURE(seed);
                    REQUIRE(size <= d);
                    REQUIRE(oracle::class_accepts(oracle::kind_of(name), g, s));
                }
            }
    }
}

TEST_CASE("clusters examples") {
    auto bowtie = clusters(shapes::bowtie(), PClass::cliques(), 3);
    CHECK(sorted(bowtie.clusters) == std::vector<VertexSet>{{0, 1, 2}, {2, 3, 4}});
    CHECK(bowtie.external_vertices == VertexSet{2});

    auto path = clusters(shapes::path(3), PClass::cliques(), 3);
    CHECK(sorted(path.clusters) == std::vector<VertexSet>{{0, 1}, {1, 2}});
    CHECK(path.external_vertices == VertexSet{1});

    auto c5 = clusters(shapes::cycle(5), PClass::cycles_and_k2(), 5);
    CHECK(c5.clusters == std::vector<VertexSet>{{0, 1, 2, 3, 4}});
    CHECK(c5.external_vertices.empty());

    Graph lonely(2);
    CHECK(clusters(lonely, PClass::cliques(), 3).clusters.size() == 2);

    try {
        clusters(shapes::diamond(), PClass::cycles_and_k2(), 4);
        FAIL("expected NotClusterable");
    } catch (const NotClusterable& e) {
        CHECK(e.obstruction().vertices.size() == 4);
    }
}

TEST_CASE("check_clusterable examples") {
    CHECK(check_clusterable(shapes::bowtie(), clusters(shapes::bowtie(), PClass::cliques(), 3)));
    ClusterSet both{{{0, 1, 2}, {1, 2, 3}}, {1, 2}};
    CHECK_FALSE(check_clusterable(shapes::diamond(), both));
    CHECK(check_clusterable(Graph(), ClusterSet{}));
}

TEST_CASE("clusters cover edges once, are members and maximal") {
    int free_graphs = 0;
    for (std::uint64_t seed = 0; seed < 250; ++seed) {
        Graph g = random_graph(3 + seed % 8, 0.2 + 0.1 * static_cast<double>(seed % 4), seed + 900);
        for (const char* name : kClasses)
            for (int d = 3; d <= 5; ++d) {
                const PClass p = class_by_name(name);
                const auto kind = oracle::kind_of(name);
                if (find_obstruction(g, p, d)) continue;
                ++free_graphs;
                const auto cs = clusters(g, p, d);
                CAPTURE(seed);
                for (const auto& e : g.edges()) {
                    int owners = 0;
                    for (const auto& c : cs.clusters) owners += set_contains(c, e.u) && set_contains(c, e.v);
                    REQUIRE(owners == 1);
                }
                for (Vertex v : g.vertices()) {
                    int owners = 0;
                    for (const auto& c : cs.clusters) owners += set_contains(c, v);
                    REQUIRE(owners >= 1);
                    REQUIRE((owners >= 2) == set_contains(cs.external_vertices, v));
                }
                for (const auto& c : cs.clusters) {
                    const bool member = c.size() <= 2 ? oracle::connected(g, c)
                                                      : (static_cast<int>(c.size()) <= d && oracle::cut_free(g, c) &&
                                                         oracle::class_accepts(kind, g, c));
                    REQUIRE(member);
                    // Maximal: no neighbour can be added.
                    for (Vertex v : c)
                        for (Vertex w : g.neighbors(v)) {
                            if (set_contains(c, w)) continue;
                            VertexSet bigger = c;
                            bigger.push_back(w);
                            normalize(bigger);
                            const bool still = static_cast<int>(bigger.size()) <= d && oracle::cut_free(g, bigger) &&
                                               oracle::class_accepts(kind, g, bigger);
                            REQUIRE_FALSE(still);
                        }
                }
                REQUIRE(check_clusterable(g, cs));
            }
    }
    CHECK(free_graphs > 200);
}

TEST_CASE("shortest_cycle") {
    CHECK(shortest_cycle(shapes::path(5), 10).empty());
    CHECK(shortest_cycle(shapes::cycle(6), 5).empty());
    auto c = shortest_cycle(shapes::diamond(), 10);
    CHECK(c.size() == 3);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Graph g = random_graph(4 + seed % 7, 0.3, seed);
        auto cyc = shortest_cycle(g, g.num_vertices());
        std::size_t best = 0;
        for (const auto& s : oracle::cycle_vertex_sets(g))
            if (best == 0 || s.size() < best) best = s.size();
        REQUIRE(cyc.size() == best);
        for (std::size_t i = 0; i < cyc.size(); ++i) REQUIRE(g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]));
    }
}
