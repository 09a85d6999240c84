#include <doctest.h>

#include <sstream>

#include "bpbvd/blocks.hpp"
#include "bpbvd/generators.hpp"
#include "bpbvd/io.hpp"
#include "bpbvd/pclass.hpp"
#include "oracles.hpp"

using namespace bpbvd;

namespace {

Graph triangle() { return shapes::cycle(3); }

std::vector<VertexSet> sorted_blocks(const Graph& g) {
    auto b = block_decomposition(g).blocks;
    std::sort(b.begin(), b.end());
    return b;
}

}  // namespace

TEST_CASE("graph basics") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 1);
    CHECK(g.adjacent(1, 0));
    CHECK(g.adjacent(1, 2));
    CHECK(g.num_edges() == 2);
    CHECK_THROWS_AS(g.add_edge(3, 3), std::invalid_argument);
    g.add_edge(0, 1);
    CHECK(g.num_edges() == 2);

    g.remove_vertex(1);
    CHECK_FALSE(g.contains(1));
    CHECK(g.num_edges() == 0);
    CHECK(g.add_vertex() == 4);
    CHECK(g.id_bound() == 5);
    CHECK(g.vertices() == VertexSet{0, 2, 3, 4});
}

TEST_CASE("adjacency stays symmetric under random edits") {
    SplitMix64 rng(7);
    Graph g = random_graph(12, 0.4, 3);
    for (int step = 0; step < 200; ++step) {
        auto verts = g.vertices();
        if (verts.size() < 2) break;
        Vertex a = verts[rng.below(verts.size())], b = verts[rng.below(verts.size())];
        switch (rng.below(4)) {
            case 0:
                if (a != b) g.add_edge(a, b);
                break;
            case 1:
                if (g.adjacent(a, b)) g.remove_edge(a, b);
                break;
            case 2:
                if (a != b) g.contract(a, b);
                break;
            default:
                if (rng.below(4) == 0) g.remove_vertex(a);
        }
        std::size_t half_edges = 0;
        for (Vertex v : g.vertices()) {
            for (Vertex w : g.neighbors(v)) {
                REQUIRE(w != v);
                REQUIRE(g.contains(w));
                REQUIRE(g.adjacent(w, v));
            }
            half_edges += g.degree(v);
        }
        REQUIRE(half_edges == 2 * g.num_edges());
    }
}

TEST_CASE("mutate copies and leaves the input alone") {
    Graph t = triangle();
    Graph k2 = mutate(t, mutation::DeleteVertices{{0}});
    CHECK(k2.num_vertices() == 2);
    CHECK(k2.num_edges() == 1);
    CHECK(t.num_vertices() == 3);

    Graph c4 = shapes::cycle(4);
    Graph contracted = mutate(c4, mutation::ContractEdge{0, 1});
    CHECK(contracted.num_vertices() == 3);
    CHECK(contracted.num_edges() == 3);
    CHECK(is_biconnected(contracted));

    Graph empty = mutate(t, mutation::DeleteVertices{{0, 1, 2}});
    CHECK(empty.empty());

    CHECK_THROWS_AS(mutate(t, mutation::DeleteVertices{{9}}), std::out_of_range);
    CHECK_THROWS_AS(mutate(t, mutation::AddEdge{0, 7}), std::out_of_range);

    Graph more = mutate(t, mutation::AddVertex{});
    CHECK(more.num_vertices() == 4);
    Graph fewer = mutate(t, mutation::DeleteEdges{{{0, 1}}});
    CHECK(fewer.num_edges() == 2);
}

TEST_CASE("deleted ids are never reissued") {
    Graph g(3);
    g.remove_vertex(2);
    CHECK(g.add_vertex() == 3);
    CHECK_FALSE(g.contains(2));
}

TEST_CASE("block decomposition examples") {
    CHECK(sorted_blocks(triangle()) == std::vector<VertexSet>{{0, 1, 2}});
    CHECK(block_decomposition(triangle()).cut_vertices.empty());

    auto path = block_decomposition(shapes::path(3));
    CHECK(sorted_blocks(shapes::path(3)) == std::vector<VertexSet>{{0, 1}, {1, 2}});
    CHECK(path.cut_vertices == VertexSet{1});

    auto bowtie = block_decomposition(shapes::bowtie());
    CHECK(sorted_blocks(shapes::bowtie()) == std::vector<VertexSet>{{0, 1, 2}, {2, 3, 4}});
    CHECK(bowtie.cut_vertices == VertexSet{2});

    CHECK(block_decomposition(Graph()).blocks.empty());
}

TEST_CASE("block decomposition matches brute force on small graphs") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const std::size_t n = 2 + seed % 9;
        const double p = 0.15 + 0.1 * static_cast<double>(seed % 6);
        Graph g = random_graph(n, p, seed);
        if (seed % 3 == 0 && n > 3) g.remove_vertex(static_cast<Vertex>(seed % n));
        CAPTURE(seed);
        REQUIRE(sorted_blocks(g) == oracle::blocks(g));
    }
}

TEST_CASE("block decomposition structural invariants") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Graph g = random_graph(3 + seed % 12, 0.1 + 0.05 * static_cast<double>(seed % 8), seed + 1000);
        auto bd = block_decomposition(g);
        CAPTURE(seed);

        // Every edge in exactly one block.
        for (const auto& e : g.edges()) {
            int owners = 0;
            for (const auto& b : bd.blocks) owners += set_contains(b, e.u) && set_contains(b, e.v);
            REQUIRE(owners == 1);
        }
        std::size_t total = 0;
        for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
            total += bd.blocks[b].size() - 1;
            REQUIRE(bd.block_edges[b] == oracle::induced_edges(g, bd.blocks[b]));
            for (Vertex v : bd.blocks[b]) REQUIRE(set_contains(bd.block_cuts[b], v) == bd.is_cut(v));
        }
        REQUIRE(total == g.num_vertices() - count_components(g));

        // Cut vertices per definition.
        for (Vertex v : g.vertices())
            REQUIRE(bd.is_cut(v) == (count_components(g.without(v)) > count_components(g) - (g.degree(v) == 0)));

        // Block tree is a forest: nodes - edges = components of G.
        std::size_t tree_edges = 0;
        for (std::size_t b = 0; b < bd.blocks.size(); ++b) tree_edges += bd.block_degree(b);
        REQUIRE(bd.blocks.size() + bd.cut_vertices.size() - tree_edges == count_components(g));
    }
}

TEST_CASE("is_in_phi examples") {
    const Graph c4 = shapes::cycle(4);
    CHECK(is_in_phi(c4, PClass::cycles_and_k2(), 4));
    CHECK_FALSE(is_in_phi(c4, PClass::cycles_and_k2(), 3));
    CHECK_FALSE(is_in_phi(shapes::diamond(), PClass::cliques(), 4));
    CHECK(is_in_phi(shapes::bowtie(), PClass::cliques(), 3));
    CHECK(is_in_phi(Graph(5), PClass::cliques(), 1));
    CHECK_FALSE(is_in_phi(shapes::path(2), PClass::cliques(), 1));
}

TEST_CASE("is_in_phi agrees with the block oracle") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        Graph g = random_graph(2 + seed % 9, 0.2 + 0.1 * static_cast<double>(seed % 5), seed + 50);
        for (const char* name : {"biconnected", "cliques", "cycles"})
            for (int d = 1; d <= 6; ++d) {
                CAPTURE(seed);
                CAPTURE(name);
                CAPTURE(d);
                REQUIRE(is_in_phi(g, class_by_name(name), d) == oracle::in_phi(g, oracle::kind_of(name), d));
            }
    }
}

TEST_CASE("all-biconnected with d = n accepts every graph") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Graph g = random_graph(1 + seed % 14, 0.5, seed);
        REQUIRE(is_in_phi(g, PClass::all_biconnected(), static_cast<int>(g.num_vertices())));
    }
}

TEST_CASE("is_in_phi is hereditary for named classes") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Graph g = random_graph(3 + seed % 8, 0.2 + 0.1 * static_cast<double>(seed % 4), seed + 77);
        for (const char* name : {"biconnected", "cliques", "cycles"})
            for (int d = 2; d <= 5; ++d) {
                const PClass p = class_by_name(name);
                if (!is_in_phi(g, p, d)) continue;
                for (Vertex v : g.vertices()) REQUIRE(is_in_phi(g.without(v), p, d));
            }
    }
}

TEST_CASE("named recognizers match closed forms and are block-hereditary") {
    std::vector<Graph> samples;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Graph g = random_graph(2 + seed % 7, 0.6, seed);
        if (is_biconnected(g) && g.num_vertices() >= 2) samples.push_back(g);
    }
    for (std::size_t n = 2; n <= 7; ++n) {
        samples.push_back(shapes::complete(n));
        if (n >= 3) samples.push_back(shapes::cycle(n));
    }
    for (const auto& g : samples) {
        const VertexSet all = g.vertices();
        CHECK(PClass::all_biconnected().accepts(g));
        CHECK(PClass::cliques().accepts(g) == oracle::class_accepts(oracle::Kind::Cliques, g, all));
        CHECK(PClass::cycles_and_k2().accepts(g) == oracle::class_accepts(oracle::Kind::Cycles, g, all));
    }
    std::vector<Graph> cliques, cycles;
    for (const auto& g : samples) {
        if (PClass::cliques().accepts(g)) cliques.push_back(g);
        if (PClass::cycles_and_k2().accepts(g)) cycles.push_back(g);
    }
    CHECK(sample_block_hereditary(PClass::cliques(), cliques, 200, 1));
    CHECK(sample_block_hereditary(PClass::cycles_and_k2(), cycles, 200, 2));
    CHECK(sample_block_hereditary(PClass::all_biconnected(), samples, 200, 3));

    // A class that is not block-hereditary gets caught.
    const PClass even = PClass::custom("even", [](const Graph& b) { return b.num_vertices() % 2 == 0; });
    CHECK_FALSE(sample_block_hereditary(even, std::vector<Graph>{shapes::complete(4)}, 200, 4));
    CHECK_THROWS_AS(class_by_name("planar"), std::invalid_argument);
}

TEST_CASE("edge list parsing") {
    Graph g = parse_edge_list_string("# diamond\n4 5\n0 1\n0 2\n\n1 2 # chord\n1 3\n2 3\n");
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 5);
    CHECK(g == shapes::diamond());

    CHECK(parse_edge_list_string(to_edge_list(g)) == g);

    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            parse_edge_list_string(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("3 1\n1 0\n") == 2);
    CHECK(line_of("3 1\n0 3\n") == 2);
    CHECK(line_of("3 2\n0 1\n# c\n0 1\n") == 4);
    CHECK(line_of("3 2\n0 1\n") > 0);
    CHECK(line_of("x\n") == 1);
    CHECK(line_of("") > 0);
    CHECK(line_of("2 1\n0 1 5\n") == 2);
}

TEST_CASE("renumbered output keeps the structure") {
    Graph g = shapes::cycle(6);
    g.remove_vertex(2);
    CHECK_THROWS(to_edge_list(g));
    Graph back = parse_edge_list_string(to_edge_list_renumbered(g));
    CHECK(back.num_vertices() == 5);
    CHECK(back.num_edges() == 4);
}
