#include <doctest.h>

#include <array>
#include <cmath>

#include "bpbvd/generators.hpp"
#include "bpbvd/kernel.hpp"
#include "bpbvd/oracle.hpp"
#include "contracts.hpp"
#include "oracles.hpp"
#include "rule_instances.hpp"

using namespace bpbvd;

namespace {

bool yes(const Instance& inst) { return inst.k >= 0 && brute_force(inst, 64).feasible(); }

bool trees_ok(const Graph& g, const VertexSet& a, int d, int k, const ADTreeResult& r) {
    return contracts::ad_trees_ok(g, a, d, k, r);
}

}  // namespace

TEST_CASE("approximation examples") {
    CHECK(approximate(shapes::cycle(5), PClass::cycles_and_k2(), 5).empty());

    auto one = approximate(shapes::diamond(), PClass::cycles_and_k2(), 4);
    CHECK(!one.empty());
    CHECK(one.size() <= 4);
    CHECK(is_in_phi(shapes::diamond().without(one), PClass::cycles_and_k2(), 4));

    for (std::size_t copies = 1; copies <= 3; ++copies) {
        Graph g = shapes::disjoint_copies(shapes::diamond(), copies);
        auto u = approximate(g, PClass::cycles_and_k2(), 4);
        CHECK(u.size() <= 4 * copies);
        CHECK(is_in_phi(g.without(u), PClass::cycles_and_k2(), 4));
    }

    auto detail = approximate_detailed(shapes::disjoint_copies(shapes::complete(4), 2), PClass::cycles_and_k2(), 3);
    CHECK(detail.obstructions == 2);
    CHECK(detail.lower_bound >= 2);
}

TEST_CASE("approximation lower bound never exceeds the optimum") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Graph g = random_graph(6 + seed % 4, 0.4, seed + 123);
        for (const char* name : {"biconnected", "cliques", "cycles"})
            for (int d = 2; d <= 4; ++d) {
                const PClass p = class_by_name(name);
                auto r = approximate_detailed(g, p, d);
                const int opt = oracle::min_deletion(g, oracle::kind_of(name), d, 4);
                REQUIRE(oracle::in_phi(g.without(r.solution), oracle::kind_of(name), d));
                if (opt >= 0) REQUIRE(r.lower_bound <= static_cast<std::size_t>(opt));
            }
    }
}

TEST_CASE("(A,d)-tree examples") {
    // Only two A-vertices: the construction settles for the empty separator.
    auto sparse = find_ad_trees(shapes::path(3), {0, 2}, 3, 1);
    REQUIRE_FALSE(sparse.found_trees());
    CHECK(sparse.separator->empty());

    auto path = find_ad_trees(shapes::path(3), {0, 1, 2}, 3, 1);
    REQUIRE(path.found_trees());
    REQUIRE(path.trees.size() == 1);
    CHECK(path.trees[0].vertices == VertexSet{0, 1, 2});

    auto star = find_ad_trees(shapes::star(6), {1, 2, 3, 4, 5, 6}, 3, 2);
    REQUIRE_FALSE(star.found_trees());
    CHECK(set_contains(*star.separator, 0));
    CHECK(trees_ok(shapes::star(6), {1, 2, 3, 4, 5, 6}, 3, 2, star));

    Graph two = shapes::disjoint_copies(shapes::path(3), 2);
    auto both = find_ad_trees(two, {0, 1, 2, 3, 4, 5}, 3, 2);
    REQUIRE(both.found_trees());
    CHECK(both.trees.size() == 2);
    CHECK(trees_ok(two, {0, 1, 2, 3, 4, 5}, 3, 2, both));

    CHECK_THROWS_AS(find_ad_trees(two, {0}, 0, 1), std::invalid_argument);
}

TEST_CASE("(A,d)-tree contract on random inputs") {
    int trees = 0, separators = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        SplitMix64 rng(seed);
        Graph g = random_graph(5 + rng.below(10), 0.1 + 0.05 * static_cast<double>(rng.below(6)), rng.next());
        VertexSet a;
        for (Vertex v : g.vertices())
            if (rng.below(2)) a.push_back(v);
        const int d = 1 + static_cast<int>(rng.below(4)), k = 1 + static_cast<int>(rng.below(3));
        auto r = find_ad_trees(g, a, d, k);
        CAPTURE(seed);
        REQUIRE(trees_ok(g, a, d, k, r));
        REQUIRE(check_ad_tree_result(g, a, d, k, r).empty());
        (r.found_trees() ? trees : separators)++;
    }
    CHECK(trees > 20);
    CHECK(separators > 20);
}

TEST_CASE("expansion examples") {
    auto one = expansion({0}, {1, 2}, {{0, 1}, {0, 2}}, 2);
    CHECK(one.x_prime == VertexSet{0});
    CHECK(one.phi.at(0) == VertexSet{1, 2});

    const std::vector<std::pair<Vertex, Vertex>> privates{{0, 10}, {0, 11}, {1, 12}, {1, 13}};
    auto two = expansion({0, 1}, {10, 11, 12, 13}, privates, 2);
    CHECK(two.x_prime == VertexSet{0, 1});
    CHECK(two.phi.at(0) == VertexSet{10, 11});
    CHECK(two.phi.at(1) == VertexSet{12, 13});

    CHECK_THROWS_AS(expansion({0, 1}, {10, 11, 12}, privates, 2), std::invalid_argument);
}

TEST_CASE("expansion output satisfies its contract") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        SplitMix64 rng(seed);
        const int alpha = 1 + static_cast<int>(rng.below(3));
        const std::size_t nx = 1 + rng.below(4);
        const std::size_t ny = alpha * nx + rng.below(6);
        VertexSet x, y;
        for (std::size_t i = 0; i < nx; ++i) x.push_back(static_cast<Vertex>(i));
        for (std::size_t i = 0; i < ny; ++i) y.push_back(static_cast<Vertex>(100 + i));
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex yv : y) {
            edges.emplace_back(x[rng.below(nx)], yv);
            for (Vertex xv : x)
                if (rng.below(4) == 0) edges.emplace_back(xv, yv);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        auto r = expansion(x, y, edges, alpha);
        CAPTURE(seed);
        REQUIRE(check_expansion(x, y, edges, alpha, r).empty());
        // N(Y') ∩ X = X', recomputed here.
        VertexSet reach;
        for (auto [xv, yv] : edges)
            if (set_contains(r.y_prime, yv)) reach.push_back(xv);
        normalize(reach);
        REQUIRE(reach == r.x_prime);
    }
}

TEST_CASE("kernelize examples") {
    // One component already in Phi next to an obstruction.
    Graph g = shapes::disjoint_copies(shapes::complete(4), 1);
    for (Vertex v = 0; v < 3; ++v) g.add_vertex();
    g.add_edge(4, 5);
    g.add_edge(5, 6);
    Instance inst{g, PClass::cycles_and_k2(), 3, 1};
    auto r = kernelize(inst);
    REQUIRE(!r.trace.entries.empty());
    CHECK(r.trace.entries.front().rule == 1);
    CHECK(r.trace.entries.front().vertices == VertexSet{4, 5, 6});
    CHECK(r.instance.d == 3);

    // Pendant triangle on a K4 with a tail: rule 2 removes it.
    Graph h = shapes::complete(4);
    Vertex a = h.add_vertex(), b = h.add_vertex();
    h.add_edge(0, a);
    h.add_edge(0, b);
    h.add_edge(a, b);
    Instance pend{h, PClass::cliques(), 3, 1};
    auto rp = rules::cut_vertex(pend);
    REQUIRE(rp);
    CHECK(rp->rule == 2);
    CHECK(rp->vertices == VertexSet{a, b});

    // k + 1 disjoint (N(v), d)-trees around v with k = 0: rule 4 removes v, then No.
    Graph star(1);
    for (int t = 0; t < 2; ++t) {
        Vertex x = star.add_vertex(), y = star.add_vertex(), z = star.add_vertex();
        star.add_edge(x, y);
        star.add_edge(y, z);
        star.add_edge(0, x);
        star.add_edge(0, y);
        star.add_edge(0, z);
    }
    Instance sun{star, PClass::cycles_and_k2(), 3, 0};
    auto rs = rules::sunflower_one(sun);
    REQUIRE(rs);
    CHECK(rs->vertices == VertexSet{0});
    CHECK(sun.k == -1);
    CHECK(kernelize(Instance{star, PClass::cycles_and_k2(), 3, 0}).is_no());
}

TEST_CASE("trace serialization") {
    KernelTrace t;
    TraceEntry e;
    e.rule = 2;
    e.vertices = {3, 4};
    e.size_after = 7;
    t.entries.push_back(e);
    CHECK(t.serialize() == "RULE 2 verts=3,4 size=7\nVERDICT reduced\n");
    t.verdict = KernelVerdict::No;
    t.no_reason = "disjoint-obstructions";
    CHECK(t.serialize() == "RULE 2 verts=3,4 size=7\nVERDICT no reason=disjoint-obstructions\n");
}

TEST_CASE("kernel size bound") {
    for (int d = 2; d <= 8; ++d)
        for (int k = 1; k <= 8; ++k) {
            const std::uint64_t kd7 = static_cast<std::uint64_t>(k * k) * static_cast<std::uint64_t>(std::pow(d, 7));
            REQUIRE(kernel_size_bound(d, k) <= kKernelConstant * kd7);
        }
    CHECK(kernel_size_bound(3, 0) == 0);
}

TEST_CASE("kernelize keeps verdicts and lifts solutions") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        SplitMix64 rng(seed);
        const char* name = std::array{"biconnected", "cliques", "cycles"}[rng.below(3)];
        Instance inst{random_graph(6 + rng.below(5), 0.2 + 0.1 * static_cast<double>(rng.below(4)), rng.next()),
                      class_by_name(name), 2 + static_cast<int>(rng.below(4)), static_cast<int>(rng.below(4))};
        auto r = kernelize(inst);
        CAPTURE(seed);
        // At d = 2 contracting v1v2 can turn v1v3 into an edge between two degree-3 vertices.
        if (inst.d >= 3) REQUIRE(r.stats.potential_violations == 0);
        const bool before = yes(inst);
        if (r.is_no()) {
            REQUIRE_FALSE(before);
            continue;
        }
        REQUIRE(yes(r.instance) == before);
        if (auto s = brute_force(r.instance, 64).solution) {
            auto lifted = lift_kernel_solution(inst, r, *s);
            REQUIRE(is_valid_solution(inst, lifted));
        }
    }
}

TEST_CASE("rule constructions fire and stay sound") {
    for (int rule = 1; rule <= 7; ++rule) {
        int fired = 0;
        for (std::uint64_t seed = 0; seed < 150 && fired < 10; ++seed) {
            const Instance inst = rule_instances::targeted(rule, seed * 7919 + static_cast<std::uint64_t>(rule));
            auto after = rule_instances::apply_rule(rule, inst);
            if (!after) continue;
            ++fired;
            CAPTURE(rule);
            CAPTURE(seed);
            REQUIRE(yes(inst) == yes(*after));
        }
        CAPTURE(rule);
        CHECK(fired == 10);
    }
}
