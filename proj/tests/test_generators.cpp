#include "doctest.h"

#include "alphacover/aecc.hpp"
#include "alphacover/alpha.hpp"
#include "alphacover/ecc_alpha.hpp"
#include "alphacover/ecp_alpha.hpp"
#include "alphacover/errors.hpp"
#include "alphacover/generators.hpp"
#include "alphacover/tree_decomposition.hpp"
#include "support/support.hpp"

using namespace alphacover;
using namespace testkit;

namespace {

bool aecc_yes(const AnnotatedInstance& inst) { return aecc_bruteforce(inst).has_value(); }

// Gadget graphs outgrow the brute-force guard; the treewidth DP is exact on any decomposition.
int exact_alpha(const Graph& g) {
    if (g.n() <= kMaxBruteforceAlphaVertices) return alpha_bruteforce(g).alpha;
    return alpha_treewidth_max(g, min_fill_decomposition(g)).alpha;
}

std::vector<Graph> bipartite_graphs_with_edges(int max_n) {
    std::vector<Graph> out;
    for (int n = 2; n <= max_n; ++n)
        for (const Graph& g : all_graphs(n))
            if (g.m() > 0 && !bipartition(g).empty()) out.push_back(g);
    return out;
}

}  // namespace

TEST_CASE("vcc gadget examples") {
    GadgetOutput k2 = gadget_vcc_to_aecc(path(2), 1);
    CHECK(k2.g == complete(4));
    CHECK(k2.b == EdgeSet{{0, 2}, {1, 3}});
    CHECK(aecc_yes(k2.annotated()));

    CHECK(aecc_yes(gadget_vcc_to_aecc(cycle(5), 3).annotated()));
    CHECK_FALSE(aecc_yes(gadget_vcc_to_aecc(cycle(5), 2).annotated()));

    GadgetOutput empty = gadget_vcc_to_aecc(Graph(3), 3);
    CHECK(empty.b.size() == 3);
    CHECK(aecc_yes(empty.annotated()));
    CHECK_FALSE(aecc_yes(gadget_vcc_to_aecc(Graph(3), 2).annotated()));
    CHECK_FALSE(empty.provenance.empty());
}

TEST_CASE("vcc gadget is equivalent for every source on at most 5 vertices") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : all_graphs(n)) {
            const int vcc = vertex_clique_cover_bruteforce(g);
            CHECK(vcc == vertex_clique_cover_number(g));
            for (int k = 0; k <= n; ++k) {
                GadgetOutput out = gadget_vcc_to_aecc(g, k);
                CHECK(bipartition(complement(out.g)).size() == static_cast<std::size_t>(2 * n));
                CHECK(aecc_yes(out.annotated()) == (vcc <= k));
            }
        }
    }
}

TEST_CASE("hardness gadget examples") {
    AnnotatedInstance tiny{path(2), {{0, 1}}, 1};
    GadgetOutput t = gadget_aecc_to_eccalpha(tiny);
    CHECK(t.k == 0);
    REQUIRE(t.alpha);
    CHECK(*t.alpha == 3);
    CHECK(alpha_bruteforce(t.g).alpha == 3);

    GadgetOutput from_k2 = gadget_aecc_to_eccalpha(gadget_vcc_to_aecc(path(2), 1).annotated());
    CHECK(from_k2.g.n() == 4 + 1 + 4 + 4);  // |R| = 6 - 2
    CHECK(*from_k2.alpha == 4 + 4 + 1);
    CHECK(alpha_bruteforce(from_k2.g).alpha == *from_k2.alpha);

    CHECK_THROWS_AS(gadget_aecc_to_eccalpha({path(3), {{0, 1}}, 1}), PreconditionError);
    CHECK_THROWS_AS(gadget_aecc_to_eccalpha({path(2), {{0, 1}}, 0}), PreconditionError);
    CHECK_THROWS_AS(gadget_aecc_to_eccalpha({Graph(6, {{0, 1}, {2, 3}, {4, 5}}), {{0, 1}, {2, 3}, {4, 5}}, 1}), PreconditionError);
}

TEST_CASE("hardness gadget preserves the answer") {
    auto check_chain = [](const AnnotatedInstance& inst) {
        GadgetOutput out = gadget_aecc_to_eccalpha(inst);
        CHECK(exact_alpha(out.g) == *out.alpha);
        CHECK(solve_ecc_alpha(out.g, out.k).has_value() == aecc_yes(inst));
    };
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : all_graphs(n))
            for (int k = 1; k <= n; ++k) check_chain(gadget_vcc_to_aecc(g, k).annotated());
    // All co-bipartite graphs with sides {0,1} and {2,3} and every perfect matching inside them.
    for (unsigned cross = 0; cross < 16; ++cross) {
        std::vector<Edge> edges{{0, 1}, {2, 3}};
        const Edge pairs[] = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
        for (unsigned i = 0; i < 4; ++i)
            if (cross >> i & 1U) edges.push_back(pairs[i]);
        Graph g(4, edges);
        for (EdgeSet b : {EdgeSet{{0, 1}, {2, 3}}, EdgeSet{{0, 2}, {1, 3}}, EdgeSet{{0, 3}, {1, 2}}}) {
            if (!g.adjacent(b[0].u, b[0].v) || !g.adjacent(b[1].u, b[1].v)) continue;
            for (int k = 1; k <= 3; ++k) check_chain({g, b, k});
        }
    }
}

TEST_CASE("biclique gadget examples") {
    CHECK(solve_ecc_alpha(gadget_biclique_to_eccalpha(path(2), 1).g, 1));
    CHECK(biclique_cover_bruteforce(path(4)) == 2);
    CHECK(solve_ecc_alpha(gadget_biclique_to_eccalpha(path(4), 2).g, 2));
    CHECK_FALSE(solve_ecc_alpha(gadget_biclique_to_eccalpha(path(4), 1).g, 1));
    CHECK(biclique_cover_bruteforce(cycle(4)) == 1);
    CHECK(solve_ecc_alpha(gadget_biclique_to_eccalpha(cycle(4), 1).g, 1));
    CHECK_THROWS_AS(gadget_biclique_to_eccalpha(complete(3), 1), PreconditionError);
    CHECK_THROWS_AS(gadget_biclique_to_eccalpha(Graph(2), 1), PreconditionError);
}

TEST_CASE("biclique gadget preserves the answer") {
    for (const Graph& g : bipartite_graphs_with_edges(5)) {
        const int bc = biclique_cover_bruteforce(g);
        for (int k = 0; k <= 4; ++k) {
            GadgetOutput out = gadget_biclique_to_eccalpha(g, k);
            CHECK(alpha_bruteforce(out.g).alpha == 2);
            CHECK(solve_ecc_alpha(out.g, out.k).has_value() == (bc <= k));
        }
    }
}

TEST_CASE("pendant expansion") {
    Graph tri = pendant_expand(complete(3));
    CHECK(tri == net());
    CHECK(ecp_bruteforce(tri).size == 4);
    Graph p4 = pendant_expand(path(2));
    CHECK(ecp_bruteforce(p4).size == 3);
    CHECK(alpha_bruteforce(p4).alpha == 2);
    CHECK(ecp_bruteforce(pendant_expand(cycle(4))).size == 8);
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : all_graphs(n)) {
            if (g.m() > 8) continue;
            Graph e = pendant_expand(g);
            CHECK(alpha_bruteforce(e).alpha == n);
            CHECK(ecp_bruteforce(e).size == n + ecp_bruteforce(g).size);
        }
    }
}

TEST_CASE("random generators are seed-deterministic") {
    Graph g = random_graph(8, 10, 42);
    CHECK(g == Graph(8, {{0, 1}, {0, 6}, {0, 7}, {1, 2}, {1, 4}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {4, 7}}));
    CHECK(random_graph(8, 10, 42) == g);
    CHECK(random_graph(8, 10, 43) != g);
    Graph d = random_degenerate(8, 2, 42);
    CHECK(d == Graph(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 6}, {0, 7}, {1, 2}, {1, 6}, {1, 7}, {2, 3}, {2, 4}, {3, 5},
                         {4, 5}}));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        CHECK(random_graph(12, 20, seed).m() == 20);
        CHECK(degeneracy(random_degenerate(15, 3, seed)).degeneracy <= 3);
    }
    CHECK(random_graph(5, 10, 1) == complete(5));
    CHECK_THROWS_AS(random_graph(5, 11, 1), PreconditionError);
    CHECK_THROWS_AS(random_degenerate(5, -1, 1), PreconditionError);
}
