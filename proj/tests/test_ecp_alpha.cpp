#include <random>

#include "doctest.h"

#include "alphacover/alpha.hpp"
#include "alphacover/ecp_alpha.hpp"
#include "alphacover/errors.hpp"
#include "alphacover/generators.hpp"
#include "alphacover/oracle.hpp"
#include "alphacover/simplicial.hpp"
#include "support/support.hpp"

using namespace alphacover;
using namespace testkit;

namespace {

bool all_present(const CliqueFamily& inside, const CliqueFamily& required) {
    for (const VertexSet& c : required)
        if (std::find(inside.begin(), inside.end(), c) == inside.end()) return false;
    return true;
}

std::vector<VertexSet> minimal_covers_by_subsets(const Graph& h, int k) {
    std::vector<VertexSet> out;
    EdgeSet edges = h.edges();
    auto covers = [&](const VertexSet& s) {
        return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return contains(s, e.u) || contains(s, e.v); });
    };
    for (std::uint32_t mask = 0; mask < (1U << h.n()); ++mask) {
        VertexSet s;
        for (int v = 0; v < h.n(); ++v)
            if (mask >> v & 1U) s.push_back(v);
        if (static_cast<int>(s.size()) > k || !covers(s)) continue;
        bool minimal = std::none_of(s.begin(), s.end(), [&](Vertex x) { return covers(set_difference(s, VertexSet{x})); });
        if (minimal) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("ecp_exact examples") {
    CHECK(ecp_exact(complete(4), 1) == CliqueFamily{{0, 1, 2, 3}});
    CHECK_FALSE(ecp_exact(cycle(5), 4));
    auto c5 = ecp_exact(cycle(5), 5);
    REQUIRE(c5);
    CHECK(c5->size() == 5);
    CHECK_FALSE(ecp_exact(diamond(), 2));
    CHECK(ecp_exact(diamond(), 3));
    CHECK(ecp_exact(Graph(3), 0) == CliqueFamily{});
    CHECK_FALSE(ecp_exact(path(2), -1));
}

TEST_CASE("ecp_exact finds minimum partitions") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : all_graphs(n)) {
            int target = ecp_bruteforce(g).size;
            auto found = ecp_exact(g, static_cast<int>(g.m()));
            REQUIRE(found);
            CHECK(static_cast<int>(found->size()) == target);
            CHECK(verify_partition(g, *found).ok);
            if (target > 0) CHECK_FALSE(ecp_exact(g, target - 1));
        }
    }
}

TEST_CASE("ecp_bruteforce examples and de Bruijn-Erdos") {
    CHECK(ecp_bruteforce(complete(3)).size == 1);
    CHECK(ecp_bruteforce(diamond()).size == 3);
    CHECK(ecp_bruteforce(cycle(4)).size == 4);
    CHECK(ecc_bruteforce(diamond()).size == 2);
    for (int n = 3; n <= 5; ++n) {
        EcpResult r = ecp_bruteforce_restricted(complete(n), n - 1);
        CHECK(r.size >= n);
        CHECK(verify_partition(complete(n), r.partition).ok);
    }
    CHECK(ecp_bruteforce(complete(7)).size == 1);
    CHECK_THROWS_AS(ecp_bruteforce(complete(8)), SizeGuardError);
}

TEST_CASE("alpha_or_reject examples") {
    auto three = alpha_or_reject(disjoint_triangles(3), 1);
    REQUIRE(three);
    CHECK(three->alpha == 3);
    CHECK_FALSE(alpha_or_reject(cycle(5), 1));
    Graph paw(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    auto p = alpha_or_reject(paw, 1);
    REQUIRE(p);
    CHECK(p->alpha == 2);
    CHECK(is_independent(paw, p->witness));
    CHECK_THROWS_AS(alpha_or_reject(cycle(4), 0), PreconditionError);
    CHECK_THROWS_AS(alpha_or_reject(Graph(3, {{0, 1}}), 1), IsolatedVertexError);
}

TEST_CASE("alpha_or_reject is exact when it answers and sound when it rejects") {
    for (const Graph& g : graphs_without_isolated(7, false)) {
        int alpha = alpha_bruteforce(g).alpha;
        int ecp = g.n() <= 6 ? ecp_bruteforce(g).size : -1;
        for (int k = 1; k <= 2; ++k) {
            auto r = alpha_or_reject(g, k);
            if (r) {
                CHECK(r->alpha == alpha);
                CHECK(is_independent(g, r->witness));
            } else if (ecp >= 0) {
                CHECK(ecp > alpha + k);
            }
        }
    }
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 8 + trial % 5;
        Graph g = pendant_expand(random_graph(n / 2, std::min(n, n / 2 * (n / 2 - 1) / 2), rng()));
        auto r = alpha_or_reject(g, 2);
        if (r) CHECK(r->alpha == alpha_bruteforce(g).alpha);
    }
}

TEST_CASE("mandatory_cliques examples") {
    CHECK(mandatory_cliques(complete(5), 1) == CliqueFamily{{0, 1, 2, 3, 4}});
    CHECK(mandatory_cliques(cycle(5), 1) == CliqueFamily{});
    CHECK(mandatory_cliques(path(3), 1) == CliqueFamily{});
    // K7 is the smallest complete graph where the large-clique clause applies at k = 1.
    auto k7 = mandatory_cliques(complete(7), 1);
    REQUIRE(k7);
    CHECK(all_present(*k7, {{0, 1, 2, 3, 4, 5, 6}}));
}

TEST_CASE("mandatory cliques appear in every small enough partition") {
    for (const Graph& g : graphs_without_isolated(6, false)) {
        int alpha = alpha_bruteforce(g).alpha;
        for (int k = 1; k <= 2; ++k) {
            auto mandatory = mandatory_cliques(g, k);
            std::vector<CliqueFamily> partitions = enumerate_partitions(g, alpha + k);
            if (!mandatory) {
                CHECK(partitions.empty());
                continue;
            }
            for (std::size_t i = 0; i < mandatory->size(); ++i) {
                CHECK(is_clique(g, (*mandatory)[i]));
                for (std::size_t j = i + 1; j < mandatory->size(); ++j)
                    CHECK(intersection_size((*mandatory)[i], (*mandatory)[j]) <= 1);
            }
            for (const CliqueFamily& p : partitions) CHECK(all_present(p, *mandatory));
        }
    }
}

TEST_CASE("large cliques of a partition are mandatory") {
    // Every member with at least 6k+1 vertices must be in the mandatory set.
    for (int extra = 0; extra <= 2; ++extra) {
        std::vector<Edge> edges;
        for (int a = 0; a < 7; ++a)
            for (int b = a + 1; b < 7; ++b) edges.emplace_back(a, b);
        for (int i = 0; i < extra; ++i) edges.emplace_back(i, 7 + i);
        Graph g(7 + extra, edges);
        auto mandatory = mandatory_cliques(g, 1);
        REQUIRE(mandatory);
        CHECK(all_present(*mandatory, {{0, 1, 2, 3, 4, 5, 6}}));
    }
}

TEST_CASE("broken_conflict_graph examples") {
    CHECK(broken_conflict_graph(simplicial_report(bowtie()).simplicial_cliques).m() == 0);
    Graph k4 = broken_conflict_graph(simplicial_report(complete(4)).simplicial_cliques);
    CHECK(k4.n() == 1);
    CHECK(k4.m() == 0);
    Graph two = broken_conflict_graph({{0, 1, 2}, {0, 1, 3}});
    CHECK(two == Graph(2, {{0, 1}}));
}

TEST_CASE("minimal_vertex_covers_upto examples") {
    CHECK(minimal_vertex_covers_upto(path(2), 1) == std::vector<VertexSet>{{0}, {1}});
    CHECK(minimal_vertex_covers_upto(complete(3), 1).empty());
    CHECK(minimal_vertex_covers_upto(complete(3), 2) == std::vector<VertexSet>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(minimal_vertex_covers_upto(path(3), 1) == std::vector<VertexSet>{{1}});
    CHECK(minimal_vertex_covers_upto(Graph(2), 0) == std::vector<VertexSet>{{}});
}

TEST_CASE("minimal_vertex_covers_upto lists exactly the minimal covers") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& h : all_graphs(n))
            for (int k = 0; k <= 4; ++k) CHECK(minimal_vertex_covers_upto(h, k) == minimal_covers_by_subsets(h, k));
}

TEST_CASE("extend examples") {
    ExtendState two{{{0, 1, 2}, {3, 4, 5}}, {}, {}, 2, 1};
    CHECK(extend(disjoint_triangles(2), two) == CliqueFamily{{0, 1, 2}, {3, 4, 5}});

    ExtendState net_state{{{0, 3}, {1, 4}, {2, 5}}, {}, {}, 3, 1};
    auto net_result = extend(net(), net_state);
    REQUIRE(net_result);
    CHECK(net_result->size() == 4);
    CHECK(verify_partition(net(), *net_result).ok);

    ExtendState c4_state{{}, {}, {}, 2, 1};
    CHECK_FALSE(extend(cycle(4), c4_state));

    ExtendState too_broken{{}, {{0, 1, 2}, {3, 4, 5}}, {}, 2, 1};
    CHECK_FALSE(extend(disjoint_triangles(2), too_broken));
}

TEST_CASE("solve_ecp_alpha examples") {
    auto yes = solve_ecp_alpha(net(), 1);
    REQUIRE(yes);
    CHECK(yes->kind == CertificateKind::partition);
    CHECK(yes->declared_alpha == 3);
    CHECK(yes->cliques.size() == 4);
    CHECK_FALSE(solve_ecp_alpha(net(), 0));
    auto triangles = solve_ecp_alpha(disjoint_triangles(3), 0);
    REQUIRE(triangles);
    CHECK(triangles->cliques.size() == 3);
    CHECK_FALSE(solve_ecp_alpha(cycle(4), 1));
    CHECK(solve_ecp_alpha(cycle(4), 2));
    CHECK_THROWS_AS(solve_ecp_alpha(Graph(3, {{0, 1}}), 1), IsolatedVertexError);
    CHECK_THROWS_AS(solve_ecp_alpha(cycle(4), -1), PreconditionError);
}

TEST_CASE("solve_ecp_alpha agrees with the oracle on small graphs") {
    for (const Graph& g : graphs_without_isolated(6, false)) {
        int alpha = alpha_bruteforce(g).alpha;
        int ecp = ecp_bruteforce(g).size;
        for (int k = 0; k <= 2; ++k) {
            auto cert = solve_ecp_alpha(g, k);
            CHECK(cert.has_value() == (ecp <= alpha + k));
            if (cert) {
                Verdict v = verify_certificate(g, *cert);
                CHECK_MESSAGE(v.ok, v.diagnostic);
                CHECK(cert->declared_alpha == alpha);
            }
        }
    }
}

TEST_CASE("solve_ecp_alpha output does not depend on the thread count") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = pendant_expand(random_graph(7, 9, rng()));
        for (int k = 1; k <= 2; ++k) CHECK(solve_ecp_alpha(g, k, {1}) == solve_ecp_alpha(g, k, {4}));
    }
}

TEST_CASE("partitions of size alpha+k have at most 2k non-simplicial members") {
    for (const Graph& g : graphs_without_isolated(6, false)) {
        int alpha = alpha_bruteforce(g).alpha;
        CliqueFamily simplicial = simplicial_report(g).simplicial_cliques;
        for (const CliqueFamily& p : enumerate_partitions(g, alpha + 3)) {
            int k = static_cast<int>(p.size()) - alpha;
            int non_simplicial = 0;
            for (const VertexSet& c : p)
                if (std::find(simplicial.begin(), simplicial.end(), c) == simplicial.end()) ++non_simplicial;
            CHECK(non_simplicial <= 2 * k);
        }
    }
}

TEST_CASE("solve_ecp_alpha agrees with the oracle on larger sampled graphs") {
    std::mt19937_64 rng(9);
    int sampled = 0;
    while (sampled < 600) {
        int n = 3 + static_cast<int>(rng() % 8);
        Graph base = random_graph(n, static_cast<int>(rng() % static_cast<std::uint64_t>(n * (n - 1) / 2 + 1)), rng());
        // Pendants on a random subset keep many simplicial cliques in play.
        std::vector<Edge> edges = base.edges();
        int extra = 0;
        for (Vertex v = 0; v < n; ++v)
            if (rng() % 2 || base.degree(v) == 0) edges.emplace_back(v, n + extra++);
        Graph g(n + extra, edges);
        if (g.m() > kMaxBruteforceEcpEdges) continue;
        ++sampled;
        int alpha = alpha_bruteforce(g).alpha;
        int ecp = ecp_bruteforce(g).size;
        for (int k = 0; k <= 4; ++k) {
            auto cert = solve_ecp_alpha(g, k, {2});
            CHECK(cert.has_value() == (ecp <= alpha + k));
            if (cert) CHECK(verify_certificate(g, *cert).ok);
        }
    }
}
