#include <random>

#include "doctest.h"

#include "alphacover/aecc.hpp"
#include "alphacover/certificate.hpp"
#include "alphacover/errors.hpp"
#include "alphacover/set_cover.hpp"
#include "support/support.hpp"

using namespace alphacover;
using namespace testkit;

namespace {

AnnotatedInstance all_edges(const Graph& g, int k) { return {g, g.edges(), k}; }

bool decision(const AeccAnswer& a) { return a.has_value(); }

void check_answer(const AnnotatedInstance& inst, const AeccAnswer& a) {
    if (!a) return;
    CHECK(static_cast<int>(a->size()) <= inst.k);
    Verdict v = verify_annotated_cover(inst.g, inst.b, *a);
    CHECK_MESSAGE(v.ok, v.diagnostic);
}

EdgeSet subset(const EdgeSet& all, std::uint64_t mask) {
    EdgeSet b;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (mask >> i & 1U) b.push_back(all[i]);
    return b;
}

}  // namespace

TEST_CASE("conflict_graph examples") {
    ConflictGraph p3 = conflict_graph(all_edges(path(3), 0));
    CHECK(p3.h == Graph(2, {{0, 1}}));
    CHECK(conflict_graph(all_edges(complete(3), 0)).h.m() == 0);
    ConflictGraph two = conflict_graph(all_edges(Graph(4, {{0, 1}, {2, 3}}), 0));
    CHECK(two.h == Graph(2, {{0, 1}}));
    CHECK(two.index_map == EdgeSet{Edge(0, 1), Edge(2, 3)});
}

TEST_CASE("conflict_graph adjacency means no common clique") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : all_graphs(n)) {
            CliqueFamily cliques = all_cliques(g, 2);
            ConflictGraph cg = conflict_graph(all_edges(g, 0));
            EdgeSet e = g.edges();
            for (std::size_t i = 0; i < e.size(); ++i)
                for (std::size_t j = i + 1; j < e.size(); ++j) {
                    bool together = false;
                    for (const VertexSet& c : cliques)
                        together = together || (contains(c, e[i].u) && contains(c, e[i].v) && contains(c, e[j].u) && contains(c, e[j].v));
                    CHECK(cg.h.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) == !together);
                }
        }
    }
}

TEST_CASE("solve_k_le_2 examples") {
    CHECK(solve_k_le_2(all_edges(complete(3), 1)) == CliqueFamily{{0, 1, 2}});
    CHECK_FALSE(solve_k_le_2(all_edges(path(3), 1)));
    CHECK(solve_k_le_2(all_edges(path(3), 2)) == CliqueFamily{{0, 1}, {1, 2}});
    // Four edges, no triangles: at least four cliques.
    CHECK(aecc_number_bruteforce(cycle(4), cycle(4).edges()) == 4);
    CHECK_FALSE(solve_k_le_2(all_edges(cycle(4), 2)));
    CHECK(solve_k_le_2({path(3), {}, 0}) == CliqueFamily{});
    CHECK_THROWS_AS(solve_k_le_2(all_edges(path(3), 3)), PreconditionError);
}

TEST_CASE("solve_bounded_omega examples") {
    CHECK(solve_bounded_omega(all_edges(cycle(5), 5)).has_value());
    CHECK_FALSE(solve_bounded_omega(all_edges(cycle(5), 4)));
    CHECK(solve_bounded_omega(all_edges(complete(4), 1)) == CliqueFamily{{0, 1, 2, 3}});
    CHECK(solve_bounded_omega(all_edges(complete(4), 3)) == CliqueFamily{{0, 1, 2, 3}});
}

TEST_CASE("solve_degenerate examples") {
    // Two triangles sharing edge 01; brute force also needs two cliques.
    CHECK(aecc_number_bruteforce(diamond(), diamond().edges()) == 2);
    CHECK(solve_degenerate(all_edges(diamond(), 2)) == CliqueFamily{{0, 1, 2}, {0, 1, 3}});
    CHECK_FALSE(solve_degenerate(all_edges(cycle(4), 3)));
    CHECK(solve_degenerate(all_edges(cycle(4), 4)).has_value());
}

TEST_CASE("solve_treewidth_dp examples") {
    CHECK(solve_treewidth_dp(all_edges(complete(3), 1), path_decomposition({{0, 1, 2}})).has_value());
    TreeDecomposition p5 = path_decomposition({{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(solve_treewidth_dp(all_edges(path(5), 4), p5).has_value());
    CHECK_FALSE(solve_treewidth_dp(all_edges(path(5), 3), p5));
    CHECK_THROWS_AS(solve_treewidth_dp(all_edges(path(5), 3), path_decomposition({{0, 1}, {2, 3, 4}})), PreconditionError);
}

TEST_CASE("solve_minor_free examples") {
    CHECK(solve_minor_free(all_edges(star(4), 4)).has_value());
    CHECK(solve_minor_free(all_edges(complete(5), 1)) == CliqueFamily{{0, 1, 2, 3, 4}});
    // 3x3 grid: 12 edges and no triangles, so the optimum is 12.
    Graph g = grid(3, 3);
    CHECK(aecc_number_bruteforce(g, g.edges()) == 12);
    CHECK_FALSE(solve_minor_free(all_edges(g, 11)));
    CHECK(solve_minor_free(all_edges(g, 12)).has_value());
}

TEST_CASE("aecc_bruteforce guard") {
    CHECK_THROWS_AS(aecc_bruteforce(all_edges(complete(7), 3)), SizeGuardError);
    CHECK_THROWS_AS(aecc_bruteforce({Graph(13), {}, 0}), SizeGuardError);
}

TEST_CASE("set cover solvers agree") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 300; ++t) {
        int u = 1 + static_cast<int>(rng() % 12);
        SetMasks sets;
        int count = 1 + static_cast<int>(rng() % 10);
        for (int i = 0; i < count; ++i) sets.push_back(rng() & ((std::uint64_t{1} << u) - 1));
        auto a = set_cover_dp(u, sets, u);
        auto b = set_cover_branching(u, sets, u);
        auto c = set_cover_combinations(u, sets, u);
        REQUIRE(a.has_value() == c.has_value());
        REQUIRE(b.has_value() == c.has_value());
        if (c) {
            CHECK(a->size() == c->size());
            CHECK(b->size() == c->size());
        }
    }
}

TEST_CASE("engines agree with brute force on every annotated instance up to five vertices") {
    for (int n = 2; n <= 5; ++n) {
        for (const Graph& g : all_graphs(n)) {
            EdgeSet e = g.edges();
            TreeDecomposition td = min_fill_decomposition(g);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e.size()); ++mask) {
                EdgeSet b = subset(e, mask);
                for (int k = 0; k <= 4; ++k) {
                    AnnotatedInstance inst{g, b, k};
                    AeccAnswer oracle = aecc_bruteforce(inst);
                    AeccAnswer answers[] = {solve_bounded_omega(inst), solve_degenerate(inst),
                                            solve_treewidth_dp(inst, td), solve_minor_free(inst), solve_aecc(inst)};
                    for (const AeccAnswer& a : answers) {
                        CHECK(decision(a) == decision(oracle));
                        check_answer(inst, a);
                    }
                    if (k <= 2) CHECK(decision(solve_k_le_2(inst)) == decision(oracle));
                }
            }
        }
    }
}

TEST_CASE("engines are monotone in k on sampled six-vertex instances") {
    std::mt19937_64 rng(77);
    auto graphs = all_graphs(6);
    for (int t = 0; t < 400; ++t) {
        const Graph& g = graphs[rng() % graphs.size()];
        EdgeSet b = subset(g.edges(), rng());
        bool prev[4] = {false, false, false, false};
        for (int k = 0; k <= 5; ++k) {
            AnnotatedInstance inst{g, b, k};
            bool now[4] = {decision(solve_bounded_omega(inst)), decision(solve_degenerate(inst)),
                           decision(solve_minor_free(inst)), decision(aecc_bruteforce(inst))};
            for (int i = 0; i < 4; ++i) {
                if (prev[i]) CHECK(now[i]);
                CHECK(now[i] == now[3]);
                prev[i] = now[i];
            }
        }
    }
}

TEST_CASE("triangle-free shortcut handles long cycles") {
    Graph c = cycle(1000);
    AeccAnswer a = solve_bounded_omega(all_edges(c, 1000));
    REQUIRE(a);
    CHECK(a->size() == 1000);
    CHECK_FALSE(solve_bounded_omega(all_edges(c, 999)));
}

TEST_CASE("engine names round trip") {
    for (auto e : {AeccEngine::automatic, AeccEngine::k_le_2, AeccEngine::bounded_omega, AeccEngine::degenerate,
                   AeccEngine::treewidth, AeccEngine::minor_free, AeccEngine::bruteforce})
        CHECK(parse_aecc_engine(to_string(e)) == e);
    CHECK_THROWS_AS(parse_aecc_engine("simplex"), PreconditionError);
}
