#include <random>

#include "doctest.h"

#include "alphacover/errors.hpp"
#include "alphacover/tree_decomposition.hpp"
#include "support/support.hpp"

using namespace alphacover;
using namespace testkit;

TEST_CASE("validate rejects broken decompositions") {
    Graph p4 = path(4);
    CHECK(validate(p4, path_decomposition({{0, 1}, {1, 2}, {2, 3}})));
    CHECK_FALSE(validate(p4, path_decomposition({{0, 1}, {2, 3}})).ok);            // edge 12 missing
    CHECK_FALSE(validate(p4, path_decomposition({{0, 1}, {2, 3}, {1, 2}})).ok);    // vertex 2 split
    TreeDecomposition cyclic{{{0, 1}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}}};
    CHECK(validate(p4, cyclic));
    cyclic.tree_edges.emplace_back(0, 2);
    CHECK_FALSE(validate(p4, cyclic).ok);
    CHECK_THROWS_AS(make_nice(p4, path_decomposition({{0, 1}})), PreconditionError);
}

TEST_CASE("min-fill gives exact width on simple families") {
    CHECK(min_fill_decomposition(path(6)).width() == 1);
    CHECK(min_fill_decomposition(cycle(7)).width() == 2);
    CHECK(min_fill_decomposition(complete(5)).width() == 4);
    CHECK(min_fill_decomposition(Graph(0)).width() == -1);
    CHECK(min_fill_decomposition(grid(3, 3)).width() == 3);
}

TEST_CASE("min-fill decompositions are valid and convert to nice form") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 300; ++t) {
        Graph g = gnp(t % 12, 0.3, rng);
        TreeDecomposition td = min_fill_decomposition(g);
        REQUIRE(validate(g, td));
        NiceDecomposition nd = make_nice(g, td);
        CHECK(is_nice(nd));
        CHECK(nd.width() == td.width());
        // Each vertex is forgotten exactly once.
        std::vector<int> forgot(static_cast<std::size_t>(g.n()), 0);
        for (const NiceNode& x : nd.nodes)
            if (x.kind == NiceKind::forget) ++forgot[static_cast<std::size_t>(x.vertex)];
        for (int f : forgot) CHECK(f == 1);
    }
}
