#pragma once

#include <cstddef>
#include <vector>

#include "alphacover/graph.hpp"

namespace alphacover {

struct CoverResult {
    int size = 0;
    CliqueFamily family;
};

constexpr std::size_t kMaxBruteforceEccEdges = 21;

/// Minimum edge clique cover by set cover over the maximal cliques.
/// Restricting to maximal cliques is safe for covers; it is not for partitions.
CoverResult ecc_bruteforce(const Graph& g);

/// Same minimum through plain combination search; slower, used to cross-check.
CoverResult ecc_bruteforce_combinations(const Graph& g);

/// Every edge clique partition with at most `max_size` members, each canonical,
/// each listed once. The member through the lowest open edge is fixed first.
std::vector<CliqueFamily> enumerate_partitions(const Graph& g, int max_size);

}  // namespace alphacover
