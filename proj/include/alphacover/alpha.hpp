#pragma once

#include <cstdint>
#include <optional>

#include "alphacover/graph.hpp"
#include "alphacover/tree_decomposition.hpp"

namespace alphacover {

struct AlphaResult {
    int alpha = 0;
    VertexSet witness;  // independent, |witness| == alpha
};

/// Membership of one vertex in each clique of a cover; bit i <=> v in C_i.
struct CharVector {
    std::uint64_t bits = 0;
    int length = 0;

    bool operator[](int i) const { return (bits >> i) & 1U; }
    int dot(const CharVector& other) const;
    bool operator==(const CharVector&) const = default;
};

constexpr int kMaxCoverForAlpha = 40;

/// x_v for every vertex of g against `cover`. Requires |cover| <= 64.
std::vector<CharVector> characteristic_vectors(const Graph& g, const CliqueFamily& cover);

/// alpha(g) from an edge clique cover by the layered reachability DP over
/// characteristic vectors. Nonadjacent vertices have disjoint vectors, so the
/// layer-i states are exactly the unions of i pairwise disjoint vectors.
/// Isolated vertices (zero vector) join every maximum independent set.
/// Throws PreconditionError if cover is not a valid cover, SizeGuardError past kMaxCoverForAlpha.
AlphaResult alpha_from_cover(const Graph& g, const CliqueFamily& cover);

struct CliqueOrIS {
    enum class Kind { clique, independent } kind = Kind::clique;
    VertexSet set;
};

/// C(n, k) clamped to UINT64_MAX.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k);

/// A clique of size p or an independent set of size q, by the Erdos-Szekeres
/// recursion on the lowest-id vertex. Requires p, q >= 1 and n >= C(p+q-2, p-1).
CliqueOrIS ramsey_clique_or_is(const Graph& g, int p, int q);

/// Independent set of size >= k when alpha(g) >= k, by (1,2)-branching on a
/// minimum-degree vertex. Requires degeneracy <= 2.
std::optional<VertexSet> alpha_2degenerate(const Graph& g, int k);

/// Maximum independent set of a graph of degeneracy <= 2 (same branching).
AlphaResult alpha_2degenerate_max(const Graph& g);

/// Independent set of size >= k when alpha(g) >= k, by DP over a nice form of td.
std::optional<VertexSet> alpha_treewidth_dp(const Graph& g, const TreeDecomposition& td, int k);

/// Maximum independent set by the same DP. Bags must have at most 62 vertices.
AlphaResult alpha_treewidth_max(const Graph& g, const TreeDecomposition& td);

constexpr int kMaxBruteforceAlphaVertices = 26;

/// Exhaustive include/exclude search; n <= kMaxBruteforceAlphaVertices.
AlphaResult alpha_bruteforce(const Graph& g);

}  // namespace alphacover
