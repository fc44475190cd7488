#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "alphacover/annotated.hpp"
#include "alphacover/graph.hpp"

namespace alphacover {

/// Output of a gadget. Plain (graph, k) outputs leave `b` empty; `alpha` is set
/// when the construction fixes the independence number.
struct GadgetOutput {
    Graph g;
    EdgeSet b;
    int k = 0;
    std::optional<int> alpha;
    std::string provenance;

    AnnotatedInstance annotated() const { return {g, b, k}; }
};

/// Co-bipartite AECC instance that is YES iff `g` has a vertex clique cover of size <= k.
/// Copy one of vertex i is i, copy two is n+i.
GadgetOutput gadget_vcc_to_aecc(const Graph& g, int k);

/// ECC/alpha instance (G', k-1) equivalent to the AECC instance. Needs a co-bipartite
/// graph on n >= 2 vertices with B a perfect matching and k >= 1.
/// Layout: original vertices, then v = n, u_x = n+1+x, then w_e for the non-B edges.
GadgetOutput gadget_aecc_to_eccalpha(const AnnotatedInstance& inst);

/// ECC/alpha instance with alpha = 2 that is YES iff the bipartite graph's edges
/// split into at most k bicliques. v1 = n joins side 0, v2 = n+1 joins side 1.
/// Needs at least one edge so that both sides are nonempty.
GadgetOutput gadget_biclique_to_eccalpha(const Graph& g, int k);

/// Minimum number of bicliques covering the edges of a bipartite graph (m <= 12).
constexpr std::size_t kMaxBicliqueCoverEdges = 12;
int biclique_cover_bruteforce(const Graph& g);

/// Attaches a pendant n+i to every vertex i.
Graph pendant_expand(const Graph& g);

/// Uniform graph with exactly m edges.
Graph random_graph(int n, int m, std::uint64_t seed);

/// Each vertex i picks min(i, d) random earlier neighbours, so the result is d-degenerate.
Graph random_degenerate(int n, int d, std::uint64_t seed);

/// Minimum vertex clique cover by subset DP (n <= 20).
int vertex_clique_cover_bruteforce(const Graph& g);

}  // namespace alphacover
