#pragma once

#include <optional>

#include "alphacover/alpha.hpp"
#include "alphacover/certificate.hpp"
#include "alphacover/graph.hpp"

namespace alphacover {

/// Minimum edge clique partition of g when it has at most k cliques.
/// Branches on the lowest uncovered edge uv over every clique through uv whose
/// edges are all still uncovered, largest first, with iterative deepening on
/// the number of cliques. Isolated vertices are ignored.
std::optional<CliqueFamily> ecp_exact(const Graph& g, int k);

/// alpha(g), or nullopt when (g, k) is certainly a NO-instance because the
/// non-simplicial part admits no partition into 2k cliques.
/// Requires k >= 1; throws IsolatedVertexError on isolated vertices.
std::optional<AlphaResult> alpha_or_reject(const Graph& g, int k);

/// Cliques that every partition of size <= alpha + k must contain, or nullopt
/// for a NO-instance. Members pairwise share at most one vertex.
/// Requires k >= 1; throws IsolatedVertexError on isolated vertices.
std::optional<CliqueFamily> mandatory_cliques(const Graph& g, int k);

/// Nodes are clique indices; i ~ j iff the cliques share at least two vertices.
Graph broken_conflict_graph(const CliqueFamily& simplicial_cliques);

/// All inclusion-minimal vertex covers of h with at most k vertices, sorted.
std::vector<VertexSet> minimal_vertex_covers_upto(const Graph& h, int k);

struct ExtendState {
    CliqueFamily free;       // simplicial cliques still assumed intact
    CliqueFamily broken;     // simplicial cliques assumed not used
    CliqueFamily mandatory;  // cliques every solution contains
    int alpha = 0;
    int k = 0;
};

/// Completes free + mandatory to a partition of g with at most alpha + k cliques,
/// moving one free clique at a time into the broken set when that fails.
std::optional<CliqueFamily> extend(const Graph& g, const ExtendState& state);

struct EcpAlphaOptions {
    int threads = 1;  // workers over the initial broken sets
};

/// ECP above alpha: YES iff ecp(g) <= alpha(g) + k, with a partition certificate.
/// Throws IsolatedVertexError on isolated vertices.
std::optional<Certificate> solve_ecp_alpha(const Graph& g, int k, EcpAlphaOptions options = {});

struct EcpResult {
    int size = 0;
    CliqueFamily partition;
};

constexpr std::size_t kMaxBruteforceEcpEdges = 21;

/// Minimum edge clique partition by memoised search over uncovered-edge masks.
/// m <= kMaxBruteforceEcpEdges.
EcpResult ecp_bruteforce(const Graph& g);

/// Same, using only cliques with at most `max_clique_size` vertices.
EcpResult ecp_bruteforce_restricted(const Graph& g, int max_clique_size);

}  // namespace alphacover
