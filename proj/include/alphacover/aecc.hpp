#pragma once

#include <optional>
#include <string>

#include "alphacover/annotated.hpp"
#include "alphacover/graph.hpp"
#include "alphacover/tree_decomposition.hpp"

namespace alphacover {

/// Graph on the annotated edges; e, e' adjacent iff no clique of G holds both.
struct ConflictGraph {
    Graph h;
    EdgeSet index_map;  // vertex i of h <-> index_map[i]
};

ConflictGraph conflict_graph(const AnnotatedInstance& inst);

/// Result of every engine: nullopt means NO, otherwise at most k cliques of G covering b.
using AeccAnswer = std::optional<CliqueFamily>;

/// k <= 2 via colouring the conflict graph; cliques are endpoint unions of colour classes.
AeccAnswer solve_k_le_2(const AnnotatedInstance& inst);

/// Triangle-free shortcut, pruning, Ramsey bound, clique number, size bound, then set cover.
AeccAnswer solve_bounded_omega(const AnnotatedInstance& inst);

/// Branching on a minimum-degree vertex over maximal cliques of the common neighbourhood.
AeccAnswer solve_degenerate(const AnnotatedInstance& inst);

/// Minimum annotated cover by DP over a nice form of td; YES iff the minimum is <= k.
AeccAnswer solve_treewidth_dp(const AnnotatedInstance& inst, const TreeDecomposition& td);

/// Prune, degeneracy vertex bound, min-fill decomposition, then the DP.
AeccAnswer solve_minor_free(const AnnotatedInstance& inst);

constexpr int kMaxBruteforceAeccVertices = 12;
constexpr int kMaxBruteforceAeccEdges = 20;

/// Exhaustive set cover over maximal cliques in order of increasing size.
/// Returns a minimum cover when it has at most k cliques.
AeccAnswer aecc_bruteforce(const AnnotatedInstance& inst);

/// Minimum annotated cover number by the same exhaustive search.
int aecc_number_bruteforce(const Graph& g, const EdgeSet& b);

enum class AeccEngine { automatic, k_le_2, bounded_omega, degenerate, treewidth, minor_free, bruteforce };

AeccEngine parse_aecc_engine(const std::string& name);
std::string to_string(AeccEngine engine);

/// Runs the requested engine; `automatic` picks by measured structure.
AeccAnswer solve_aecc(const AnnotatedInstance& inst, AeccEngine engine = AeccEngine::automatic);

}  // namespace alphacover
