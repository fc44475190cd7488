#pragma once

#include <optional>
#include <string>

#include "alphacover/aecc.hpp"
#include "alphacover/certificate.hpp"
#include "alphacover/graph.hpp"

namespace alphacover {

/// Reduction of ECC to annotated ECC by stripping simplicial vertices.
/// g_reduced = G - S with vertices renumbered; `original` maps them back.
/// f_set and b_edges use g_reduced ids.
struct EccAlphaReduction {
    VertexSet simplicial;      // S
    VertexSet s_prime;         // one vertex per twin class of S
    Graph g_reduced;           // G'
    VertexSet original;        // G' id -> G id
    VertexSet f_set;           // G' vertices that had a simplicial neighbour
    EdgeSet b_edges;           // G' edges lying in no simplicial clique of G
};

/// Throws IsolatedVertexError if g has an isolated vertex.
EccAlphaReduction build_reduction(const Graph& g);

/// G' - F with ids of G' (renumbered; `original` maps to G' ids).
struct CoreGraph {
    Graph g;
    VertexSet original;
};
CoreGraph core_without_f(const EccAlphaReduction& r);

enum class EccClass { general, bounded_omega, degenerate, two_degenerate, minor_free };

EccClass parse_ecc_class(const std::string& name);
std::string to_string(EccClass c);

/// What the solver actually ran; used to confirm the polynomial path for small k.
struct EccAlphaTrace {
    int max_k_prime = 0;        // largest annotated budget probed
    int aecc_calls = 0;
    bool polynomial_only = true;  // every annotated call had budget <= 2
};

struct EccAlphaOutcome {
    std::optional<Certificate> certificate;  // YES iff present
    EccAlphaTrace trace;
};

/// ECC above alpha: YES iff ecc(g) <= alpha(g) + k. The certificate's cliques
/// are the annotated solution plus N[s] for s in S', and its witness is a
/// maximum independent set of G' - F together with S'.
EccAlphaOutcome solve_ecc_alpha_traced(const Graph& g, int k, AeccEngine engine = AeccEngine::automatic);

std::optional<Certificate> solve_ecc_alpha(const Graph& g, int k, AeccEngine engine = AeccEngine::automatic);

/// Same contract with the annotated and independent-set engines fixed by the class:
/// bounded_omega and degenerate compute alpha from the cover, two_degenerate uses
/// the (1,2)-branching and minor_free the treewidth DP.
EccAlphaOutcome solve_ecc_alpha_class_traced(const Graph& g, int k, EccClass hint);

std::optional<Certificate> solve_ecc_alpha_class(const Graph& g, int k, EccClass hint);

}  // namespace alphacover
