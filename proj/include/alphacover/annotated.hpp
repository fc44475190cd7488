#pragma once

#include "alphacover/graph.hpp"

namespace alphacover {

/// (G, B, k): cover the edges of B with at most k cliques of G.
struct AnnotatedInstance {
    Graph g;
    EdgeSet b;  // sorted, each an edge of g
    int k = 0;
};

/// Throws PreconditionError unless b is sorted, duplicate-free and inside E(g), and k >= 0.
void validate(const AnnotatedInstance& inst);

}  // namespace alphacover
