#pragma once

#include <utility>
#include <vector>

#include "alphacover/certificate.hpp"
#include "alphacover/graph.hpp"

namespace alphacover {

/// Bags plus the edges of the tree joining them (indices into `bags`).
struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<std::pair<int, int>> tree_edges;

    int width() const;
};

/// Checks the tree shape and the three decomposition axioms against g.
Verdict validate(const Graph& g, const TreeDecomposition& td);

/// Elimination by minimum fill-in (ties: fewer neighbours, then lower id).
TreeDecomposition min_fill_decomposition(const Graph& g);

/// One bag per consecutive window of `bags`, chained as a path.
TreeDecomposition path_decomposition(std::vector<VertexSet> bags);

enum class NiceKind { leaf, introduce, forget, join };

struct NiceNode {
    NiceKind kind = NiceKind::leaf;
    VertexSet bag;
    Vertex vertex = -1;         // introduced or forgotten vertex
    std::vector<int> children;  // 0, 1 or 2 entries
};

/// Rooted nice decomposition. Leaves and root have empty bags; nodes are
/// stored in post-order so every child precedes its parent, root last.
struct NiceDecomposition {
    std::vector<NiceNode> nodes;

    int root() const { return static_cast<int>(nodes.size()) - 1; }
    int width() const;
};

/// Throws PreconditionError when td is not a valid decomposition of g.
NiceDecomposition make_nice(const Graph& g, const TreeDecomposition& td);

bool is_nice(const NiceDecomposition& nd);

}  // namespace alphacover
