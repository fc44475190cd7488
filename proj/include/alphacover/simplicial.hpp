#pragma once

#include "alphacover/graph.hpp"

namespace alphacover {

/// Simplicial vertices and the distinct simplicial cliques N[v].
struct SimplicialReport {
    VertexSet simplicial_vertices;
    CliqueFamily simplicial_cliques;      // ordered by representative
    std::vector<Vertex> representative;   // lowest-id simplicial vertex of each clique
};

SimplicialReport simplicial_report(const Graph& g);

bool is_simplicial(const Graph& g, Vertex v);

/// One simplicial vertex (the lowest id) per true-twin class of simplicial vertices.
VertexSet twin_free_simplicial_set(const Graph& g);

/// Partition of V(G) into true-twin classes (vertices with equal N[v]),
/// classes ordered by their lowest member.
struct CriticalCliquePartition {
    std::vector<VertexSet> classes;
    std::vector<int> class_of;  // vertex -> index into classes
};

CriticalCliquePartition critical_cliques(const Graph& g);

}  // namespace alphacover
