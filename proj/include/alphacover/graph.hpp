#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace alphacover {

using Vertex = int;

/// Strictly ascending list of distinct vertex ids.
using VertexSet = std::vector<Vertex>;

/// Ordered list of vertex sets; each member is expected to be a clique of the host graph.
using CliqueFamily = std::vector<VertexSet>;

/// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

/// Sorted, duplicate-free list of edges.
using EdgeSet = std::vector<Edge>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Immutable after construction. Construction rejects self-loops, parallel
/// edges and out-of-range endpoints with PreconditionError.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<std::pair<int, int>> edges);

    int n() const noexcept { return static_cast<int>(adjacency_.size()); }
    std::size_t m() const noexcept { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
    bool adjacent(Vertex u, Vertex v) const;

    /// N[v] as a sorted set.
    VertexSet closed_neighborhood(Vertex v) const;

    /// All edges in ascending (u, v) order.
    EdgeSet edges() const;

    bool has_isolated_vertex() const;
    Vertex first_isolated_vertex() const;  // -1 if none
    int max_degree() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t m_ = 0;
};

/// Induced subgraph G[keep] with vertices renumbered 0..|keep|-1 in the order of `keep`.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Graph with the same vertex set and only the listed edges.
Graph edge_subgraph(const Graph& g, std::span<const Edge> edges);

Graph complement(const Graph& g);

/// True iff all pairs in s are adjacent (vacuous for |s| <= 1). Throws on out-of-range ids.
bool is_clique(const Graph& g, std::span<const Vertex> s);

/// True iff no two vertices of s are adjacent. Throws on out-of-range ids.
bool is_independent(const Graph& g, std::span<const Vertex> s);

bool is_triangle_free(const Graph& g);

struct DegeneracyResult {
    int degeneracy = 0;
    std::vector<Vertex> ordering;  // min-degree elimination order, lowest id on ties
};

DegeneracyResult degeneracy(const Graph& g);

/// All inclusion-maximal cliques (pivoting Bron-Kerbosch, lowest-id pivot on ties),
/// each sorted, family in lexicographic order. Isolated vertices yield singletons.
CliqueFamily maximal_cliques(const Graph& g);

/// Maximal cliques of G[within], reported with original vertex ids.
CliqueFamily maximal_cliques_within(const Graph& g, std::span<const Vertex> within);

/// Every clique of g with at least `min_size` vertices, sorted lexicographically.
CliqueFamily all_cliques(const Graph& g, int min_size = 1);

/// Exact test for a clique of size p, by extension search restricted to
/// common neighborhoods.
bool has_clique_of_size(const Graph& g, int p);

/// Bipartition by BFS 2-colouring; side[v] in {0,1}, lowest id of each component on side 0.
/// Returns empty vector when g is not bipartite.
std::vector<int> bipartition(const Graph& g);

// Sorted-set helpers shared by the modules.
VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b);
std::size_t intersection_size(std::span<const Vertex> a, std::span<const Vertex> b);
bool contains(std::span<const Vertex> sorted, Vertex v);
bool is_subset(std::span<const Vertex> a, std::span<const Vertex> b);

/// Edges of g lying inside the vertex set s.
EdgeSet edges_within(const Graph& g, std::span<const Vertex> s);

}  // namespace alphacover
