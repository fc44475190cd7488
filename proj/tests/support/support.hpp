#pragma once

// Shared helpers for the test executables: named graphs, seeded random
// graphs and exhaustive enumeration of graphs up to isomorphism.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "alphacover/graph.hpp"

namespace testkit {

using alphacover::Edge;
using alphacover::Graph;
using alphacover::Vertex;
using alphacover::VertexSet;

inline Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

inline Graph complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

inline Graph star(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, e);
}

// Triangles {0,1,4} and {2,3,4} sharing vertex 4.
inline Graph bowtie() { return Graph(5, {{0, 1}, {0, 4}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }

// K4 minus the edge 23.
inline Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

inline Graph disjoint_triangles(int count) {
    std::vector<Edge> e;
    for (int t = 0; t < count; ++t) {
        int b = 3 * t;
        e.emplace_back(b, b + 1);
        e.emplace_back(b + 1, b + 2);
        e.emplace_back(b, b + 2);
    }
    return Graph(3 * count, e);
}

// Triangle 0,1,2 with pendants 3,4,5 attached to 0,1,2.
inline Graph net() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}); }

inline Graph grid(int rows, int cols) {
    std::vector<Edge> e;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            int v = r * cols + c;
            if (c + 1 < cols) e.emplace_back(v, v + 1);
            if (r + 1 < rows) e.emplace_back(v, v + cols);
        }
    return Graph(rows * cols, e);
}

inline Graph gnp(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return Graph(n, e);
}

inline bool connected(const Graph& g) {
    if (g.n() == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbors(v))
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                ++count;
                stack.push_back(u);
            }
    }
    return count == g.n();
}

namespace detail {

inline int pair_index(int i, int j, int n) {
    // Row-major index of pair (i < j) among the n*(n-1)/2 pairs.
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline std::uint32_t encode(const std::vector<std::uint8_t>& adj, int n, const std::vector<int>& perm) {
    std::uint32_t code = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] * n + perm[static_cast<std::size_t>(j)])])
                code |= std::uint32_t{1} << pair_index(i, j, n);
    return code;
}

// Colour refinement, then the minimum code over orderings that respect the
// ordered colour classes. Exact because refined colours are invariant.
inline std::uint32_t canonical_code(const std::vector<std::uint8_t>& adj, int n) {
    std::vector<int> colour(static_cast<std::size_t>(n), 0);
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            sig[static_cast<std::size_t>(v)].first = colour[static_cast<std::size_t>(v)];
            for (int u = 0; u < n; ++u)
                if (adj[static_cast<std::size_t>(v * n + u)]) sig[static_cast<std::size_t>(v)].second.push_back(colour[static_cast<std::size_t>(u)]);
            std::sort(sig[static_cast<std::size_t>(v)].second.begin(), sig[static_cast<std::size_t>(v)].second.end());
        }
        std::vector<std::pair<int, std::vector<int>>> distinct = sig;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<int> next(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            next[static_cast<std::size_t>(v)] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<std::size_t>(v)]) - distinct.begin());
        if (next == colour) break;
        colour = next;
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        return colour[static_cast<std::size_t>(a)] != colour[static_cast<std::size_t>(b)] ? colour[static_cast<std::size_t>(a)] < colour[static_cast<std::size_t>(b)] : a < b;
    });
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && colour[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] == colour[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]) ++j;
        cells.emplace_back(i, j);
        i = j;
    }
    std::uint32_t best = ~0U;
    // Odometer over per-cell permutations.
    while (true) {
        best = std::min(best, encode(adj, n, perm));
        std::size_t c = 0;
        for (; c < cells.size(); ++c) {
            auto [lo, hi] = cells[c];
            if (std::next_permutation(perm.begin() + lo, perm.begin() + hi)) break;
        }
        if (c == cells.size()) break;
    }
    return best;
}

}  // namespace detail

/// Every graph on exactly n vertices, one per isomorphism class (n <= 7).
inline std::vector<Graph> all_graphs(int n) {
    std::vector<std::vector<std::uint8_t>> reps{std::vector<std::uint8_t>{}};
    for (int size = 1; size <= n; ++size) {
        std::set<std::uint32_t> seen;
        std::vector<std::vector<std::uint8_t>> next;
        for (const auto& base : reps) {
            int b = size - 1;
            for (std::uint32_t nb = 0; nb < (std::uint32_t{1} << b); ++nb) {
                std::vector<std::uint8_t> adj(static_cast<std::size_t>(size * size), 0);
                for (int i = 0; i < b; ++i)
                    for (int j = 0; j < b; ++j) adj[static_cast<std::size_t>(i * size + j)] = base[static_cast<std::size_t>(i * b + j)];
                for (int i = 0; i < b; ++i)
                    if (nb & (std::uint32_t{1} << i)) adj[static_cast<std::size_t>(i * size + b)] = adj[static_cast<std::size_t>(b * size + i)] = 1;
                if (seen.insert(detail::canonical_code(adj, size)).second) next.push_back(std::move(adj));
            }
        }
        reps = std::move(next);
    }
    std::vector<Graph> out;
    for (const auto& adj : reps) {
        std::vector<Edge> e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (adj[static_cast<std::size_t>(i * n + j)]) e.emplace_back(i, j);
        out.emplace_back(n, e);
    }
    return out;
}

/// All graphs with 1..n vertices and no isolated vertex; optionally connected only.
inline std::vector<Graph> graphs_without_isolated(int max_n, bool connected_only) {
    std::vector<Graph> out;
    for (int n = 2; n <= max_n; ++n)
        for (Graph& g : all_graphs(n))
            if (!g.has_isolated_vertex() && (!connected_only || connected(g))) out.push_back(std::move(g));
    return out;
}

/// Minimum number of cliques partitioning V(g) (vertex clique cover), exhaustive, n <= 10.
inline int vertex_clique_cover_number(const Graph& g) {
    const int n = g.n();
    if (n == 0) return 0;
    std::vector<char> is_clique(std::size_t{1} << n, 0);
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if ((s >> i & 1U) && (s >> j & 1U) && !g.adjacent(i, j)) ok = false;
        is_clique[s] = ok;
    }
    std::vector<int> f(std::size_t{1} << n, n + 1);
    f[0] = 0;
    for (std::uint32_t s = 1; s < (1U << n); ++s) {
        std::uint32_t low = s & (~s + 1);
        std::uint32_t rest = s ^ low;
        for (std::uint32_t t = rest;; t = (t - 1) & rest) {
            if (is_clique[t | low]) f[s] = std::min(f[s], f[s ^ (t | low)] + 1);
            if (t == 0) break;
        }
    }
    return f[(1U << n) - 1];
}

}  // namespace testkit
