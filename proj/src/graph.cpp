#include "alphacover/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "alphacover/errors.hpp"

namespace alphacover {

namespace {

void check_vertex(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.n()) {
        throw PreconditionError("vertex " + std::to_string(v) + " out of range for graph with " +
                                std::to_string(g.n()) + " vertices");
    }
}

}  // namespace

Graph::Graph(int n) {
    if (n < 0) throw PreconditionError("negative vertex count");
    adjacency_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) {
        if (e.u == e.v) throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n) {
            throw PreconditionError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    ") out of range");
        }
        adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& nb : adjacency_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
            throw PreconditionError("parallel edge");
        }
    }
    m_ = edges.size();
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n, [&] {
          EdgeSet list;
          for (auto [a, b] : edges) {
              Edge e;
              e.u = a < b ? a : b;
              e.v = a < b ? b : a;
              list.push_back(e);
          }
          return list;
      }()) {}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& a = adjacency_[static_cast<std::size_t>(u)];
    const auto& b = adjacency_[static_cast<std::size_t>(v)];
    if (a.size() <= b.size()) return std::binary_search(a.begin(), a.end(), v);
    return std::binary_search(b.begin(), b.end(), u);
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
    const auto& nb = adjacency_[static_cast<std::size_t>(v)];
    VertexSet out;
    out.reserve(nb.size() + 1);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    out.insert(out.end(), nb.begin(), it);
    out.push_back(v);
    out.insert(out.end(), it, nb.end());
    return out;
}

EdgeSet Graph::edges() const {
    EdgeSet out;
    out.reserve(m_);
    for (Vertex u = 0; u < n(); ++u) {
        for (Vertex w : adjacency_[static_cast<std::size_t>(u)]) {
            if (u < w) out.emplace_back(u, w);
        }
    }
    return out;
}

bool Graph::has_isolated_vertex() const { return first_isolated_vertex() >= 0; }

Vertex Graph::first_isolated_vertex() const {
    for (Vertex v = 0; v < n(); ++v) {
        if (adjacency_[static_cast<std::size_t>(v)].empty()) return v;
    }
    return -1;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adjacency_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    std::vector<int> index(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        check_vertex(g, keep[i]);
        index[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    }
    EdgeSet edges;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (Vertex w : g.neighbors(keep[i])) {
            int j = index[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
        }
    }
    return Graph(static_cast<int>(keep.size()), edges);
}

Graph edge_subgraph(const Graph& g, std::span<const Edge> edges) { return Graph(g.n(), edges); }

Graph complement(const Graph& g) {
    EdgeSet edges;
    for (Vertex u = 0; u < g.n(); ++u) {
        for (Vertex v = u + 1; v < g.n(); ++v) {
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
        }
    }
    return Graph(g.n(), edges);
}

bool is_clique(const Graph& g, std::span<const Vertex> s) {
    for (Vertex v : s) check_vertex(g, v);
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (s[i] == s[j] || !g.adjacent(s[i], s[j])) return false;
        }
    }
    return true;
}

bool is_independent(const Graph& g, std::span<const Vertex> s) {
    for (Vertex v : s) check_vertex(g, v);
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (s[i] == s[j] || g.adjacent(s[i], s[j])) return false;
        }
    }
    return true;
}

bool is_triangle_free(const Graph& g) {
    for (Vertex u = 0; u < g.n(); ++u) {
        for (Vertex v : g.neighbors(u)) {
            if (v <= u) continue;
            if (intersection_size(g.neighbors(u), g.neighbors(v)) > 0) return false;
        }
    }
    return true;
}

DegeneracyResult degeneracy(const Graph& g) {
    const int n = g.n();
    DegeneracyResult result;
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    // Quadratic scan keeps the lowest-id tie-break trivially; fine at desk scale.
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (removed[static_cast<std::size_t>(v)]) continue;
            if (best < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(best)]) best = v;
        }
        result.degeneracy = std::max(result.degeneracy, deg[static_cast<std::size_t>(best)]);
        result.ordering.push_back(best);
        removed[static_cast<std::size_t>(best)] = 1;
        for (Vertex w : g.neighbors(best)) {
            if (!removed[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
        }
    }
    return result;
}

namespace {

struct BronKerbosch {
    const Graph& g;
    CliqueFamily out;

    void run(VertexSet& r, VertexSet p, VertexSet x) {
        if (p.empty() && x.empty()) {
            out.push_back(r);
            std::sort(out.back().begin(), out.back().end());
            return;
        }
        // Pivot maximising |P ∩ N(u)|; candidates scanned in id order so ties go to the lowest id.
        VertexSet px = set_union(p, x);
        Vertex pivot = px.front();
        std::size_t best = 0;
        bool first = true;
        for (Vertex u : px) {
            std::size_t c = intersection_size(p, g.neighbors(u));
            if (first || c > best) {
                best = c;
                pivot = u;
                first = false;
            }
        }
        VertexSet candidates = set_difference(p, g.neighbors(pivot));
        for (Vertex v : candidates) {
            r.push_back(v);
            run(r, set_intersection(p, g.neighbors(v)), set_intersection(x, g.neighbors(v)));
            r.pop_back();
            p.erase(std::lower_bound(p.begin(), p.end(), v));
            x.insert(std::lower_bound(x.begin(), x.end(), v), v);
        }
    }
};

}  // namespace

CliqueFamily maximal_cliques_within(const Graph& g, std::span<const Vertex> within) {
    VertexSet p(within.begin(), within.end());
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    for (Vertex v : p) check_vertex(g, v);
    if (p.empty()) return {};
    BronKerbosch bk{g, {}};
    VertexSet r;
    bk.run(r, p, {});
    std::sort(bk.out.begin(), bk.out.end());
    return std::move(bk.out);
}

CliqueFamily maximal_cliques(const Graph& g) {
    VertexSet all(static_cast<std::size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v) all[static_cast<std::size_t>(v)] = v;
    return maximal_cliques_within(g, all);
}

namespace {

void extend_cliques(const Graph& g, VertexSet& current, const VertexSet& candidates, int min_size,
                    CliqueFamily& out) {
    if (static_cast<int>(current.size()) >= min_size) out.push_back(current);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        Vertex v = candidates[i];
        VertexSet next;
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            if (g.adjacent(v, candidates[j])) next.push_back(candidates[j]);
        }
        current.push_back(v);
        extend_cliques(g, current, next, min_size, out);
        current.pop_back();
    }
}

bool clique_search(const Graph& g, int need, const VertexSet& candidates) {
    if (need == 0) return true;
    if (static_cast<int>(candidates.size()) < need) return false;
    for (std::size_t i = 0; i + static_cast<std::size_t>(need) <= candidates.size(); ++i) {
        Vertex v = candidates[i];
        VertexSet next;
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            if (g.adjacent(v, candidates[j])) next.push_back(candidates[j]);
        }
        if (clique_search(g, need - 1, next)) return true;
    }
    return false;
}

}  // namespace

CliqueFamily all_cliques(const Graph& g, int min_size) {
    CliqueFamily out;
    VertexSet current;
    VertexSet all(static_cast<std::size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v) all[static_cast<std::size_t>(v)] = v;
    extend_cliques(g, current, all, std::max(min_size, 1), out);
    std::sort(out.begin(), out.end());
    return out;
}

bool has_clique_of_size(const Graph& g, int p) {
    if (p <= 0) return true;
    if (p == 1) return g.n() >= 1;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (g.degree(v) + 1 < p) continue;
        VertexSet higher;
        for (Vertex w : g.neighbors(v)) {
            if (w > v && g.degree(w) + 1 >= p) higher.push_back(w);
        }
        if (clique_search(g, p - 1, higher)) return true;
    }
    return false;
}

std::vector<int> bipartition(const Graph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.n()), -1);
    for (Vertex s = 0; s < g.n(); ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0) continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::queue<Vertex> queue;
        queue.push(s);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop();
            for (Vertex w : g.neighbors(u)) {
                auto& sw = side[static_cast<std::size_t>(w)];
                if (sw < 0) {
                    sw = 1 - side[static_cast<std::size_t>(u)];
                    queue.push(w);
                } else if (sw == side[static_cast<std::size_t>(u)]) {
                    return {};
                }
            }
        }
    }
    return side;
}

VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::size_t intersection_size(std::span<const Vertex> a, std::span<const Vertex> b) {
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

bool contains(std::span<const Vertex> sorted, Vertex v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

bool is_subset(std::span<const Vertex> a, std::span<const Vertex> b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

EdgeSet edges_within(const Graph& g, std::span<const Vertex> s) {
    EdgeSet out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (g.adjacent(s[i], s[j])) out.emplace_back(s[i], s[j]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace alphacover
