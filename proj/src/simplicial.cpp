#include "alphacover/simplicial.hpp"

#include <map>

namespace alphacover {

bool is_simplicial(const Graph& g, Vertex v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!g.adjacent(nb[i], nb[j])) return false;
    return true;
}

SimplicialReport simplicial_report(const Graph& g) {
    SimplicialReport report;
    std::map<VertexSet, std::size_t> seen;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (!is_simplicial(g, v)) continue;
        report.simplicial_vertices.push_back(v);
        VertexSet closed = g.closed_neighborhood(v);
        // Ascending scan means the first vertex to reach a clique is its lowest.
        if (seen.emplace(closed, report.simplicial_cliques.size()).second) {
            report.simplicial_cliques.push_back(std::move(closed));
            report.representative.push_back(v);
        }
    }
    return report;
}

VertexSet twin_free_simplicial_set(const Graph& g) {
    // Two simplicial vertices are true twins exactly when they share N[v].
    return simplicial_report(g).representative;
}

CriticalCliquePartition critical_cliques(const Graph& g) {
    CriticalCliquePartition out;
    out.class_of.assign(static_cast<std::size_t>(g.n()), -1);
    std::map<VertexSet, int> index;
    for (Vertex v = 0; v < g.n(); ++v) {
        auto [it, fresh] = index.emplace(g.closed_neighborhood(v), static_cast<int>(out.classes.size()));
        if (fresh) out.classes.emplace_back();
        out.classes[static_cast<std::size_t>(it->second)].push_back(v);
        out.class_of[static_cast<std::size_t>(v)] = it->second;
    }
    return out;
}

}  // namespace alphacover
