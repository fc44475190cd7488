#include "alphacover/generators.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>

#include "alphacover/errors.hpp"
#include "alphacover/set_cover.hpp"

namespace alphacover {

namespace {

// Unbiased draw from [0, bound); std distributions differ between libraries.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace

GadgetOutput gadget_vcc_to_aecc(const Graph& g, int k) {
    if (k < 0) throw PreconditionError("k must be nonnegative");
    const int n = g.n();
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            edges.emplace_back(i, j);
            edges.emplace_back(n + i, n + j);
        }
    EdgeSet b;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, n + i);
        b.emplace_back(i, n + i);
    }
    for (const Edge& e : g.edges()) {
        edges.emplace_back(e.u, n + e.v);
        edges.emplace_back(e.v, n + e.u);
    }
    GadgetOutput out;
    out.g = Graph(2 * n, edges);
    out.b = std::move(b);
    out.k = k;
    std::ostringstream p;
    p << "vcc-to-aecc: source n=" << n << " m=" << g.m() << " k=" << k
      << "; YES iff the source has a vertex clique cover of size <= " << k;
    out.provenance = p.str();
    return out;
}

GadgetOutput gadget_aecc_to_eccalpha(const AnnotatedInstance& inst) {
    const Graph& g = inst.g;
    const int n = g.n();
    if (n < 2) throw PreconditionError("aecc-to-eccalpha needs at least 2 vertices");
    if (inst.k < 1) throw PreconditionError("aecc-to-eccalpha needs k >= 1");
    std::vector<int> touched(static_cast<std::size_t>(n), 0);
    for (const Edge& e : inst.b) {
        if (!g.adjacent(e.u, e.v)) throw PreconditionError("annotated pair is not an edge");
        ++touched[static_cast<std::size_t>(e.u)];
        ++touched[static_cast<std::size_t>(e.v)];
    }
    if (std::any_of(touched.begin(), touched.end(), [](int t) { return t != 1; })) {
        throw PreconditionError("annotated edges must form a perfect matching");
    }
    if (bipartition(complement(g)).empty()) throw PreconditionError("graph is not co-bipartite");

    EdgeSet b = inst.b;
    std::sort(b.begin(), b.end());
    EdgeSet r;
    for (const Edge& e : g.edges())
        if (!std::binary_search(b.begin(), b.end(), e)) r.push_back(e);

    const int v = n;
    const int total = 2 * n + 1 + static_cast<int>(r.size());
    std::vector<Edge> edges = g.edges();
    for (int x = 0; x < n; ++x) {
        edges.emplace_back(x, v);
        edges.emplace_back(x, n + 1 + x);
    }
    for (std::size_t i = 0; i < r.size(); ++i) {
        int w = 2 * n + 1 + static_cast<int>(i);
        edges.emplace_back(r[i].u, w);
        edges.emplace_back(r[i].v, w);
    }
    GadgetOutput out;
    out.g = Graph(total, edges);
    out.k = inst.k - 1;
    out.alpha = static_cast<int>(r.size()) + n + 1;
    std::ostringstream p;
    p << "aecc-to-eccalpha: source n=" << n << " |B|=" << b.size() << " k=" << inst.k << " |R|=" << r.size()
      << "; alpha(G') = " << *out.alpha << "; YES iff the source AECC instance is YES";
    out.provenance = p.str();
    return out;
}

GadgetOutput gadget_biclique_to_eccalpha(const Graph& g, int k) {
    if (k < 0) throw PreconditionError("k must be nonnegative");
    if (g.m() == 0) throw PreconditionError("biclique gadget needs at least one edge");
    std::vector<int> side = bipartition(g);
    if (side.empty()) throw PreconditionError("graph is not bipartite");
    const int n = g.n();
    std::vector<Edge> edges = g.edges();
    for (int a = 0; a < n; ++a) {
        for (int c = a + 1; c < n; ++c)
            if (side[static_cast<std::size_t>(a)] == side[static_cast<std::size_t>(c)]) edges.emplace_back(a, c);
        edges.emplace_back(a, n + side[static_cast<std::size_t>(a)]);
    }
    GadgetOutput out;
    out.g = Graph(n + 2, edges);
    out.k = k;
    out.alpha = 2;
    std::ostringstream p;
    p << "biclique-to-eccalpha: source n=" << n << " m=" << g.m() << " k=" << k
      << "; alpha(G') = 2; YES iff the source edges split into <= " << k << " bicliques";
    out.provenance = p.str();
    return out;
}

int biclique_cover_bruteforce(const Graph& g) {
    EdgeSet edges = g.edges();
    if (edges.size() > kMaxBicliqueCoverEdges) {
        throw SizeGuardError("biclique cover: m = " + std::to_string(edges.size()) + " exceeds " +
                             std::to_string(kMaxBicliqueCoverEdges));
    }
    if (edges.empty()) return 0;
    std::vector<int> side = bipartition(g);
    if (side.empty()) throw PreconditionError("graph is not bipartite");
    VertexSet left;
    for (Vertex v = 0; v < g.n(); ++v)
        if (side[static_cast<std::size_t>(v)] == 0 && g.degree(v) > 0) left.push_back(v);
    // Every biclique extends to one whose right side is the common neighbourhood of its left side.
    SetMasks masks;
    const std::uint32_t subsets = std::uint32_t{1} << left.size();
    for (std::uint32_t s = 1; s < subsets; ++s) {
        VertexSet a;
        for (std::size_t i = 0; i < left.size(); ++i)
            if (s >> i & 1U) a.push_back(left[i]);
        VertexSet common(g.neighbors(a.front()).begin(), g.neighbors(a.front()).end());
        for (Vertex x : a) common = set_intersection(common, g.neighbors(x));
        if (common.empty()) continue;
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const Edge& e = edges[i];
            Vertex l = side[static_cast<std::size_t>(e.u)] == 0 ? e.u : e.v;
            Vertex rr = l == e.u ? e.v : e.u;
            if (contains(a, l) && contains(common, rr)) m |= std::uint64_t{1} << i;
        }
        masks.push_back(m);
    }
    auto chosen = set_cover_dp(static_cast<int>(edges.size()), masks, static_cast<int>(masks.size()));
    return static_cast<int>(chosen->size());
}

Graph pendant_expand(const Graph& g) {
    const int n = g.n();
    std::vector<Edge> edges = g.edges();
    for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i);
    return Graph(2 * n, edges);
}

Graph random_graph(int n, int m, std::uint64_t seed) {
    if (n < 0) throw PreconditionError("n must be nonnegative");
    const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > pairs) throw PreconditionError("m out of range for n");
    std::vector<Edge> all;
    all.reserve(static_cast<std::size_t>(pairs));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < m; ++i) {
        auto j = static_cast<std::size_t>(i) + draw(rng, all.size() - static_cast<std::size_t>(i));
        std::swap(all[static_cast<std::size_t>(i)], all[j]);
    }
    all.resize(static_cast<std::size_t>(m));
    return Graph(n, all);
}

Graph random_degenerate(int n, int d, std::uint64_t seed) {
    if (n < 0 || d < 0) throw PreconditionError("n and d must be nonnegative");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        std::vector<int> earlier(static_cast<std::size_t>(v));
        for (int u = 0; u < v; ++u) earlier[static_cast<std::size_t>(u)] = u;
        int take = std::min(v, d);
        for (int i = 0; i < take; ++i) {
            auto j = static_cast<std::size_t>(i) + draw(rng, static_cast<std::uint64_t>(v - i));
            std::swap(earlier[static_cast<std::size_t>(i)], earlier[j]);
            edges.emplace_back(earlier[static_cast<std::size_t>(i)], v);
        }
    }
    return Graph(n, edges);
}

int vertex_clique_cover_bruteforce(const Graph& g) {
    const int n = g.n();
    if (n > 20) throw SizeGuardError("vertex clique cover: more than 20 vertices");
    if (n == 0) return 0;
    SetMasks masks;
    for (const VertexSet& c : maximal_cliques(g)) {
        std::uint64_t m = 0;
        for (Vertex v : c) m |= std::uint64_t{1} << v;
        masks.push_back(m);
    }
    return static_cast<int>(set_cover_dp(n, masks, n)->size());
}

}  // namespace alphacover
