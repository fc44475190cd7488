#include "alphacover/aecc.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "alphacover/alpha.hpp"
#include "alphacover/errors.hpp"
#include "alphacover/set_cover.hpp"

namespace alphacover {

namespace {

CliqueFamily canonical(CliqueFamily f) {
    for (auto& c : f) std::sort(c.begin(), c.end());
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

VertexSet endpoints(const EdgeSet& b) {
    VertexSet v;
    for (const Edge& e : b) {
        v.push_back(e.u);
        v.push_back(e.v);
    }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool inside(const VertexSet& c, const Edge& e) { return contains(c, e.u) && contains(c, e.v); }

std::uint64_t b_mask(const EdgeSet& b, const VertexSet& c) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (inside(c, b[i])) m |= std::uint64_t{1} << i;
    return m;
}

/// G[endpoints(b)] with b renumbered; `original` maps new ids back.
struct Pruned {
    AnnotatedInstance inst;
    VertexSet original;
};

Pruned prune(const AnnotatedInstance& inst) {
    Pruned p;
    p.original = endpoints(inst.b);
    p.inst.g = induced_subgraph(inst.g, p.original);
    p.inst.k = inst.k;
    auto local = [&](Vertex v) {
        return static_cast<Vertex>(std::lower_bound(p.original.begin(), p.original.end(), v) - p.original.begin());
    };
    for (const Edge& e : inst.b) p.inst.b.emplace_back(local(e.u), local(e.v));
    std::sort(p.inst.b.begin(), p.inst.b.end());
    return p;
}

AeccAnswer lift(const AeccAnswer& a, const VertexSet& original) {
    if (!a) return a;
    CliqueFamily out;
    for (const VertexSet& c : *a) {
        VertexSet d;
        for (Vertex v : c) d.push_back(original[static_cast<std::size_t>(v)]);
        out.push_back(std::move(d));
    }
    return canonical(std::move(out));
}

AeccAnswer edge_cliques(const EdgeSet& b) {
    CliqueFamily f;
    for (const Edge& e : b) f.push_back({e.u, e.v});
    return canonical(std::move(f));
}

}  // namespace

ConflictGraph conflict_graph(const AnnotatedInstance& inst) {
    validate(inst);
    ConflictGraph out;
    out.index_map = inst.b;
    std::vector<Edge> h;
    for (std::size_t i = 0; i < inst.b.size(); ++i) {
        for (std::size_t j = i + 1; j < inst.b.size(); ++j) {
            // Shared endpoint: conflict iff the other two are nonadjacent.
            // Disjoint: conflict iff some cross pair is missing. Both say the
            // endpoint union is not a clique.
            VertexSet u = set_union(VertexSet{inst.b[i].u, inst.b[i].v}, VertexSet{inst.b[j].u, inst.b[j].v});
            if (!is_clique(inst.g, u)) h.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    out.h = Graph(static_cast<int>(inst.b.size()), h);
    return out;
}

AeccAnswer solve_k_le_2(const AnnotatedInstance& inst) {
    validate(inst);
    if (inst.k > 2) throw PreconditionError("solve_k_le_2 needs k <= 2");
    if (inst.b.empty()) return CliqueFamily{};
    if (inst.k == 0) return std::nullopt;
    ConflictGraph cg = conflict_graph(inst);
    if (inst.k == 1) {
        if (cg.h.m() != 0) return std::nullopt;
        return CliqueFamily{endpoints(inst.b)};
    }
    std::vector<int> side = bipartition(cg.h);
    if (side.empty()) return std::nullopt;
    EdgeSet classes[2];
    for (std::size_t i = 0; i < inst.b.size(); ++i) classes[side[i]].push_back(inst.b[i]);
    CliqueFamily f;
    for (const EdgeSet& c : classes)
        if (!c.empty()) f.push_back(endpoints(c));
    return canonical(std::move(f));
}

namespace {

constexpr int kSetCoverDpLimit = 22;

// Exact cover of b by cliques of g; every useful clique lies inside a maximal one.
AeccAnswer cover_by_maximal_cliques(const AnnotatedInstance& inst) {
    CliqueFamily cliques;
    SetMasks masks;
    std::map<std::uint64_t, std::size_t> seen;
    for (const VertexSet& c : maximal_cliques(inst.g)) {
        std::uint64_t m = b_mask(inst.b, c);
        if (m == 0 || !seen.emplace(m, cliques.size()).second) continue;
        cliques.push_back(c);
        masks.push_back(m);
    }
    const int universe = static_cast<int>(inst.b.size());
    auto pick = universe <= kSetCoverDpLimit ? set_cover_dp(universe, masks, inst.k)
                                             : set_cover_branching(universe, masks, inst.k);
    if (!pick) return std::nullopt;
    CliqueFamily f;
    for (int i : *pick) f.push_back(cliques[static_cast<std::size_t>(i)]);
    return canonical(std::move(f));
}

}  // namespace

AeccAnswer solve_bounded_omega(const AnnotatedInstance& inst) {
    validate(inst);
    if (inst.k <= 2) return solve_k_le_2(inst);
    if (inst.b.empty()) return CliqueFamily{};
    // No two edges share a clique in a triangle-free graph.
    if (is_triangle_free(inst.g)) {
        if (static_cast<int>(inst.b.size()) > inst.k) return std::nullopt;
        return edge_cliques(inst.b);
    }
    Pruned p = prune(inst);
    const Graph& g = p.inst.g;
    const auto n = static_cast<std::uint64_t>(g.n());
    const auto k = static_cast<std::uint64_t>(inst.k);

    int r = 1;
    while (binomial_saturating(k + static_cast<std::uint64_t>(r), k) <= n) ++r;
    // k+1 pairwise nonadjacent b-incident vertices need k+1 distinct cliques.
    CliqueOrIS found = ramsey_clique_or_is(g, r, inst.k + 1);
    if (found.kind == CliqueOrIS::Kind::independent) return std::nullopt;

    int omega = std::max(r, is_triangle_free(g) ? 2 : 3);
    for (int size = std::max(4, r + 1); has_clique_of_size(g, size); ++size) omega = size;

    const std::uint64_t per_clique = binomial_saturating(static_cast<std::uint64_t>(omega), 2);
    if (p.inst.b.size() > per_clique * k) return std::nullopt;
    // Masks are 64-bit; wider instances go through the exact branching engine instead.
    if (p.inst.b.size() > 64) return lift(solve_degenerate(p.inst), p.original);
    return lift(cover_by_maximal_cliques(p.inst), p.original);
}

namespace {

class DegenerateBrancher {
public:
    explicit DegenerateBrancher(const Graph& g) : g_(g) {}

    AeccAnswer run(const EdgeSet& b, int k) {
        if (b.empty()) return CliqueFamily{};
        if (k == 0) return std::nullopt;
        VertexSet live = endpoints(b);
        Vertex v = -1;
        std::size_t best = 0;
        for (Vertex x : live) {
            std::size_t d = intersection_size(g_.neighbors(x), live);
            if (v < 0 || d < best) {
                v = x;
                best = d;
            }
        }
        Vertex u = -1;
        for (const Edge& e : b) {
            Vertex other = e.u == v ? e.v : e.v == v ? e.u : -1;
            if (other >= 0 && (u < 0 || other < u)) u = other;
        }
        VertexSet common = set_intersection(set_intersection(g_.neighbors(u), g_.neighbors(v)), live);
        CliqueFamily options = common.empty() ? CliqueFamily{VertexSet{}} : maximal_cliques_within(g_, common);
        for (const VertexSet& c : options) {
            VertexSet clique = set_union(c, VertexSet{std::min(u, v), std::max(u, v)});
            EdgeSet rest;
            for (const Edge& e : b)
                if (!inside(clique, e)) rest.push_back(e);
            AeccAnswer sub = run(rest, k - 1);
            if (sub) {
                sub->push_back(std::move(clique));
                return sub;
            }
        }
        return std::nullopt;
    }

private:
    const Graph& g_;
};

}  // namespace

AeccAnswer solve_degenerate(const AnnotatedInstance& inst) {
    validate(inst);
    AeccAnswer a = DegenerateBrancher(inst.g).run(inst.b, inst.k);
    if (a) *a = canonical(std::move(*a));
    return a;
}

namespace {

struct TwEntry {
    int cost = 0;
    int clique = -1;          // introduce closure step: clique index at this node
    std::uint64_t prev = 0;   // same-node state (closure) or child state
    std::uint64_t prev2 = 0;  // right child state (join)
};

using TwTable = std::map<std::uint64_t, TwEntry>;

bool improve(TwTable& t, std::uint64_t mask, const TwEntry& e) {
    auto [it, fresh] = t.emplace(mask, e);
    if (fresh) return true;
    if (e.cost < it->second.cost) {
        it->second = e;
        return true;
    }
    return false;
}

class AnnotatedTreewidthDp {
public:
    AnnotatedTreewidthDp(const AnnotatedInstance& inst, const TreeDecomposition& td)
        : inst_(inst), nd_(make_nice(inst.g, td)) {}

    AeccAnswer run() {
        const std::size_t count = nd_.nodes.size();
        local_.resize(count);
        cliques_.resize(count);
        tables_.resize(count);
        for (std::size_t i = 0; i < count; ++i) {
            const NiceNode& x = nd_.nodes[i];
            for (const Edge& e : inst_.b)
                if (contains(x.bag, e.u) && contains(x.bag, e.v)) local_[i].push_back(e);
            if (local_[i].size() > 63) throw SizeGuardError("treewidth DP: bag holds more than 63 annotated edges");
            switch (x.kind) {
                case NiceKind::leaf: tables_[i].emplace(0, TwEntry{}); break;
                case NiceKind::introduce: introduce(i); break;
                case NiceKind::forget: forget(i); break;
                case NiceKind::join: join(i); break;
            }
        }
        const TwTable& root = tables_.back();
        auto it = root.find(0);
        if (it == root.end() || it->second.cost > inst_.k) return std::nullopt;
        CliqueFamily f;
        collect(static_cast<int>(count) - 1, 0, f);
        return canonical(std::move(f));
    }

private:
    // Re-index a child mask into the edge list of node i.
    std::uint64_t remap(std::size_t from, std::uint64_t mask, std::size_t to) const {
        std::uint64_t out = 0;
        const EdgeSet& src = local_[from];
        const EdgeSet& dst = local_[to];
        for (std::size_t j = 0; j < src.size(); ++j) {
            if (!(mask >> j & 1U)) continue;
            auto it = std::lower_bound(dst.begin(), dst.end(), src[j]);
            if (it != dst.end() && *it == src[j]) out |= std::uint64_t{1} << (it - dst.begin());
        }
        return out;
    }

    void introduce(std::size_t i) {
        const NiceNode& x = nd_.nodes[i];
        const std::size_t c = static_cast<std::size_t>(x.children[0]);
        TwTable& t = tables_[i];
        for (const auto& [mask, e] : tables_[c]) improve(t, remap(c, mask, i), TwEntry{e.cost, -1, mask, 0});

        // Cliques through the new vertex that are maximal inside the bag.
        VertexSet around = set_intersection(x.bag, inst_.g.neighbors(x.vertex));
        CliqueFamily options = around.empty() ? CliqueFamily{VertexSet{}} : maximal_cliques_within(inst_.g, around);
        std::vector<std::uint64_t> masks;
        for (VertexSet& k : options) {
            k = set_union(k, VertexSet{x.vertex});
            std::uint64_t m = b_mask(local_[i], k);
            if (m == 0) continue;
            masks.push_back(m);
            cliques_[i].push_back(k);
        }
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto& [mask, e] : TwTable(t)) {
                for (std::size_t j = 0; j < masks.size(); ++j) {
                    std::uint64_t m = mask | masks[j];
                    if (m == mask) continue;
                    changed |= improve(t, m, TwEntry{e.cost + 1, static_cast<int>(j), mask, 0});
                }
            }
        }
    }

    void forget(std::size_t i) {
        const NiceNode& x = nd_.nodes[i];
        const std::size_t c = static_cast<std::size_t>(x.children[0]);
        std::uint64_t at_v = 0;
        for (std::size_t j = 0; j < local_[c].size(); ++j)
            if (local_[c][j].u == x.vertex || local_[c][j].v == x.vertex) at_v |= std::uint64_t{1} << j;
        for (const auto& [mask, e] : tables_[c]) {
            // Every annotated edge at v must be covered before v leaves.
            if ((mask & at_v) != at_v) continue;
            improve(tables_[i], remap(c, mask, i), TwEntry{e.cost, -1, mask, 0});
        }
    }

    void join(std::size_t i) {
        const NiceNode& x = nd_.nodes[i];
        const TwTable& left = tables_[static_cast<std::size_t>(x.children[0])];
        const TwTable& right = tables_[static_cast<std::size_t>(x.children[1])];
        for (const auto& [a, ea] : left)
            for (const auto& [b, eb] : right) improve(tables_[i], a | b, TwEntry{ea.cost + eb.cost, -1, a, b});
    }

    void collect(int node, std::uint64_t mask, CliqueFamily& out) const {
        while (true) {
            const NiceNode& x = nd_.nodes[static_cast<std::size_t>(node)];
            const TwEntry& e = tables_[static_cast<std::size_t>(node)].at(mask);
            switch (x.kind) {
                case NiceKind::leaf: return;
                case NiceKind::introduce:
                    if (e.clique >= 0) {
                        out.push_back(cliques_[static_cast<std::size_t>(node)][static_cast<std::size_t>(e.clique)]);
                        mask = e.prev;
                        continue;
                    }
                    [[fallthrough]];
                case NiceKind::forget:
                    node = x.children[0];
                    mask = e.prev;
                    continue;
                case NiceKind::join:
                    collect(x.children[0], e.prev, out);
                    node = x.children[1];
                    mask = e.prev2;
                    continue;
            }
        }
    }

    const AnnotatedInstance& inst_;
    NiceDecomposition nd_;
    std::vector<EdgeSet> local_;
    std::vector<CliqueFamily> cliques_;
    std::vector<TwTable> tables_;
};

}  // namespace

AeccAnswer solve_treewidth_dp(const AnnotatedInstance& inst, const TreeDecomposition& td) {
    validate(inst);
    return AnnotatedTreewidthDp(inst, td).run();
}

AeccAnswer solve_minor_free(const AnnotatedInstance& inst) {
    validate(inst);
    if (inst.b.empty()) return CliqueFamily{};
    Pruned p = prune(inst);
    int d = degeneracy(p.inst.g).degeneracy;
    // Each clique has at most d+1 vertices and every remaining vertex needs one.
    if (static_cast<long long>(p.inst.g.n()) > static_cast<long long>(d + 1) * inst.k) return std::nullopt;
    return lift(solve_treewidth_dp(p.inst, min_fill_decomposition(p.inst.g)), p.original);
}

AeccAnswer aecc_bruteforce(const AnnotatedInstance& inst) {
    validate(inst);
    if (inst.g.n() > kMaxBruteforceAeccVertices || static_cast<int>(inst.b.size()) > kMaxBruteforceAeccEdges) {
        throw SizeGuardError("aecc_bruteforce: needs n <= " + std::to_string(kMaxBruteforceAeccVertices) +
                             " and |b| <= " + std::to_string(kMaxBruteforceAeccEdges));
    }
    CliqueFamily cliques;
    SetMasks masks;
    for (const VertexSet& c : maximal_cliques(inst.g)) {
        std::uint64_t m = b_mask(inst.b, c);
        if (m == 0) continue;
        cliques.push_back(c);
        masks.push_back(m);
    }
    auto pick = set_cover_combinations(static_cast<int>(inst.b.size()), masks, inst.k);
    if (!pick) return std::nullopt;
    CliqueFamily f;
    for (int i : *pick) f.push_back(cliques[static_cast<std::size_t>(i)]);
    return canonical(std::move(f));
}

int aecc_number_bruteforce(const Graph& g, const EdgeSet& b) {
    AnnotatedInstance inst{g, b, static_cast<int>(b.size())};
    AeccAnswer a = aecc_bruteforce(inst);
    return static_cast<int>(a->size());
}

AeccEngine parse_aecc_engine(const std::string& name) {
    static const std::map<std::string, AeccEngine> names{
        {"auto", AeccEngine::automatic},        {"k-le-2", AeccEngine::k_le_2},
        {"bounded-omega", AeccEngine::bounded_omega}, {"degenerate", AeccEngine::degenerate},
        {"treewidth", AeccEngine::treewidth},   {"minor-free", AeccEngine::minor_free},
        {"bruteforce", AeccEngine::bruteforce},
    };
    auto it = names.find(name);
    if (it == names.end()) throw PreconditionError("unknown AECC engine '" + name + "'");
    return it->second;
}

std::string to_string(AeccEngine engine) {
    switch (engine) {
        case AeccEngine::automatic: return "auto";
        case AeccEngine::k_le_2: return "k-le-2";
        case AeccEngine::bounded_omega: return "bounded-omega";
        case AeccEngine::degenerate: return "degenerate";
        case AeccEngine::treewidth: return "treewidth";
        case AeccEngine::minor_free: return "minor-free";
        case AeccEngine::bruteforce: return "bruteforce";
    }
    return "auto";
}

namespace {

// Rough log2 work estimates; only the ordering matters.
AeccEngine pick_engine(const AnnotatedInstance& inst) {
    Pruned p = prune(inst);
    const double k = inst.k;
    const double edges = static_cast<double>(p.inst.b.size());
    int d = degeneracy(p.inst.g).degeneracy;
    double omega_cost = std::min(edges, 60.0);
    double degenerate_cost = k * std::log2(std::max(2.0, std::pow(3.0, std::max(1, d - 1) / 3.0)));
    TreeDecomposition td = min_fill_decomposition(p.inst.g);
    double bag_edges = static_cast<double>(td.width() + 1) * td.width() / 2.0;
    double tw_cost = 2.0 * std::min(bag_edges, 60.0);
    if (omega_cost <= degenerate_cost && omega_cost <= tw_cost) return AeccEngine::bounded_omega;
    if (tw_cost < degenerate_cost && bag_edges <= 40) return AeccEngine::minor_free;
    return AeccEngine::degenerate;
}

}  // namespace

AeccAnswer solve_aecc(const AnnotatedInstance& inst, AeccEngine engine) {
    validate(inst);
    if (engine == AeccEngine::automatic) {
        if (inst.k <= 2) return solve_k_le_2(inst);
        if (inst.b.empty()) return CliqueFamily{};
        if (is_triangle_free(inst.g)) return solve_bounded_omega(inst);
        engine = pick_engine(inst);
    }
    switch (engine) {
        case AeccEngine::k_le_2: return solve_k_le_2(inst);
        case AeccEngine::bounded_omega: return solve_bounded_omega(inst);
        case AeccEngine::degenerate: return solve_degenerate(inst);
        case AeccEngine::treewidth: return solve_treewidth_dp(inst, min_fill_decomposition(inst.g));
        case AeccEngine::minor_free: return solve_minor_free(inst);
        case AeccEngine::bruteforce: return aecc_bruteforce(inst);
        case AeccEngine::automatic: break;
    }
    return solve_degenerate(inst);
}

}  // namespace alphacover
