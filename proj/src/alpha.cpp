#include "alphacover/alpha.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>

#include "alphacover/certificate.hpp"
#include "alphacover/errors.hpp"

namespace alphacover {

int CharVector::dot(const CharVector& other) const { return std::popcount(bits & other.bits); }

std::vector<CharVector> characteristic_vectors(const Graph& g, const CliqueFamily& cover) {
    if (cover.size() > 64) throw SizeGuardError("characteristic vectors support at most 64 cliques");
    std::vector<CharVector> x(static_cast<std::size_t>(g.n()), CharVector{0, static_cast<int>(cover.size())});
    for (std::size_t i = 0; i < cover.size(); ++i) {
        for (Vertex v : cover[i]) {
            if (v < 0 || v >= g.n()) throw PreconditionError("cover vertex out of range");
            x[static_cast<std::size_t>(v)].bits |= std::uint64_t{1} << i;
        }
    }
    return x;
}

AlphaResult alpha_from_cover(const Graph& g, const CliqueFamily& cover) {
    if (static_cast<int>(cover.size()) > kMaxCoverForAlpha) {
        throw SizeGuardError("alpha_from_cover: cover of size " + std::to_string(cover.size()) + " exceeds " +
                             std::to_string(kMaxCoverForAlpha));
    }
    if (Verdict v = verify_cover(g, cover); !v) throw PreconditionError("alpha_from_cover: " + v.diagnostic);

    std::vector<CharVector> x = characteristic_vectors(g, cover);
    VertexSet isolated;
    // Equal vectors share a clique, so only the lowest vertex per vector matters.
    std::map<std::uint64_t, Vertex> lowest;
    for (Vertex v = 0; v < g.n(); ++v) {
        std::uint64_t bits = x[static_cast<std::size_t>(v)].bits;
        if (g.degree(v) == 0) {
            isolated.push_back(v);
        } else {
            lowest.emplace(bits, v);
        }
    }
    std::vector<std::pair<std::uint64_t, Vertex>> vectors(lowest.begin(), lowest.end());

    // layers[i]: reachable union of i disjoint vectors -> lowest vertex added last.
    std::vector<std::unordered_map<std::uint64_t, Vertex>> layers(1);
    layers[0].emplace(0, -1);
    while (true) {
        std::unordered_map<std::uint64_t, Vertex> next;
        for (const auto& [mask, _] : layers.back()) {
            for (const auto& [bits, v] : vectors) {
                if (mask & bits) continue;
                auto [it, fresh] = next.emplace(mask | bits, v);
                if (!fresh && v < it->second) it->second = v;
            }
        }
        if (next.empty()) break;
        layers.push_back(std::move(next));
    }

    AlphaResult result;
    std::uint64_t mask = std::numeric_limits<std::uint64_t>::max();
    for (const auto& [m, _] : layers.back()) mask = std::min(mask, m);
    for (std::size_t i = layers.size() - 1; i > 0; --i) {
        Vertex v = layers[i].at(mask);
        result.witness.push_back(v);
        mask ^= x[static_cast<std::size_t>(v)].bits;
    }
    result.witness.insert(result.witness.end(), isolated.begin(), isolated.end());
    std::sort(result.witness.begin(), result.witness.end());
    result.alpha = static_cast<int>(result.witness.size());
    return result;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // r * (n-k+i) is divisible by i; cancel the gcd first so the product stays exact.
        std::uint64_t g = std::gcd(r, i);
        std::uint64_t x = (n - k + i) / (i / g);
        if (__builtin_mul_overflow(r / g, x, &r)) return cap;
    }
    return r;
}

namespace {

CliqueOrIS ramsey(const Graph& g, const VertexSet& pool, int p, int q) {
    using Kind = CliqueOrIS::Kind;
    if (p == 1) return {Kind::clique, {pool.front()}};
    if (q == 1) return {Kind::independent, {pool.front()}};
    Vertex v = pool.front();
    VertexSet near, far;
    for (std::size_t i = 1; i < pool.size(); ++i) (g.adjacent(v, pool[i]) ? near : far).push_back(pool[i]);
    auto need = [](int a, int b) {
        return binomial_saturating(static_cast<std::uint64_t>(a + b - 2), static_cast<std::uint64_t>(a - 1));
    };
    if (near.size() >= need(p - 1, q)) {
        CliqueOrIS r = ramsey(g, near, p - 1, q);
        if (r.kind == Kind::clique) r.set.insert(r.set.begin(), v);
        return r;
    }
    CliqueOrIS r = ramsey(g, far, p, q - 1);
    if (r.kind == Kind::independent) r.set.insert(r.set.begin(), v);
    return r;
}

}  // namespace

CliqueOrIS ramsey_clique_or_is(const Graph& g, int p, int q) {
    if (p < 1 || q < 1) throw PreconditionError("ramsey_clique_or_is needs p, q >= 1");
    std::uint64_t need = binomial_saturating(static_cast<std::uint64_t>(p + q - 2), static_cast<std::uint64_t>(p - 1));
    if (static_cast<std::uint64_t>(g.n()) < need) {
        throw PreconditionError("ramsey_clique_or_is needs n >= C(p+q-2, p-1) = " + std::to_string(need));
    }
    VertexSet pool(static_cast<std::size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v) pool[static_cast<std::size_t>(v)] = v;
    CliqueOrIS r = ramsey(g, pool, p, q);
    std::sort(r.set.begin(), r.set.end());
    return r;
}

namespace {

class TwoDegenerateSearch {
public:
    explicit TwoDegenerateSearch(const Graph& g) : g_(g), alive_(static_cast<std::size_t>(g.n()), 1) {}

    std::optional<VertexSet> run(int need) {
        VertexSet chosen;
        if (!search(need, chosen)) return std::nullopt;
        std::sort(chosen.begin(), chosen.end());
        return chosen;
    }

private:
    int live_degree(Vertex v) const {
        int d = 0;
        for (Vertex u : g_.neighbors(v)) d += alive_[static_cast<std::size_t>(u)];
        return d;
    }

    std::vector<Vertex> take(Vertex v) {
        std::vector<Vertex> removed;
        if (alive_[static_cast<std::size_t>(v)]) removed.push_back(v);
        alive_[static_cast<std::size_t>(v)] = 0;
        for (Vertex u : g_.neighbors(v)) {
            if (alive_[static_cast<std::size_t>(u)]) {
                alive_[static_cast<std::size_t>(u)] = 0;
                removed.push_back(u);
            }
        }
        return removed;
    }

    void restore(const std::vector<Vertex>& removed) {
        for (Vertex u : removed) alive_[static_cast<std::size_t>(u)] = 1;
    }

    bool search(int need, VertexSet& chosen) {
        if (need <= 0) return true;
        Vertex v = -1;
        int best = std::numeric_limits<int>::max();
        int remaining = 0;
        for (Vertex u = 0; u < g_.n(); ++u) {
            if (!alive_[static_cast<std::size_t>(u)]) continue;
            ++remaining;
            int d = live_degree(u);
            if (d < best) {
                best = d;
                v = u;
            }
        }
        if (remaining < need) return false;
        if (best > 2) throw PreconditionError("alpha_2degenerate: graph has degeneracy above 2");

        if (best <= 1) {
            // Taking a vertex of degree <= 1 never loses optimality.
            auto removed = take(v);
            chosen.push_back(v);
            if (search(need - 1, chosen)) return true;
            chosen.pop_back();
            restore(removed);
            return false;
        }
        Vertex a = -1, b = -1;
        for (Vertex u : g_.neighbors(v)) {
            if (!alive_[static_cast<std::size_t>(u)]) continue;
            (a < 0 ? a : b) = u;
        }
        {
            auto removed = take(v);
            chosen.push_back(v);
            if (search(need - 1, chosen)) return true;
            chosen.pop_back();
            restore(removed);
        }
        // Some maximum set holds v or both neighbours; if they are adjacent, v alone suffices.
        if (g_.adjacent(a, b)) return false;
        auto ra = take(a);
        auto rb = take(b);
        chosen.push_back(a);
        chosen.push_back(b);
        if (search(need - 2, chosen)) return true;
        chosen.pop_back();
        chosen.pop_back();
        restore(rb);
        restore(ra);
        return false;
    }

    const Graph& g_;
    std::vector<char> alive_;
};

}  // namespace

std::optional<VertexSet> alpha_2degenerate(const Graph& g, int k) {
    if (degeneracy(g).degeneracy > 2) throw PreconditionError("alpha_2degenerate: graph has degeneracy above 2");
    return TwoDegenerateSearch(g).run(k);
}

AlphaResult alpha_2degenerate_max(const Graph& g) {
    if (degeneracy(g).degeneracy > 2) throw PreconditionError("alpha_2degenerate: graph has degeneracy above 2");
    AlphaResult best;
    for (int t = 1; t <= g.n(); ++t) {
        auto found = TwoDegenerateSearch(g).run(t);
        if (!found) break;
        found->resize(static_cast<std::size_t>(t));
        best = {t, *found};
    }
    std::sort(best.witness.begin(), best.witness.end());
    return best;
}

namespace {

struct IsEntry {
    int size = 0;
    std::uint64_t from = 0;   // child state (introduce / forget)
};

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

int position_in(const VertexSet& bag, Vertex v) {
    return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

// Removes bit p, shifting higher bits down.
std::uint64_t drop_bit(std::uint64_t mask, int p) {
    std::uint64_t low = mask & (bit(p) - 1);
    return low | ((mask >> (p + 1)) << p);
}

// Inserts a zero at bit p, shifting higher bits up.
std::uint64_t open_bit(std::uint64_t mask, int p) {
    std::uint64_t low = mask & (bit(p) - 1);
    return low | ((mask >> p) << (p + 1));
}

}  // namespace

AlphaResult alpha_treewidth_max(const Graph& g, const TreeDecomposition& td) {
    NiceDecomposition nd = make_nice(g, td);
    if (nd.width() >= 62) throw SizeGuardError("alpha_treewidth_dp supports bags of at most 62 vertices");
    const std::size_t count = nd.nodes.size();
    std::vector<std::unordered_map<std::uint64_t, IsEntry>> table(count);

    for (std::size_t i = 0; i < count; ++i) {
        const NiceNode& x = nd.nodes[i];
        auto& here = table[i];
        switch (x.kind) {
            case NiceKind::leaf:
                here.emplace(0, IsEntry{0, 0});
                break;
            case NiceKind::introduce: {
                int p = position_in(x.bag, x.vertex);
                std::uint64_t nbrs = 0;
                for (std::size_t j = 0; j < x.bag.size(); ++j)
                    if (g.adjacent(x.vertex, x.bag[j])) nbrs |= bit(static_cast<int>(j));
                for (const auto& [mask, e] : table[static_cast<std::size_t>(x.children[0])]) {
                    std::uint64_t m = open_bit(mask, p);
                    here[m] = IsEntry{e.size, mask};
                    if (!(m & nbrs)) here[m | bit(p)] = IsEntry{e.size + 1, mask};
                }
                break;
            }
            case NiceKind::forget: {
                const VertexSet& cbag = nd.nodes[static_cast<std::size_t>(x.children[0])].bag;
                int p = position_in(cbag, x.vertex);
                for (const auto& [mask, e] : table[static_cast<std::size_t>(x.children[0])]) {
                    std::uint64_t m = drop_bit(mask, p);
                    auto [it, fresh] = here.emplace(m, IsEntry{e.size, mask});
                    if (!fresh && (e.size > it->second.size || (e.size == it->second.size && mask < it->second.from))) {
                        it->second = IsEntry{e.size, mask};
                    }
                }
                break;
            }
            case NiceKind::join: {
                const auto& left = table[static_cast<std::size_t>(x.children[0])];
                const auto& right = table[static_cast<std::size_t>(x.children[1])];
                for (const auto& [mask, e] : left) {
                    auto it = right.find(mask);
                    if (it == right.end()) continue;
                    here[mask] = IsEntry{e.size + it->second.size - std::popcount(mask), mask};
                }
                break;
            }
        }
    }

    AlphaResult result;
    std::vector<std::pair<int, std::uint64_t>> stack{{nd.root(), 0}};
    while (!stack.empty()) {
        auto [node, mask] = stack.back();
        stack.pop_back();
        const NiceNode& x = nd.nodes[static_cast<std::size_t>(node)];
        for (std::size_t j = 0; j < x.bag.size(); ++j)
            if (mask & bit(static_cast<int>(j))) result.witness.push_back(x.bag[j]);
        const IsEntry& e = table[static_cast<std::size_t>(node)].at(mask);
        for (int c : x.children) stack.emplace_back(c, x.kind == NiceKind::join ? mask : e.from);
    }
    std::sort(result.witness.begin(), result.witness.end());
    result.witness.erase(std::unique(result.witness.begin(), result.witness.end()), result.witness.end());
    result.alpha = static_cast<int>(result.witness.size());
    return result;
}

std::optional<VertexSet> alpha_treewidth_dp(const Graph& g, const TreeDecomposition& td, int k) {
    AlphaResult r = alpha_treewidth_max(g, td);
    if (r.alpha < k) return std::nullopt;
    return r.witness;
}

namespace {

class BruteAlpha {
public:
    explicit BruteAlpha(const Graph& g) : n_(g.n()), closed_(static_cast<std::size_t>(g.n())) {
        for (Vertex v = 0; v < n_; ++v) {
            closed_[static_cast<std::size_t>(v)] = std::uint32_t{1} << v;
            for (Vertex u : g.neighbors(v)) closed_[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
        }
    }

    AlphaResult run() {
        std::uint32_t all = n_ == 32 ? ~0U : ((std::uint32_t{1} << n_) - 1);
        search(all, 0);
        AlphaResult r;
        for (Vertex v = 0; v < n_; ++v)
            if (best_set_ & (std::uint32_t{1} << v)) r.witness.push_back(v);
        r.alpha = static_cast<int>(r.witness.size());
        return r;
    }

private:
    void search(std::uint32_t cand, std::uint32_t chosen) {
        if (std::popcount(cand) + std::popcount(chosen) <= best_) return;
        if (cand == 0) {
            best_ = std::popcount(chosen);
            best_set_ = chosen;
            return;
        }
        Vertex v = std::countr_zero(cand);
        std::uint32_t vb = std::uint32_t{1} << v;
        search(cand & ~closed_[static_cast<std::size_t>(v)], chosen | vb);
        // A vertex with no candidate neighbours is always worth taking.
        if ((closed_[static_cast<std::size_t>(v)] & cand) == vb) return;
        search(cand & ~vb, chosen);
    }

    int n_;
    std::vector<std::uint32_t> closed_;
    int best_ = -1;
    std::uint32_t best_set_ = 0;
};

}  // namespace

AlphaResult alpha_bruteforce(const Graph& g) {
    if (g.n() > kMaxBruteforceAlphaVertices) {
        throw SizeGuardError("alpha_bruteforce: n = " + std::to_string(g.n()) + " exceeds " +
                             std::to_string(kMaxBruteforceAlphaVertices));
    }
    return BruteAlpha(g).run();
}

}  // namespace alphacover
