#include "alphacover/ecp_alpha.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "alphacover/errors.hpp"
#include "alphacover/simplicial.hpp"

namespace alphacover {

namespace {

CliqueFamily canonical(CliqueFamily f) {
    for (auto& c : f) std::sort(c.begin(), c.end());
    std::sort(f.begin(), f.end());
    return f;
}

class PartitionSearch {
public:
    explicit PartitionSearch(const Graph& g) : g_(g), n_(g.n()), uncovered_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0) {
        for (const Edge& e : g.edges()) {
            set(e.u, e.v, 1);
            ++open_;
        }
    }

    std::optional<CliqueFamily> run(int budget) {
        chosen_.clear();
        if (!search(budget)) return std::nullopt;
        return canonical(chosen_);
    }

private:
    bool open(Vertex a, Vertex b) const { return uncovered_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)] != 0; }

    void set(Vertex a, Vertex b, char value) {
        uncovered_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)] = value;
        uncovered_[static_cast<std::size_t>(b) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(a)] = value;
    }

    void mark(const VertexSet& c, char value) {
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) set(c[i], c[j], value);
        long long edges = static_cast<long long>(c.size()) * static_cast<long long>(c.size() - 1) / 2;
        open_ += value ? edges : -edges;
    }

    void grow(VertexSet& current, const VertexSet& pool, std::size_t from, CliqueFamily& out) const {
        out.push_back(current);
        for (std::size_t i = from; i < pool.size(); ++i) {
            Vertex w = pool[i];
            bool fits = std::all_of(current.begin(), current.end(), [&](Vertex x) { return open(x, w); });
            if (!fits) continue;
            current.push_back(w);
            grow(current, pool, i + 1, out);
            current.pop_back();
        }
    }

    bool search(int budget) {
        if (open_ == 0) return true;
        if (budget == 0) return false;
        Vertex u = -1, v = -1;
        int widest = 0;
        for (Vertex a = 0; a < n_; ++a) {
            int d = 0;
            for (Vertex b : g_.neighbors(a)) {
                if (!open(a, b)) continue;
                ++d;
                if (u < 0 && a < b) {
                    u = a;
                    v = b;
                }
            }
            widest = std::max(widest, d);
        }
        // A clique meeting at most `widest` open edges per vertex covers at most C(widest+1, 2).
        long long per_clique = static_cast<long long>(widest + 1) * widest / 2;
        if (per_clique * budget < open_) return false;

        VertexSet pool;
        for (Vertex w : g_.neighbors(u))
            if (w != v && open(u, w) && open(v, w)) pool.push_back(w);
        CliqueFamily options;
        VertexSet current;
        grow(current, pool, 0, options);
        std::stable_sort(options.begin(), options.end(),
                         [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
        for (VertexSet& c : options) {
            c.push_back(u);
            c.push_back(v);
            std::sort(c.begin(), c.end());
            mark(c, 0);
            chosen_.push_back(c);
            if (search(budget - 1)) return true;
            chosen_.pop_back();
            mark(c, 1);
        }
        return false;
    }

    const Graph& g_;
    int n_;
    std::vector<char> uncovered_;
    long long open_ = 0;
    CliqueFamily chosen_;
};

}  // namespace

std::optional<CliqueFamily> ecp_exact(const Graph& g, int k) {
    if (k < 0) return std::nullopt;
    PartitionSearch search(g);
    for (int budget = 0; budget <= k; ++budget) {
        if (auto found = search.run(budget)) return found;
    }
    return std::nullopt;
}

std::optional<AlphaResult> alpha_or_reject(const Graph& g, int k) {
    if (k < 1) throw PreconditionError("alpha_or_reject needs k >= 1");
    if (Vertex v = g.first_isolated_vertex(); v >= 0) throw IsolatedVertexError(v);
    SimplicialReport rep = simplicial_report(g);
    VertexSet rest;
    for (Vertex v = 0; v < g.n(); ++v) {
        bool in_simplicial = std::any_of(rep.simplicial_cliques.begin(), rep.simplicial_cliques.end(),
                                         [&](const VertexSet& c) { return contains(c, v); });
        if (!in_simplicial) rest.push_back(v);
    }
    Graph h = induced_subgraph(g, rest);
    // Only non-simplicial cliques reach H, and a YES-partition has at most 2k of those.
    std::optional<CliqueFamily> partition = ecp_exact(h, 2 * k);
    if (!partition) return std::nullopt;
    AlphaResult inner = alpha_from_cover(h, *partition);
    AlphaResult out;
    for (Vertex v : inner.witness) out.witness.push_back(rest[static_cast<std::size_t>(v)]);
    out.witness.insert(out.witness.end(), rep.representative.begin(), rep.representative.end());
    std::sort(out.witness.begin(), out.witness.end());
    out.alpha = static_cast<int>(out.witness.size());
    return out;
}

namespace {

bool in_some(const CliqueFamily& family, Vertex x, Vertex y, std::size_t skip) {
    for (std::size_t i = 0; i < family.size(); ++i)
        if (i != skip && contains(family[i], x) && contains(family[i], y)) return true;
    return false;
}

void add_unique(CliqueFamily& family, VertexSet c) {
    if (std::find(family.begin(), family.end(), c) == family.end()) family.push_back(std::move(c));
}

}  // namespace

std::optional<CliqueFamily> mandatory_cliques(const Graph& g, int k) {
    if (k < 1) throw PreconditionError("mandatory_cliques needs k >= 1");
    if (Vertex v = g.first_isolated_vertex(); v >= 0) throw IsolatedVertexError(v);
    SimplicialReport rep = simplicial_report(g);
    const CliqueFamily& simplicial = rep.simplicial_cliques;
    const std::size_t none = simplicial.size();
    CliqueFamily mandatory;

    for (Vertex v : rep.simplicial_vertices) {
        VertexSet closed = g.closed_neighborhood(v);
        std::size_t own = static_cast<std::size_t>(std::find(simplicial.begin(), simplicial.end(), closed) - simplicial.begin());
        // H_v on N[v]: x ~ y unless another simplicial clique holds both.
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < closed.size(); ++i)
            for (std::size_t j = i + 1; j < closed.size(); ++j)
                if (!in_some(simplicial, closed[i], closed[j], own)) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        Graph hv(static_cast<int>(closed.size()), edges);
        CriticalCliquePartition cc = critical_cliques(hv);
        auto local_v = static_cast<Vertex>(std::lower_bound(closed.begin(), closed.end(), v) - closed.begin());
        const VertexSet& kv = cc.classes[static_cast<std::size_t>(cc.class_of[static_cast<std::size_t>(local_v)])];
        if (static_cast<int>(kv.size()) >= 2 * k + 1) {
            add_unique(mandatory, closed);
            continue;
        }
        for (const VertexSet& kk : cc.classes) {
            if (contains(kk, local_v) || static_cast<int>(kk.size()) < 2 * k) continue;
            VertexSet c;
            for (Vertex x : hv.closed_neighborhood(kk.front())) c.push_back(closed[static_cast<std::size_t>(x)]);
            add_unique(mandatory, std::move(c));
        }
    }

    // Global H over G-edges that no simplicial clique holds.
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (!in_some(simplicial, e.u, e.v, none)) edges.push_back(e);
    Graph h(g.n(), edges);
    for (const VertexSet& kk : critical_cliques(h).classes) {
        if (static_cast<int>(kk.size()) < 2 * k + 1) continue;
        VertexSet c = h.closed_neighborhood(kk.front());
        if (!is_clique(g, c)) return std::nullopt;
        add_unique(mandatory, std::move(c));
    }

    // Two mandatory cliques sharing an edge cannot both be in a partition.
    for (std::size_t i = 0; i < mandatory.size(); ++i)
        for (std::size_t j = i + 1; j < mandatory.size(); ++j)
            if (intersection_size(mandatory[i], mandatory[j]) >= 2) return std::nullopt;
    return canonical(std::move(mandatory));
}

Graph broken_conflict_graph(const CliqueFamily& simplicial_cliques) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < simplicial_cliques.size(); ++i)
        for (std::size_t j = i + 1; j < simplicial_cliques.size(); ++j)
            if (intersection_size(simplicial_cliques[i], simplicial_cliques[j]) >= 2)
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return Graph(static_cast<int>(simplicial_cliques.size()), edges);
}

namespace {

void cover_branch(const EdgeSet& edges, VertexSet& chosen, int budget, std::vector<VertexSet>& out) {
    const Edge* open = nullptr;
    for (const Edge& e : edges) {
        if (!contains(chosen, e.u) && !contains(chosen, e.v)) {
            open = &e;
            break;
        }
    }
    if (!open) {
        out.push_back(chosen);
        return;
    }
    if (budget == 0) return;
    for (Vertex x : {open->u, open->v}) {
        VertexSet next = set_union(chosen, VertexSet{x});
        cover_branch(edges, next, budget - 1, out);
    }
}

bool is_vertex_cover(const EdgeSet& edges, const VertexSet& s) {
    return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return contains(s, e.u) || contains(s, e.v); });
}

}  // namespace

std::vector<VertexSet> minimal_vertex_covers_upto(const Graph& h, int k) {
    if (k < 0) return {};
    EdgeSet edges = h.edges();
    std::vector<VertexSet> found;
    VertexSet chosen;
    cover_branch(edges, chosen, k, found);
    std::vector<VertexSet> minimal;
    for (const VertexSet& c : found) {
        bool is_minimal = std::none_of(c.begin(), c.end(), [&](Vertex x) {
            return is_vertex_cover(edges, set_difference(c, VertexSet{x}));
        });
        if (is_minimal) minimal.push_back(c);
    }
    std::sort(minimal.begin(), minimal.end());
    minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
    return minimal;
}

std::optional<CliqueFamily> extend(const Graph& g, const ExtendState& state) {
    const int k = state.k;
    if (static_cast<int>(state.broken.size()) > k) return std::nullopt;

    EdgeSet open;
    for (const Edge& e : g.edges()) {
        auto holds = [&](const VertexSet& c) { return contains(c, e.u) && contains(c, e.v); };
        if (std::none_of(state.free.begin(), state.free.end(), holds) &&
            std::none_of(state.mandatory.begin(), state.mandatory.end(), holds)) {
            open.push_back(e);
        }
    }
    VertexSet qv;
    for (const Edge& e : open) {
        qv.push_back(e.u);
        qv.push_back(e.v);
    }
    std::sort(qv.begin(), qv.end());
    qv.erase(std::unique(qv.begin(), qv.end()), qv.end());
    if (static_cast<long long>(qv.size()) > 12LL * k * k) return std::nullopt;

    auto local = [&](Vertex v) { return static_cast<Vertex>(std::lower_bound(qv.begin(), qv.end(), v) - qv.begin()); };
    std::vector<Edge> qe;
    for (const Edge& e : open) qe.emplace_back(local(e.u), local(e.v));
    Graph q(static_cast<int>(qv.size()), qe);

    if (auto part = ecp_exact(q, 2 * k)) {
        if (part->size() + state.free.size() + state.mandatory.size() <= static_cast<std::size_t>(state.alpha + k)) {
            CliqueFamily all = state.free;
            all.insert(all.end(), state.mandatory.begin(), state.mandatory.end());
            for (const VertexSet& c : *part) {
                VertexSet d;
                for (Vertex v : c) d.push_back(qv[static_cast<std::size_t>(v)]);
                all.push_back(std::move(d));
            }
            return canonical(std::move(all));
        }
    }

    // The recursion depends only on which free clique gets broken, so branch once per clique.
    for (std::size_t i = 0; i < state.free.size(); ++i) {
        if (intersection_size(state.free[i], qv) < 2) continue;
        ExtendState next = state;
        next.free.erase(next.free.begin() + static_cast<std::ptrdiff_t>(i));
        next.broken.push_back(state.free[i]);
        if (auto found = extend(g, next)) return found;
    }
    return std::nullopt;
}

namespace {

Certificate finish(const Graph& g, CliqueFamily cliques, const AlphaResult& alpha, int k) {
    Certificate cert{CertificateKind::partition, std::move(cliques), alpha.witness, alpha.alpha, k};
    cert.canonicalize();
    if (Verdict v = verify_certificate(g, cert); !v) {
        throw std::logic_error("ecp-alpha produced an invalid certificate: " + v.diagnostic);
    }
    return cert;
}

}  // namespace

std::optional<Certificate> solve_ecp_alpha(const Graph& g, int k, EcpAlphaOptions options) {
    if (k < 0) throw PreconditionError("k must be nonnegative");
    if (Vertex v = g.first_isolated_vertex(); v >= 0) throw IsolatedVertexError(v);
    SimplicialReport rep = simplicial_report(g);
    const CliqueFamily& simplicial = rep.simplicial_cliques;

    if (k == 0) {
        // A partition of size alpha uses only simplicial cliques, and all of them.
        if (!verify_partition(g, simplicial)) return std::nullopt;
        AlphaResult alpha{static_cast<int>(rep.representative.size()), rep.representative};
        return finish(g, simplicial, alpha, k);
    }

    std::optional<AlphaResult> alpha = alpha_or_reject(g, k);
    if (!alpha) return std::nullopt;
    std::optional<CliqueFamily> mandatory = mandatory_cliques(g, k);
    if (!mandatory) return std::nullopt;
    if (static_cast<int>(mandatory->size()) > alpha->alpha + k) return std::nullopt;

    std::vector<VertexSet> covers = minimal_vertex_covers_upto(broken_conflict_graph(simplicial), k);
    if (covers.empty()) return std::nullopt;

    auto attempt = [&](const VertexSet& cover) -> std::optional<CliqueFamily> {
        ExtendState state;
        state.mandatory = *mandatory;
        state.alpha = alpha->alpha;
        state.k = k;
        std::vector<char> broken(simplicial.size(), 0);
        for (Vertex i : cover) broken[static_cast<std::size_t>(i)] = 1;
        auto is_mandatory = [&](const VertexSet& s) {
            return std::find(mandatory->begin(), mandatory->end(), s) != mandatory->end();
        };
        // Simplicial cliques overlapping a mandatory clique in an edge must break.
        for (std::size_t i = 0; i < simplicial.size(); ++i) {
            if (broken[i] || is_mandatory(simplicial[i])) continue;
            for (const VertexSet& m : *mandatory) {
                if (intersection_size(simplicial[i], m) >= 2) {
                    broken[i] = 1;
                    break;
                }
            }
        }
        for (std::size_t i = 0; i < simplicial.size(); ++i) {
            if (broken[i]) {
                state.broken.push_back(simplicial[i]);
            } else if (!is_mandatory(simplicial[i])) {
                state.free.push_back(simplicial[i]);
            }
        }
        if (static_cast<int>(state.broken.size()) > k + 1) return std::nullopt;
        return extend(g, state);
    };

    const std::size_t count = covers.size();
    std::vector<std::optional<CliqueFamily>> results(count);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{count};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            if (i > best.load()) continue;
            results[i] = attempt(covers[i]);
            if (results[i]) {
                std::size_t seen = best.load();
                while (i < seen && !best.compare_exchange_weak(seen, i)) {
                }
            }
        }
    };
    const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(count)));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    // Lowest cover index wins, whatever the scheduling.
    if (best.load() == count) return std::nullopt;
    return finish(g, std::move(*results[best.load()]), *alpha, k);
}

namespace {

class BrutePartition {
public:
    BrutePartition(const Graph& g, int max_clique_size) : edges_(g.edges()) {
        if (edges_.size() > kMaxBruteforceEcpEdges) {
            throw SizeGuardError("ecp_bruteforce: m = " + std::to_string(edges_.size()) + " exceeds " +
                                 std::to_string(kMaxBruteforceEcpEdges));
        }
        by_edge_.resize(edges_.size());
        for (const VertexSet& c : all_cliques(g, 2)) {
            if (static_cast<int>(c.size()) > max_clique_size) continue;
            std::uint32_t m = 0;
            for (std::size_t i = 0; i < edges_.size(); ++i)
                if (contains(c, edges_[i].u) && contains(c, edges_[i].v)) m |= std::uint32_t{1} << i;
            for (std::size_t i = 0; i < edges_.size(); ++i)
                if (m >> i & 1U) by_edge_[i].push_back(cliques_.size());
            cliques_.push_back(c);
            masks_.push_back(m);
        }
        memo_.assign(std::size_t{1} << edges_.size(), kUnknown);
    }

    EcpResult run() {
        std::uint32_t all = static_cast<std::uint32_t>((std::uint64_t{1} << edges_.size()) - 1);
        EcpResult r;
        r.size = solve(all);
        if (r.size >= kInfeasible) {
            r.size = -1;
            return r;
        }
        for (std::uint32_t x = all; x != 0;) {
            int low = std::countr_zero(x);
            for (std::size_t c : by_edge_[static_cast<std::size_t>(low)]) {
                std::uint32_t m = masks_[c];
                if ((m & x) == m && solve(x & ~m) + 1 == solve(x)) {
                    r.partition.push_back(cliques_[c]);
                    x &= ~m;
                    break;
                }
            }
        }
        r.partition = canonical(std::move(r.partition));
        return r;
    }

private:
    static constexpr std::uint8_t kUnknown = 255;
    static constexpr std::uint8_t kInfeasible = 254;

    std::uint8_t solve(std::uint32_t x) {
        if (x == 0) return 0;
        std::uint8_t& slot = memo_[x];
        if (slot != kUnknown) return slot;
        int low = std::countr_zero(x);
        int best = kInfeasible;
        for (std::size_t c : by_edge_[static_cast<std::size_t>(low)]) {
            std::uint32_t m = masks_[c];
            if ((m & x) != m) continue;
            best = std::min(best, solve(x & ~m) + 1);
        }
        memo_[x] = static_cast<std::uint8_t>(std::min(best, static_cast<int>(kInfeasible)));
        return memo_[x];
    }

    EdgeSet edges_;
    CliqueFamily cliques_;
    std::vector<std::uint32_t> masks_;
    std::vector<std::vector<std::size_t>> by_edge_;
    std::vector<std::uint8_t> memo_;
};

}  // namespace

EcpResult ecp_bruteforce(const Graph& g) { return BrutePartition(g, g.n()).run(); }

EcpResult ecp_bruteforce_restricted(const Graph& g, int max_clique_size) {
    return BrutePartition(g, std::max(2, max_clique_size)).run();
}

}  // namespace alphacover
