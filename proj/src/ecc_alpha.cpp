#include "alphacover/ecc_alpha.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "alphacover/alpha.hpp"
#include "alphacover/errors.hpp"
#include "alphacover/simplicial.hpp"
#include "alphacover/tree_decomposition.hpp"

namespace alphacover {

EccAlphaReduction build_reduction(const Graph& g) {
    if (Vertex v = g.first_isolated_vertex(); v >= 0) throw IsolatedVertexError(v);
    SimplicialReport rep = simplicial_report(g);
    EccAlphaReduction r;
    r.simplicial = rep.simplicial_vertices;
    r.s_prime = rep.representative;

    std::vector<Vertex> local(static_cast<std::size_t>(g.n()), -1);
    for (Vertex v = 0; v < g.n(); ++v) {
        if (contains(r.simplicial, v)) continue;
        local[static_cast<std::size_t>(v)] = static_cast<Vertex>(r.original.size());
        r.original.push_back(v);
    }
    r.g_reduced = induced_subgraph(g, r.original);

    for (Vertex s : r.simplicial)
        for (Vertex x : g.neighbors(s))
            if (local[static_cast<std::size_t>(x)] >= 0) r.f_set.push_back(local[static_cast<std::size_t>(x)]);
    std::sort(r.f_set.begin(), r.f_set.end());
    r.f_set.erase(std::unique(r.f_set.begin(), r.f_set.end()), r.f_set.end());

    // Only edges outside every simplicial clique need annotating; an edge of G'
    // inside some N[s] is already paid for by the clique of s's twin class.
    for (const Edge& e : r.g_reduced.edges()) {
        Vertex u = r.original[static_cast<std::size_t>(e.u)];
        Vertex v = r.original[static_cast<std::size_t>(e.v)];
        bool simplicial_edge = std::any_of(rep.simplicial_cliques.begin(), rep.simplicial_cliques.end(),
                                           [&](const VertexSet& c) { return contains(c, u) && contains(c, v); });
        if (!simplicial_edge) r.b_edges.push_back(e);
    }
    return r;
}

CoreGraph core_without_f(const EccAlphaReduction& r) {
    CoreGraph c;
    for (Vertex v = 0; v < r.g_reduced.n(); ++v)
        if (!contains(r.f_set, v)) c.original.push_back(v);
    c.g = induced_subgraph(r.g_reduced, c.original);
    return c;
}

EccClass parse_ecc_class(const std::string& name) {
    static const std::map<std::string, EccClass> names{
        {"general", EccClass::general},         {"bounded-omega", EccClass::bounded_omega},
        {"degenerate", EccClass::degenerate},   {"two-degenerate", EccClass::two_degenerate},
        {"minor-free", EccClass::minor_free},
    };
    auto it = names.find(name);
    if (it == names.end()) throw PreconditionError("unknown graph class '" + name + "'");
    return it->second;
}

std::string to_string(EccClass c) {
    switch (c) {
        case EccClass::general: return "general";
        case EccClass::bounded_omega: return "bounded-omega";
        case EccClass::degenerate: return "degenerate";
        case EccClass::two_degenerate: return "two-degenerate";
        case EccClass::minor_free: return "minor-free";
    }
    return "general";
}

namespace {

enum class AlphaEngine { from_cover, two_degenerate, treewidth };

EccAlphaOutcome run(const Graph& g, int k, AeccEngine engine, AlphaEngine alpha_engine) {
    if (k < 0) throw PreconditionError("k must be nonnegative");
    EccAlphaReduction r = build_reduction(g);
    CoreGraph core = core_without_f(r);
    EccAlphaOutcome out;

    const int top = r.b_edges.empty() ? 0 : 2 * k;
    for (int kp = r.b_edges.empty() ? 0 : 1; kp <= top; ++kp) {
        AnnotatedInstance inst{r.g_reduced, r.b_edges, kp};
        out.trace.max_k_prime = kp;
        ++out.trace.aecc_calls;
        AeccAnswer found;
        if (kp <= 2) {
            found = solve_k_le_2(inst);
        } else {
            out.trace.polynomial_only = false;
            found = solve_aecc(inst, engine);
        }
        if (!found) continue;

        // Edges of G' - F carry no simplicial clique, so the solution covers them.
        AlphaResult t;
        switch (alpha_engine) {
            case AlphaEngine::from_cover: {
                CliqueFamily restricted;
                for (const VertexSet& c : *found) {
                    VertexSet d;
                    for (std::size_t i = 0; i < core.original.size(); ++i)
                        if (contains(c, core.original[i])) d.push_back(static_cast<Vertex>(i));
                    if (d.size() >= 2) restricted.push_back(std::move(d));
                }
                t = alpha_from_cover(core.g, restricted);
                break;
            }
            case AlphaEngine::two_degenerate: t = alpha_2degenerate_max(core.g); break;
            case AlphaEngine::treewidth: t = alpha_treewidth_max(core.g, min_fill_decomposition(core.g)); break;
        }
        const int used = static_cast<int>(found->size());
        if (used > t.alpha + k) return out;

        Certificate cert;
        cert.kind = CertificateKind::cover;
        cert.k = k;
        for (const VertexSet& c : *found) {
            VertexSet d;
            for (Vertex v : c) d.push_back(r.original[static_cast<std::size_t>(v)]);
            cert.cliques.push_back(std::move(d));
        }
        for (Vertex s : r.s_prime) cert.cliques.push_back(g.closed_neighborhood(s));
        for (Vertex v : t.witness) {
            cert.alpha_witness.push_back(r.original[static_cast<std::size_t>(core.original[static_cast<std::size_t>(v)])]);
        }
        cert.alpha_witness.insert(cert.alpha_witness.end(), r.s_prime.begin(), r.s_prime.end());
        cert.declared_alpha = static_cast<int>(cert.alpha_witness.size());
        cert.canonicalize();
        if (Verdict v = verify_certificate(g, cert); !v) {
            throw std::logic_error("ecc-alpha produced an invalid certificate: " + v.diagnostic);
        }
        out.certificate = std::move(cert);
        return out;
    }
    return out;
}

}  // namespace

EccAlphaOutcome solve_ecc_alpha_traced(const Graph& g, int k, AeccEngine engine) {
    return run(g, k, engine, AlphaEngine::from_cover);
}

std::optional<Certificate> solve_ecc_alpha(const Graph& g, int k, AeccEngine engine) {
    return solve_ecc_alpha_traced(g, k, engine).certificate;
}

EccAlphaOutcome solve_ecc_alpha_class_traced(const Graph& g, int k, EccClass hint) {
    switch (hint) {
        case EccClass::general: return run(g, k, AeccEngine::automatic, AlphaEngine::from_cover);
        case EccClass::bounded_omega: return run(g, k, AeccEngine::bounded_omega, AlphaEngine::from_cover);
        case EccClass::degenerate: return run(g, k, AeccEngine::degenerate, AlphaEngine::from_cover);
        case EccClass::two_degenerate:
            if (degeneracy(g).degeneracy > 2) throw PreconditionError("two-degenerate class hint on a graph of degeneracy above 2");
            return run(g, k, AeccEngine::degenerate, AlphaEngine::two_degenerate);
        case EccClass::minor_free: return run(g, k, AeccEngine::minor_free, AlphaEngine::treewidth);
    }
    return run(g, k, AeccEngine::automatic, AlphaEngine::from_cover);
}

std::optional<Certificate> solve_ecc_alpha_class(const Graph& g, int k, EccClass hint) {
    return solve_ecc_alpha_class_traced(g, k, hint).certificate;
}

}  // namespace alphacover
