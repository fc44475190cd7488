#include "alphacover/certificate.hpp"

#include <algorithm>
#include <sstream>

namespace alphacover {

namespace {

std::string show(const VertexSet& s) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
    out << '}';
    return out.str();
}

std::string show(const Edge& e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

Verdict check_members(const Graph& g, const CliqueFamily& family) {
    for (std::size_t i = 0; i < family.size(); ++i) {
        const VertexSet& c = family[i];
        if (c.empty()) return Verdict::fail("clique #" + std::to_string(i) + " is empty");
        for (std::size_t a = 0; a < c.size(); ++a) {
            if (c[a] < 0 || c[a] >= g.n()) {
                return Verdict::fail("clique #" + std::to_string(i) + " has out-of-range vertex " +
                                     std::to_string(c[a]));
            }
            if (a > 0 && c[a - 1] >= c[a]) {
                return Verdict::fail("clique #" + std::to_string(i) + " is not strictly ascending");
            }
        }
        for (std::size_t a = 0; a < c.size(); ++a) {
            for (std::size_t b = a + 1; b < c.size(); ++b) {
                if (!g.adjacent(c[a], c[b])) {
                    return Verdict::fail("clique #" + std::to_string(i) + " " + show(c) +
                                         " is not a clique: missing edge " + show(Edge(c[a], c[b])));
                }
            }
        }
    }
    return Verdict::pass();
}

Verdict check_covers(const CliqueFamily& family, const EdgeSet& edges) {
    for (const Edge& e : edges) {
        bool covered = std::any_of(family.begin(), family.end(), [&](const VertexSet& c) {
            return contains(c, e.u) && contains(c, e.v);
        });
        if (!covered) return Verdict::fail("edge " + show(e) + " is not covered");
    }
    return Verdict::pass();
}

}  // namespace

void Certificate::canonicalize() {
    for (auto& c : cliques) std::sort(c.begin(), c.end());
    std::sort(cliques.begin(), cliques.end());
    std::sort(alpha_witness.begin(), alpha_witness.end());
}

Verdict verify_cover(const Graph& g, const CliqueFamily& family) {
    if (Verdict v = check_members(g, family); !v) return v;
    return check_covers(family, g.edges());
}

Verdict verify_partition(const Graph& g, const CliqueFamily& family) {
    if (Verdict v = verify_cover(g, family); !v) return v;
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            VertexSet common = set_intersection(family[i], family[j]);
            if (common.size() >= 2) {
                return Verdict::fail("cliques #" + std::to_string(i) + " and #" + std::to_string(j) +
                                     " share edge " + show(Edge(common[0], common[1])));
            }
        }
    }
    return Verdict::pass();
}

Verdict verify_annotated_cover(const Graph& g, const EdgeSet& b, const CliqueFamily& family) {
    if (Verdict v = check_members(g, family); !v) return v;
    for (const Edge& e : b) {
        if (e.u < 0 || e.v >= g.n() || !g.adjacent(e.u, e.v)) {
            return Verdict::fail("annotated edge " + show(e) + " is not an edge of the graph");
        }
    }
    return check_covers(family, b);
}

Verdict verify_certificate(const Graph& g, const Certificate& cert) {
    if (cert.declared_alpha < 0 || cert.k < 0) return Verdict::fail("negative alpha or k");
    if (static_cast<int>(cert.alpha_witness.size()) != cert.declared_alpha) {
        return Verdict::fail("witness has " + std::to_string(cert.alpha_witness.size()) +
                             " vertices but alpha is declared as " + std::to_string(cert.declared_alpha));
    }
    for (std::size_t i = 0; i < cert.alpha_witness.size(); ++i) {
        Vertex v = cert.alpha_witness[i];
        if (v < 0 || v >= g.n()) return Verdict::fail("witness vertex " + std::to_string(v) + " out of range");
        if (i > 0 && cert.alpha_witness[i - 1] >= v) return Verdict::fail("witness is not strictly ascending");
    }
    for (std::size_t i = 0; i < cert.alpha_witness.size(); ++i) {
        for (std::size_t j = i + 1; j < cert.alpha_witness.size(); ++j) {
            if (g.adjacent(cert.alpha_witness[i], cert.alpha_witness[j])) {
                return Verdict::fail("witness is not independent: edge " +
                                     show(Edge(cert.alpha_witness[i], cert.alpha_witness[j])));
            }
        }
    }
    if (static_cast<long long>(cert.cliques.size()) > static_cast<long long>(cert.declared_alpha) + cert.k) {
        return Verdict::fail(std::to_string(cert.cliques.size()) + " cliques exceed alpha + k = " +
                             std::to_string(cert.declared_alpha + cert.k));
    }
    return cert.kind == CertificateKind::cover ? verify_cover(g, cert.cliques)
                                               : verify_partition(g, cert.cliques);
}

std::string to_string(CertificateKind kind) { return kind == CertificateKind::cover ? "cover" : "partition"; }

}  // namespace alphacover
