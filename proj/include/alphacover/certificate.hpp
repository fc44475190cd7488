#pragma once

#include <string>

#include "alphacover/graph.hpp"

namespace alphacover {

enum class CertificateKind { cover, partition };

/// YES-witness for the above-alpha problems: a clique family of size at most
/// declared_alpha + k together with an independent set proving declared_alpha.
struct Certificate {
    CertificateKind kind = CertificateKind::cover;
    CliqueFamily cliques;
    VertexSet alpha_witness;
    int declared_alpha = 0;
    int k = 0;

    /// Sorts every clique, the family and the witness into canonical order.
    void canonicalize();

    bool operator==(const Certificate&) const = default;
};

/// Outcome of a verification; `diagnostic` names the first violation found.
struct Verdict {
    bool ok = true;
    std::string diagnostic;

    explicit operator bool() const noexcept { return ok; }
    static Verdict pass() { return {}; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

Verdict verify_cover(const Graph& g, const CliqueFamily& family);
Verdict verify_partition(const Graph& g, const CliqueFamily& family);

/// Checks that every edge in `b` lies inside some member and every member is a clique.
Verdict verify_annotated_cover(const Graph& g, const EdgeSet& b, const CliqueFamily& family);

Verdict verify_certificate(const Graph& g, const Certificate& cert);

std::string to_string(CertificateKind kind);

}  // namespace alphacover
