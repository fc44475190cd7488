// alphacover command-line driver.
//
// Exit codes: 0 YES (or success), 1 NO, 2 error or invalid certificate.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "alphacover/aecc.hpp"
#include "alphacover/alpha.hpp"
#include "alphacover/ecc_alpha.hpp"
#include "alphacover/ecp_alpha.hpp"
#include "alphacover/errors.hpp"
#include "alphacover/generators.hpp"
#include "alphacover/io.hpp"
#include "alphacover/oracle.hpp"
#include "alphacover/tree_decomposition.hpp"

using namespace alphacover;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

std::string join(const VertexSet& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
    return out;
}

void print_family(const CliqueFamily& family) {
    for (const VertexSet& c : family) std::cout << "c " << join(c) << '\n';
}

// A YES that fails its own check is a solver bug; never print it.
[[noreturn]] void internal_failure(const std::string& what, const Verdict& v) {
    std::cerr << "internal error: " << what << " produced an invalid answer: " << v.diagnostic << '\n';
    std::abort();
}

struct SolveOptions {
    std::string problem;
    std::string instance;
    std::optional<int> k;
    std::string engine = "auto";
    std::string graph_class;
    std::string cert;
    int threads = 1;
};

int need_k(const SolveOptions& o, const InstanceDocument& doc) {
    if (o.k) return *o.k;
    if (doc.k) return *doc.k;
    throw PreconditionError("problem '" + o.problem + "' needs -k or a 'k' line in the instance");
}

int report_certificate(const Graph& g, const std::optional<Certificate>& cert, const SolveOptions& o) {
    if (!cert) {
        std::cout << "NO\n";
        return kNo;
    }
    if (Verdict v = verify_certificate(g, *cert); !v) internal_failure(o.problem, v);
    std::cout << "YES\n";
    std::cout << "alpha " << cert->declared_alpha << '\n';
    std::cout << "cliques " << cert->cliques.size() << '\n';
    if (!o.cert.empty()) write_file(o.cert, serialize_certificate(*cert));
    return kYes;
}

int solve(const SolveOptions& o) {
    InstanceDocument doc = parse_instance(read_file(o.instance));
    const Graph& g = doc.g;

    if (o.problem == "ecc-alpha") {
        int k = need_k(o, doc);
        std::optional<Certificate> cert;
        if (!o.graph_class.empty()) {
            if (o.engine != "auto") throw PreconditionError("--engine and --class are mutually exclusive");
            cert = solve_ecc_alpha_class(g, k, parse_ecc_class(o.graph_class));
        } else {
            cert = solve_ecc_alpha(g, k, parse_aecc_engine(o.engine));
        }
        return report_certificate(g, cert, o);
    }
    if (o.problem == "ecp-alpha") {
        int k = need_k(o, doc);
        return report_certificate(g, solve_ecp_alpha(g, k, {o.threads}), o);
    }
    if (!o.cert.empty()) throw PreconditionError("--cert is only available for ecc-alpha and ecp-alpha");
    if (o.problem == "aecc") {
        AnnotatedInstance inst{g, doc.b, need_k(o, doc)};
        validate(inst);
        AeccAnswer a = solve_aecc(inst, parse_aecc_engine(o.engine));
        if (!a) {
            std::cout << "NO\n";
            return kNo;
        }
        Verdict v = verify_annotated_cover(g, inst.b, *a);
        if (v && static_cast<int>(a->size()) > inst.k) v = Verdict::fail("family exceeds k");
        if (!v) internal_failure("aecc", v);
        std::cout << "YES\ncliques " << a->size() << '\n';
        print_family(*a);
        return kYes;
    }
    if (o.problem == "ecc") {
        // ecc(G) <= k is AECC with every edge annotated.
        AeccEngine engine = parse_aecc_engine(o.engine);
        auto decide = [&](int k) { return solve_aecc({g, g.edges(), k}, engine); };
        AeccAnswer a;
        if (o.k || doc.k) {
            a = decide(need_k(o, doc));
        } else {
            for (int k = 0; !a; ++k) a = decide(k);
        }
        if (!a) {
            std::cout << "NO\n";
            return kNo;
        }
        if (Verdict v = verify_cover(g, *a); !v) internal_failure("ecc", v);
        std::cout << (o.k || doc.k ? "YES\n" : "") << "ecc " << a->size() << '\n';
        print_family(*a);
        return kYes;
    }
    if (o.problem == "ecp") {
        const bool decision = o.k || doc.k;
        std::optional<CliqueFamily> p = ecp_exact(g, decision ? need_k(o, doc) : static_cast<int>(g.m()));
        if (!p) {
            std::cout << "NO\n";
            return kNo;
        }
        if (Verdict v = verify_partition(g, *p); !v) internal_failure("ecp", v);
        std::cout << (decision ? "YES\n" : "") << "ecp " << p->size() << '\n';
        print_family(*p);
        return kYes;
    }
    if (o.problem == "alpha") {
        AlphaResult r;
        if (o.engine == "auto" || o.engine == "treewidth") {
            r = alpha_treewidth_max(g, min_fill_decomposition(g));
        } else if (o.engine == "two-degenerate") {
            r = alpha_2degenerate_max(g);
        } else if (o.engine == "bruteforce") {
            r = alpha_bruteforce(g);
        } else {
            throw PreconditionError("unknown alpha engine '" + o.engine + "' (auto, treewidth, two-degenerate, bruteforce)");
        }
        if (!is_independent(g, r.witness)) internal_failure("alpha", Verdict::fail("witness is not independent"));
        std::cout << "alpha " << r.alpha << "\nwitness " << join(r.witness) << '\n';
        return kYes;
    }
    throw PreconditionError("unknown problem '" + o.problem + "'");
}

int verify(const std::string& instance, const std::string& certificate) {
    Graph g = parse_instance(read_file(instance)).g;
    Certificate cert = parse_certificate(read_file(certificate));
    if (Verdict v = verify_certificate(g, cert); !v) {
        std::cout << "invalid: " << v.diagnostic << '\n';
        return kError;
    }
    std::cout << "valid\n";
    return kYes;
}

struct GenerateOptions {
    std::string gadget;
    std::string source;
    std::string out;
    std::optional<int> k;
    std::uint64_t seed = 1;
    int n = 10;
    int m = 15;
    int d = 2;
};

std::string with_provenance(const std::string& provenance, const std::string& body) {
    return "# " + provenance + "\n" + body;
}

int generate(const GenerateOptions& o) {
    auto source = [&] {
        if (o.source.empty()) throw PreconditionError("gadget '" + o.gadget + "' needs a source instance");
        return parse_instance(read_file(o.source));
    };
    auto source_k = [&](const InstanceDocument& doc) {
        if (o.k) return *o.k;
        if (doc.k) return *doc.k;
        throw PreconditionError("gadget '" + o.gadget + "' needs -k or a 'k' line in the source");
    };
    std::string text;
    if (o.gadget == "vcc-to-aecc") {
        InstanceDocument doc = source();
        GadgetOutput g = gadget_vcc_to_aecc(doc.g, source_k(doc));
        text = with_provenance(g.provenance, serialize_instance(g.annotated()));
    } else if (o.gadget == "aecc-to-eccalpha") {
        InstanceDocument doc = source();
        AnnotatedInstance inst{doc.g, doc.b, source_k(doc)};
        validate(inst);
        GadgetOutput g = gadget_aecc_to_eccalpha(inst);
        text = with_provenance(g.provenance, serialize_instance({g.g, {}, g.k}));
    } else if (o.gadget == "biclique-to-eccalpha") {
        InstanceDocument doc = source();
        GadgetOutput g = gadget_biclique_to_eccalpha(doc.g, source_k(doc));
        text = with_provenance(g.provenance, serialize_instance({g.g, {}, g.k}));
    } else if (o.gadget == "pendant") {
        InstanceDocument doc = source();
        text = with_provenance("pendant expansion of a " + std::to_string(doc.g.n()) + "-vertex graph",
                               serialize_graph(pendant_expand(doc.g)));
    } else if (o.gadget == "random") {
        std::ostringstream p;
        p << "random graph n=" << o.n << " m=" << o.m << " seed=" << o.seed;
        text = with_provenance(p.str(), serialize_graph(random_graph(o.n, o.m, o.seed)));
    } else if (o.gadget == "random-degenerate") {
        std::ostringstream p;
        p << "random degenerate graph n=" << o.n << " d=" << o.d << " seed=" << o.seed;
        text = with_provenance(p.str(), serialize_graph(random_degenerate(o.n, o.d, o.seed)));
    } else {
        throw PreconditionError("unknown gadget '" + o.gadget + "'");
    }
    if (o.out.empty() || o.out == "-") {
        std::cout << text;
    } else {
        write_file(o.out, text);
    }
    return kYes;
}

int oracle(const std::string& problem, const std::string& instance) {
    InstanceDocument doc = parse_instance(read_file(instance));
    if (problem == "ecc") {
        CoverResult r = ecc_bruteforce(doc.g);
        std::cout << "ecc " << r.size << '\n';
        print_family(r.family);
    } else if (problem == "ecp") {
        EcpResult r = ecp_bruteforce(doc.g);
        std::cout << "ecp " << r.size << '\n';
        print_family(r.partition);
    } else if (problem == "alpha") {
        AlphaResult r = alpha_bruteforce(doc.g);
        std::cout << "alpha " << r.alpha << "\nwitness " << join(r.witness) << '\n';
    } else if (problem == "aecc") {
        std::cout << "aecc " << aecc_number_bruteforce(doc.g, doc.b) << '\n';
    } else {
        throw PreconditionError("unknown oracle problem '" + problem + "' (ecc, ecp, alpha, aecc)");
    }
    return kYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Edge clique cover and partition above the independence number"};
    app.require_subcommand(1);

    SolveOptions so;
    int k_value = 0;
    auto* solve_cmd = app.add_subcommand("solve", "Decide an instance and print YES/NO");
    solve_cmd->add_option("problem", so.problem, "ecc-alpha, ecp-alpha, aecc, ecp, ecc or alpha")->required();
    solve_cmd->add_option("instance", so.instance, "Instance file")->required()->check(CLI::ExistingFile);
    auto* k_opt = solve_cmd->add_option("-k", k_value, "Parameter k (overrides a 'k' line in the file)");
    solve_cmd->add_option("--engine", so.engine, "AECC engine, or alpha engine for 'alpha'");
    solve_cmd->add_option("--class", so.graph_class, "Graph class for ecc-alpha");
    solve_cmd->add_option("--cert", so.cert, "Write the certificate here");
    solve_cmd->add_option("--threads", so.threads, "Worker threads for ecp-alpha")->check(CLI::PositiveNumber);

    std::string verify_instance, verify_cert;
    auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against an instance");
    verify_cmd->add_option("instance", verify_instance)->required()->check(CLI::ExistingFile);
    verify_cmd->add_option("certificate", verify_cert)->required()->check(CLI::ExistingFile);

    GenerateOptions go;
    int gen_k = 0;
    auto* gen_cmd = app.add_subcommand("generate", "Build a gadget or random instance");
    gen_cmd->add_option("gadget", go.gadget,
                        "vcc-to-aecc, aecc-to-eccalpha, biclique-to-eccalpha, pendant, random, random-degenerate")
        ->required();
    gen_cmd->add_option("source", go.source, "Source instance file")->check(CLI::ExistingFile);
    auto* gen_k_opt = gen_cmd->add_option("-k", gen_k, "Source parameter");
    gen_cmd->add_option("--seed", go.seed, "Random seed");
    gen_cmd->add_option("--n", go.n, "Vertices for random gadgets");
    gen_cmd->add_option("--m", go.m, "Edges for 'random'");
    gen_cmd->add_option("--d", go.d, "Degeneracy for 'random-degenerate'");
    gen_cmd->add_option("-o,--out", go.out, "Output file ('-' for stdout)");

    std::string oracle_problem, oracle_instance;
    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive reference solvers (small inputs only)");
    oracle_cmd->add_option("problem", oracle_problem, "ecc, ecp, alpha or aecc")->required();
    oracle_cmd->add_option("instance", oracle_instance)->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kError;
    }

    try {
        if (*solve_cmd) {
            if (*k_opt) so.k = k_value;
            return solve(so);
        }
        if (*verify_cmd) return verify(verify_instance, verify_cert);
        if (*gen_cmd) {
            if (*gen_k_opt) go.k = gen_k;
            return generate(go);
        }
        if (*oracle_cmd) return oracle(oracle_problem, oracle_instance);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
    } catch (const IsolatedVertexError& e) {
        std::cerr << "isolated vertex: " << e.what() << '\n';
    } catch (const SizeGuardError& e) {
        std::cerr << "size guard: " << e.what() << '\n';
    } catch (const PreconditionError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return kError;
}
