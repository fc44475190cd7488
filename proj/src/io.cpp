#include "alphacover/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "alphacover/errors.hpp"

namespace alphacover {

namespace {

struct Line {
    int number;
    std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        pos = end + 1;
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            std::size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
            if (j > i) line.tokens.push_back(raw.substr(i, j - i));
            i = j;
        }
        if (line.tokens.empty() || line.tokens[0].front() == '#') continue;
        lines.push_back(std::move(line));
    }
    return lines;
}

long long to_int(const Line& line, std::size_t index) {
    if (index >= line.tokens.size()) throw ParseError(line.number, "missing integer field");
    std::string_view tok = line.tokens[index];
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line.number, "expected an integer, got '" + std::string(tok) + "'");
    }
    return value;
}

void expect_arity(const Line& line, std::size_t count) {
    if (line.tokens.size() != count) {
        throw ParseError(line.number, "expected " + std::to_string(count - 1) + " field(s) after '" +
                                          std::string(line.tokens[0]) + "'");
    }
}

Edge to_edge(const Line& line, long long n) {
    expect_arity(line, 3);
    long long u = to_int(line, 1);
    long long v = to_int(line, 2);
    if (u < 0 || v < 0 || u >= n || v >= n) {
        throw ParseError(line.number, "vertex id out of range [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw ParseError(line.number, "self-loop on vertex " + std::to_string(u));
    return Edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
}

// Shared by graph and instance parsing; `allow_extras` admits the a/k directives.
InstanceDocument parse_document(std::string_view text, bool allow_extras) {
    std::vector<Line> lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, "empty document: expected 'p <n> <m>'");
    const Line& header = lines.front();
    if (header.tokens[0] != "p") throw ParseError(header.number, "expected 'p <n> <m>' header");
    expect_arity(header, 3);
    long long n = to_int(header, 1);
    long long m = to_int(header, 2);
    if (n < 0 || m < 0) throw ParseError(header.number, "negative n or m");
    if (n > 10'000'000) throw ParseError(header.number, "n too large");

    std::set<Edge> edges;
    std::set<Edge> annotated;
    InstanceDocument doc;
    int last_line = header.number;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        last_line = line.number;
        std::string_view kind = line.tokens[0];
        if (kind == "e") {
            if (!annotated.empty() || doc.k) throw ParseError(line.number, "'e' line after 'a' or 'k' lines");
            Edge e = to_edge(line, n);
            if (!edges.insert(e).second) {
                throw ParseError(line.number,
                                 "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
            }
        } else if (allow_extras && kind == "a") {
            if (doc.k) throw ParseError(line.number, "'a' line after 'k' line");
            Edge e = to_edge(line, n);
            if (!edges.contains(e)) {
                throw ParseError(line.number, "annotated pair " + std::to_string(e.u) + " " +
                                                  std::to_string(e.v) + " is not an edge");
            }
            if (!annotated.insert(e).second) throw ParseError(line.number, "duplicate annotated edge");
        } else if (allow_extras && kind == "k") {
            if (doc.k) throw ParseError(line.number, "duplicate 'k' line");
            expect_arity(line, 2);
            long long k = to_int(line, 1);
            if (k < 0 || k > 1'000'000'000) throw ParseError(line.number, "k out of range");
            doc.k = static_cast<int>(k);
        } else if (kind == "p") {
            throw ParseError(line.number, "duplicate 'p' header");
        } else {
            throw ParseError(line.number, "unknown line type '" + std::string(kind) + "'");
        }
    }
    if (static_cast<long long>(edges.size()) != m) {
        throw ParseError(last_line, "header declares " + std::to_string(m) + " edges but " +
                                        std::to_string(edges.size()) + " were given");
    }
    EdgeSet list(edges.begin(), edges.end());
    doc.g = Graph(static_cast<int>(n), list);
    doc.b.assign(annotated.begin(), annotated.end());
    return doc;
}

void append_set(std::string& out, const VertexSet& s) {
    for (Vertex v : s) out += " " + std::to_string(v);
}

VertexSet read_set(const Line& line) {
    VertexSet s;
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        long long v = to_int(line, i);
        if (v < 0 || v > 1'000'000'000) throw ParseError(line.number, "vertex id out of range");
        s.push_back(static_cast<Vertex>(v));
    }
    return s;
}

}  // namespace

void validate(const AnnotatedInstance& inst) {
    if (inst.k < 0) throw PreconditionError("k must be nonnegative");
    for (std::size_t i = 0; i < inst.b.size(); ++i) {
        const Edge& e = inst.b[i];
        if (e.u < 0 || e.v >= inst.g.n() || !inst.g.adjacent(e.u, e.v)) {
            throw PreconditionError("annotated pair (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    ") is not an edge of the graph");
        }
        if (i > 0 && !(inst.b[i - 1] < e)) throw PreconditionError("annotated edges must be sorted and distinct");
    }
}

Graph parse_graph(std::string_view text) { return parse_document(text, false).g; }

std::string serialize_graph(const Graph& g) {
    std::string out = "p " + std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
    for (const Edge& e : g.edges()) out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

InstanceDocument parse_instance(std::string_view text) { return parse_document(text, true); }

std::string serialize_instance(const AnnotatedInstance& inst) {
    std::string out = serialize_graph(inst.g);
    for (const Edge& e : inst.b) out += "a " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    out += "k " + std::to_string(inst.k) + "\n";
    return out;
}

Certificate parse_certificate(std::string_view text) {
    std::vector<Line> lines = tokenize(text);
    std::size_t i = 0;
    auto next = [&](std::string_view key) -> const Line& {
        if (i >= lines.size()) throw ParseError(lines.empty() ? 1 : lines.back().number, "missing '" + std::string(key) + "' line");
        const Line& line = lines[i++];
        if (line.tokens[0] != key) {
            throw ParseError(line.number, "expected '" + std::string(key) + "', got '" + std::string(line.tokens[0]) + "'");
        }
        return line;
    };
    const Line& header = next("alphacover-certificate");
    expect_arity(header, 2);
    if (to_int(header, 1) != 1) throw ParseError(header.number, "unsupported certificate version");

    Certificate cert;
    const Line& kind = next("kind");
    expect_arity(kind, 2);
    if (kind.tokens[1] == "cover") {
        cert.kind = CertificateKind::cover;
    } else if (kind.tokens[1] == "partition") {
        cert.kind = CertificateKind::partition;
    } else {
        throw ParseError(kind.number, "kind must be 'cover' or 'partition'");
    }
    const Line& alpha = next("alpha");
    expect_arity(alpha, 2);
    long long a = to_int(alpha, 1);
    const Line& k = next("k");
    expect_arity(k, 2);
    long long kk = to_int(k, 1);
    if (a < 0 || kk < 0 || a > 1'000'000'000 || kk > 1'000'000'000) throw ParseError(k.number, "alpha or k out of range");
    cert.declared_alpha = static_cast<int>(a);
    cert.k = static_cast<int>(kk);
    cert.alpha_witness = read_set(next("witness"));
    const Line& count_line = next("cliques");
    expect_arity(count_line, 2);
    long long count = to_int(count_line, 1);
    if (count < 0) throw ParseError(count_line.number, "negative clique count");
    for (long long c = 0; c < count; ++c) cert.cliques.push_back(read_set(next("c")));
    next("end");
    if (i != lines.size()) throw ParseError(lines[i].number, "trailing content after 'end'");
    return cert;
}

std::string serialize_certificate(const Certificate& cert) {
    std::string out = "alphacover-certificate 1\n";
    out += "kind " + to_string(cert.kind) + "\n";
    out += "alpha " + std::to_string(cert.declared_alpha) + "\n";
    out += "k " + std::to_string(cert.k) + "\n";
    out += "witness";
    append_set(out, cert.alpha_witness);
    out += "\ncliques " + std::to_string(cert.cliques.size()) + "\n";
    for (const VertexSet& c : cert.cliques) {
        out += "c";
        append_set(out, c);
        out += "\n";
    }
    out += "end\n";
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << contents;
}

}  // namespace alphacover
