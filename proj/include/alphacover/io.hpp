#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "alphacover/annotated.hpp"
#include "alphacover/certificate.hpp"
#include "alphacover/graph.hpp"

namespace alphacover {

/// Edge-list document:
///   p <n> <m>
///   e <u> <v>        (m lines, 0 <= u,v < n)
/// Lines starting with '#' and blank lines are ignored.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

/// An edge-list document optionally followed by `a <u> <v>` lines (annotated edges)
/// and a single `k <int>` line.
struct InstanceDocument {
    Graph g;
    EdgeSet b;
    std::optional<int> k;
};

InstanceDocument parse_instance(std::string_view text);
std::string serialize_instance(const AnnotatedInstance& inst);

/// Versioned text form:
///   alphacover-certificate 1
///   kind cover|partition
///   alpha <int>
///   k <int>
///   witness <v...>
///   cliques <count>
///   c <v...>          (count lines)
///   end
Certificate parse_certificate(std::string_view text);
std::string serialize_certificate(const Certificate& cert);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace alphacover
