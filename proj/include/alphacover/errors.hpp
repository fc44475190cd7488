#pragma once

#include <stdexcept>
#include <string>

namespace alphacover {

/// Malformed input document (graph, instance, or certificate text).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The input graph has an isolated vertex where the problem forbids one.
class IsolatedVertexError : public PreconditionError {
public:
    explicit IsolatedVertexError(int vertex)
        : PreconditionError("isolated vertex " + std::to_string(vertex) +
                            " (the alpha lower bound needs a graph without isolated vertices)"),
          vertex_(vertex) {}

    int vertex() const noexcept { return vertex_; }

private:
    int vertex_;
};

/// An exhaustive routine was called beyond its size guard.
class SizeGuardError : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace alphacover
