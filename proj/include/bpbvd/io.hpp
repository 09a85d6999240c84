#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "bpbvd/graph.hpp"

namespace bpbvd {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Edge-list text: header `n m`, then m lines `u v` with 0 <= u < v < n.
/// Blank lines and `#` comments are ignored.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_string(const std::string& text);

/// Serializes a graph whose ids are exactly 0..n-1. Throws otherwise.
std::string to_edge_list(const Graph& g);

/// Serializes any graph, renumbering ids densely in ascending order. Each emitted
/// vertex is annotated with a `# id <new> <original>` comment line.
std::string to_edge_list_renumbered(const Graph& g);

}  // namespace bpbvd
