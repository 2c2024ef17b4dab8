// Plain-text multigraph format:
//
//   # comment lines start with '#'
//   n m          vertex and edge counts
//   u v          m lines, 0-based labels; `u u` is a loop,
//                repeated lines are parallel edges
//
// Blank lines are ignored.
#pragma once

#include <cstdint>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "elimpoly/multigraph.hpp"

namespace elimpoly {

class graph_parse_error : public std::runtime_error {
public:
    graph_parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline bool is_blank_or_comment(const std::string& line) {
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

/// Splits a line into exactly two nonnegative integers.
inline std::pair<std::uint64_t, std::uint64_t> read_pair(const std::string& line, std::size_t lineno) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.size() != 2)
        throw graph_parse_error(lineno, "expected two integers, found " + std::to_string(tokens.size()) + " tokens");
    auto to_uint = [&](const std::string& tok) -> std::uint64_t {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw graph_parse_error(lineno, "not a nonnegative integer: '" + tok + "'");
        if (tok.size() > 9) throw graph_parse_error(lineno, "value too large: '" + tok + "'");
        return std::stoull(tok);
    };
    return {to_uint(tokens[0]), to_uint(tokens[1])};
}

}  // namespace detail

inline Multigraph read_graph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    std::uint64_t n = 0, m = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::is_blank_or_comment(line)) continue;
        auto [a, b] = detail::read_pair(line, lineno);
        if (!have_header) {
            n = a;
            m = b;
            have_header = true;
            continue;
        }
        if (edges.size() == m) throw graph_parse_error(lineno, "more edge lines than the declared " + std::to_string(m));
        if (a >= n || b >= n)
            throw graph_parse_error(lineno, "vertex label out of range (graph has " + std::to_string(n) + " vertices)");
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (!have_header) throw graph_parse_error(lineno == 0 ? 1 : lineno, "missing 'n m' header");
    if (edges.size() != m)
        throw graph_parse_error(lineno, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Multigraph(static_cast<Vertex>(n), std::move(edges));
}

inline Multigraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

inline std::string format_graph(const Multigraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.first << ' ' << e.second << '\n';
    return out.str();
}

}  // namespace elimpoly
