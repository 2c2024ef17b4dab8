/*
 * specializations.hpp
 * -------------------
 * Three graph polynomials obtained from xi by substitution, each paired with
 * an exhaustive combinatorial oracle:
 *
 *   M(G; x, y)    = xi(G; x, 0, y)          bivariate matching (loop-free G)
 *                   x marks uncovered vertices, y marks matching edges
 *   P(G; x, y)    = xi(G; x, -1, x - y)     bivariate chromatic
 *                   x colours in total, y of them proper
 *   C(G; x, y, z) = xi(G; x, y, xyz - xy)   covered components
 *
 * The oracles enumerate edge subsets or colour maps and are exponential;
 * they are intended for graphs with a handful of vertices and edges.
 */
#pragma once

#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "elimpoly/multigraph.hpp"
#include "elimpoly/poly.hpp"
#include "elimpoly/xi_engine.hpp"

namespace elimpoly {

class loops_not_allowed : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require_loop_free(const Multigraph& g, const char* what) {
    if (g.has_loops()) throw loops_not_allowed(std::string(what) + ": loops not allowed");
}

inline void require_enumerable(const Multigraph& g, const char* what) {
    if (g.edge_count() > 24) throw resource_limit_error(std::string(what) + ": too many edges to enumerate");
}

/// Number of connected components of (V, A) and how many of them contain
/// at least one edge of A.
struct ComponentCount {
    std::uint32_t components = 0;
    std::uint32_t covered = 0;
};

inline ComponentCount count_components(Vertex n, const std::vector<Edge>& edges, std::uint64_t subset) {
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    std::vector<bool> has_edge(n, false);
    auto find = [&](Vertex v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!(subset >> i & 1u)) continue;
        Vertex a = find(edges[i].first), b = find(edges[i].second);
        parent[a] = b;
        has_edge[edges[i].first] = true;
    }
    ComponentCount out;
    std::vector<bool> root_covered(n, false);
    for (Vertex v = 0; v < n; ++v)
        if (has_edge[v]) root_covered[find(v)] = true;
    for (Vertex v = 0; v < n; ++v) {
        if (find(v) != v) continue;
        ++out.components;
        if (root_covered[v]) ++out.covered;
    }
    return out;
}

/// Calls visit(colour) for every map V -> {0..k-1}.
template <class Visit>
void for_each_colouring(Vertex n, std::uint64_t k, Visit&& visit) {
    std::vector<std::uint64_t> colour(n, 0);
    if (n > 0 && k == 0) return;
    while (true) {
        visit(colour);
        Vertex i = 0;
        while (i < n && ++colour[i] == k) colour[i++] = 0;
        if (i == n) return;
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Substitutions

inline Poly matching_poly(const Multigraph& g, const XiOptions& opts = {}) {
    detail::require_loop_free(g, "matching polynomial");
    return substitute(xi(g, opts), Substitution{Poly::x(), Poly(0), Poly::y()});
}

inline Poly bivariate_chromatic(const Multigraph& g, const XiOptions& opts = {}) {
    return substitute(xi(g, opts), Substitution{Poly::x(), Poly(-1), Poly::x() - Poly::y()});
}

inline Poly covered_components(const Multigraph& g, const XiOptions& opts = {}) {
    const Poly x = Poly::x(), y = Poly::y(), z = Poly::z();
    return substitute(xi(g, opts), Substitution{x, y, x * y * z - x * y});
}

// ---------------------------------------------------------------------------
// Oracles

/// Sum over matchings M (parallel copies distinct) of x^{uncovered} y^{|M|}.
inline Poly oracle_matching(const Multigraph& g) {
    detail::require_loop_free(g, "oracle_matching");
    detail::require_enumerable(g, "oracle_matching");
    const auto& edges = g.edges();
    Poly out;
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << edges.size()); ++subset) {
        std::vector<bool> covered(g.vertex_count(), false);
        std::uint32_t size = 0;
        bool matching = true;
        for (std::size_t i = 0; i < edges.size() && matching; ++i) {
            if (!(subset >> i & 1u)) continue;
            const Edge& e = edges[i];
            if (covered[e.first] || covered[e.second]) matching = false;
            covered[e.first] = covered[e.second] = true;
            ++size;
        }
        if (matching) out.add_term(Monomial(g.vertex_count() - 2 * size, size, 0), Integer(1));
    }
    return out;
}

/// Maps V -> {1..x_val} with no edge monochromatic in a colour from {1..y_val}.
inline Integer oracle_chromatic2(const Multigraph& g, std::uint64_t x_val, std::uint64_t y_val) {
    if (y_val > x_val) throw std::invalid_argument("oracle_chromatic2: requires y <= x");
    detail::require_loop_free(g, "oracle_chromatic2");
    Integer count = 0;
    detail::for_each_colouring(g.vertex_count(), x_val, [&](const std::vector<std::uint64_t>& colour) {
        for (const Edge& e : g.edges())
            if (colour[e.first] == colour[e.second] && colour[e.first] < y_val) return;
        ++count;
    });
    return count;
}

/// Proper k-colourings.
inline Integer oracle_chromatic(const Multigraph& g, std::uint64_t k) {
    detail::require_loop_free(g, "oracle_chromatic");
    return oracle_chromatic2(g, k, k);
}

/// Sum over edge subsets A of x^{k(V,A)} y^{|A|} z^{components of (V,A) with an edge}.
inline Poly oracle_covered(const Multigraph& g) {
    detail::require_enumerable(g, "oracle_covered");
    const auto& edges = g.edges();
    Poly out;
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << edges.size()); ++subset) {
        const auto cc = detail::count_components(g.vertex_count(), edges, subset);
        const auto size = static_cast<std::uint32_t>(std::popcount(subset));
        out.add_term(Monomial(cc.components, size, cc.covered), Integer(1));
    }
    return out;
}

}  // namespace elimpoly
