/*
 * multigraph.hpp
 * --------------
 * Finite undirected multigraphs (loops and parallel edges allowed) together
 * with the three edge eliminations used by the edge elimination polynomial:
 *
 *   delete_edge    drop one copy of e
 *   contract_edge  drop e and merge its endpoints
 *   extract_edge   drop e, both endpoints and every incident edge
 *
 * Graphs are immutable values. Every operation relabels the surviving
 * vertices to 0..n-1 preserving their relative order.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace elimpoly {

using Vertex = std::uint32_t;

class invalid_edge_ref : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// One copy, selected by multiplicity_index, among the parallel edges {u,v}.
struct EdgeRef {
    Vertex u = 0;
    Vertex v = 0;
    std::uint32_t multiplicity_index = 0;
};

/// Unordered endpoint pair stored with first <= second.
struct Edge {
    Vertex first = 0;
    Vertex second = 0;

    Edge() = default;
    Edge(Vertex u, Vertex v) : first(std::min(u, v)), second(std::max(u, v)) {}

    [[nodiscard]] bool is_loop() const { return first == second; }
    [[nodiscard]] bool touches(Vertex w) const { return first == w || second == w; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Multigraph {
public:
    Multigraph() = default;

    /// Throws std::invalid_argument if an endpoint is out of range.
    Multigraph(Vertex vertex_count, std::vector<Edge> edges)
        : vertex_count_(vertex_count), edges_(std::move(edges)) {
        for (const Edge& e : edges_)
            if (e.second >= vertex_count_)
                throw std::invalid_argument("edge endpoint " + std::to_string(e.second) +
                                            " out of range for " + std::to_string(vertex_count_) + " vertices");
        std::sort(edges_.begin(), edges_.end());
    }

    Multigraph(Vertex vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges)
        : Multigraph(vertex_count, to_edges(edges)) {}

    [[nodiscard]] Vertex vertex_count() const { return vertex_count_; }
    [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
    /// Sorted edge multiset; parallel copies appear consecutively.
    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
    [[nodiscard]] bool empty() const { return vertex_count_ == 0; }

    [[nodiscard]] std::size_t multiplicity(Vertex u, Vertex v) const {
        auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), Edge(u, v));
        return static_cast<std::size_t>(hi - lo);
    }

    [[nodiscard]] bool has_loops() const {
        return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
    }

    /// Loops contribute 2 to the degree of their vertex.
    [[nodiscard]] std::vector<std::size_t> degrees() const {
        std::vector<std::size_t> deg(vertex_count_, 0);
        for (const Edge& e : edges_) {
            ++deg[e.first];
            ++deg[e.second];
        }
        return deg;
    }

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    static std::vector<Edge> to_edges(std::initializer_list<std::pair<Vertex, Vertex>> list) {
        std::vector<Edge> out;
        out.reserve(list.size());
        for (auto [u, v] : list) out.emplace_back(u, v);
        return out;
    }

    Vertex vertex_count_ = 0;
    std::vector<Edge> edges_;
};

// ---------------------------------------------------------------------------
// Families

inline Multigraph path_graph(Vertex n) {
    std::vector<Edge> edges;
    for (Vertex i = 1; i < n; ++i) edges.emplace_back(i - 1, i);
    return Multigraph(n, std::move(edges));
}

/// The connected 2-regular graph on n vertices: a loop for n = 1, a double
/// edge for n = 2, the simple cycle for n >= 3, and the empty graph for n = 0.
inline Multigraph cycle_graph(Vertex n) {
    std::vector<Edge> edges;
    if (n == 1) {
        edges.emplace_back(0, 0);
    } else if (n >= 2) {
        for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    }
    return Multigraph(n, std::move(edges));
}

inline Multigraph edgeless_graph(Vertex n) { return Multigraph(n, std::vector<Edge>{}); }

inline Multigraph disjoint_union(const Multigraph& g, const Multigraph& h) {
    std::vector<Edge> edges = g.edges();
    const Vertex shift = g.vertex_count();
    for (const Edge& e : h.edges()) edges.emplace_back(e.first + shift, e.second + shift);
    return Multigraph(g.vertex_count() + h.vertex_count(), std::move(edges));
}

/// Applies a vertex permutation: vertex v becomes perm[v].
inline Multigraph relabel(const Multigraph& g, const std::vector<Vertex>& perm) {
    if (perm.size() != g.vertex_count()) throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) edges.emplace_back(perm[e.first], perm[e.second]);
    return Multigraph(g.vertex_count(), std::move(edges));
}

// ---------------------------------------------------------------------------
// Edge eliminations

namespace detail {

inline std::vector<Edge>::const_iterator locate(const Multigraph& g, const EdgeRef& ref) {
    if (ref.u >= g.vertex_count() || ref.v >= g.vertex_count())
        throw invalid_edge_ref("edge {" + std::to_string(ref.u) + "," + std::to_string(ref.v) +
                               "} has an endpoint outside the graph");
    auto [lo, hi] = std::equal_range(g.edges().begin(), g.edges().end(), Edge(ref.u, ref.v));
    if (static_cast<std::size_t>(hi - lo) <= ref.multiplicity_index)
        throw invalid_edge_ref("edge {" + std::to_string(ref.u) + "," + std::to_string(ref.v) + "} copy " +
                               std::to_string(ref.multiplicity_index) + " does not exist");
    return lo + ref.multiplicity_index;
}

/// Keeps edges whose endpoints survive `keep`, relabelling survivors in order.
inline Multigraph induced(const Multigraph& g, const std::vector<bool>& keep, const std::vector<Edge>& edges) {
    std::vector<Vertex> new_label(g.vertex_count(), 0);
    Vertex next = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (keep[v]) new_label[v] = next++;
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const Edge& e : edges)
        if (keep[e.first] && keep[e.second]) out.emplace_back(new_label[e.first], new_label[e.second]);
    return Multigraph(next, std::move(out));
}

}  // namespace detail

inline Multigraph delete_edge(const Multigraph& g, const EdgeRef& e) {
    auto it = detail::locate(g, e);
    std::vector<Edge> edges;
    edges.reserve(g.edge_count() - 1);
    edges.insert(edges.end(), g.edges().begin(), it);
    edges.insert(edges.end(), it + 1, g.edges().end());
    return Multigraph(g.vertex_count(), std::move(edges));
}

/// Remaining copies parallel to e turn into loops on the merged vertex.
/// Contracting a loop only removes the loop.
inline Multigraph contract_edge(const Multigraph& g, const EdgeRef& e) {
    auto it = detail::locate(g, e);
    const Edge target = *it;
    if (target.is_loop()) return delete_edge(g, e);

    // Merge `second` into `first`, then close the gap left by `second`.
    const Vertex keep = target.first;
    const Vertex gone = target.second;
    auto remap = [&](Vertex w) -> Vertex {
        if (w == gone) w = keep;
        return w > gone ? w - 1 : w;
    };
    std::vector<Edge> edges;
    edges.reserve(g.edge_count() - 1);
    for (auto jt = g.edges().begin(); jt != g.edges().end(); ++jt) {
        if (jt == it) continue;
        edges.emplace_back(remap(jt->first), remap(jt->second));
    }
    return Multigraph(g.vertex_count() - 1, std::move(edges));
}

inline Multigraph extract_edge(const Multigraph& g, const EdgeRef& e) {
    auto it = detail::locate(g, e);
    std::vector<bool> keep(g.vertex_count(), true);
    keep[it->first] = false;
    keep[it->second] = false;
    return detail::induced(g, keep, g.edges());
}

/// Components ordered by their smallest original vertex label.
inline std::vector<Multigraph> connected_components(const Multigraph& g) {
    const Vertex n = g.vertex_count();
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const Edge& e : g.edges()) {
        Vertex a = find(e.first), b = find(e.second);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

    // Roots are the minimal labels of their trees, so scanning v upward
    // meets components in order of their smallest vertex.
    std::vector<Vertex> comp_of(n);
    std::vector<std::vector<Vertex>> members;
    std::vector<std::int64_t> index_of_root(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        Vertex r = find(v);
        if (index_of_root[r] < 0) {
            index_of_root[r] = static_cast<std::int64_t>(members.size());
            members.emplace_back();
        }
        comp_of[v] = static_cast<Vertex>(index_of_root[r]);
        std::vector<Vertex>& m = members[comp_of[v]];
        m.push_back(v);
    }

    std::vector<Vertex> local(n);
    for (const auto& m : members)
        for (Vertex i = 0; i < m.size(); ++i) local[m[i]] = i;

    std::vector<std::vector<Edge>> comp_edges(members.size());
    for (const Edge& e : g.edges()) comp_edges[comp_of[e.first]].emplace_back(local[e.first], local[e.second]);

    std::vector<Multigraph> out;
    out.reserve(members.size());
    for (std::size_t c = 0; c < members.size(); ++c)
        out.emplace_back(static_cast<Vertex>(members[c].size()), std::move(comp_edges[c]));
    return out;
}

inline bool is_connected(const Multigraph& g) { return g.vertex_count() <= 1 || connected_components(g).size() == 1; }

}  // namespace elimpoly
