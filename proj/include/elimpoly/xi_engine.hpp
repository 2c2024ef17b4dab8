/*
 * xi_engine.hpp
 * -------------
 * Exact computation of the edge elimination polynomial xi(G; x, y, z) by its
 * defining recursion
 *
 *   xi(empty) = 1,  xi(K_1) = x,
 *   xi(G)     = xi(G - e) + y * xi(G / e) + z * xi(G extract e),
 *   xi(G + H) = xi(G) * xi(H)   (disjoint union).
 *
 * Components are split before an edge is chosen, isolated vertices
 * contribute x directly, and connected subproblems are memoized by their
 * canonical key.
 */
#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "elimpoly/canonical.hpp"
#include "elimpoly/multigraph.hpp"
#include "elimpoly/poly.hpp"

namespace elimpoly {

class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class EdgeSelection {
    MinDegree,  // edge at a minimum-degree vertex, smallest labels first
    FirstEdge,
    LastEdge,
    Random,
};

/// Memo table from canonical key to xi of the corresponding connected graph.
/// Safe for concurrent lookup and insert; racing inserts store equal values.
class XiMemo {
public:
    std::optional<Poly> find(const CanonicalKey& key) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end()) return std::nullopt;
        return it->second;
    }

    void insert(const CanonicalKey& key, const Poly& value) {
        std::unique_lock lock(mutex_);
        table_.insert_or_assign(key, value);
    }

    [[nodiscard]] std::size_t size() const {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

    void clear() {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<CanonicalKey, Poly, CanonicalKeyHash> table_;
};

struct XiOptions {
    Vertex max_vertices = 16;
    bool memoize = true;
    EdgeSelection selection = EdgeSelection::MinDegree;
    std::uint64_t seed = 0;  // only used by EdgeSelection::Random
    /// When set (and memoize is true), used instead of a per-call table.
    std::shared_ptr<XiMemo> shared_cache;
};

struct XiStats {
    std::uint64_t recursion_nodes = 0;  // three-term expansions performed
    std::uint64_t cache_hits = 0;
    std::size_t peak_cache_size = 0;
};

struct XiResult {
    Poly value;
    XiStats stats;
};

namespace detail {

class XiComputation {
public:
    explicit XiComputation(const XiOptions& opts)
        : opts_(opts), rng_(opts.seed), memo_(opts.shared_cache ? opts.shared_cache : std::make_shared<XiMemo>()) {}

    Poly of_graph(const Multigraph& g) {
        Poly result(1);
        for (const Multigraph& comp : connected_components(g)) result *= of_connected(comp);
        return result;
    }

    [[nodiscard]] const XiStats& stats() const { return stats_; }

private:
    Poly of_connected(const Multigraph& g) {
        if (g.edge_count() == 0) return Poly::x();  // connected and edgeless: one vertex

        std::optional<CanonicalKey> key;
        if (opts_.memoize) {
            key = canonical_key(g);
            if (auto hit = memo_->find(*key)) {
                ++stats_.cache_hits;
                return *hit;
            }
        }

        ++stats_.recursion_nodes;
        const EdgeRef e = choose_edge(g);
        Poly value = of_graph(delete_edge(g, e));
        value += Poly::y() * of_graph(contract_edge(g, e));
        value += Poly::z() * of_graph(extract_edge(g, e));

        if (key) {
            memo_->insert(*key, value);
            stats_.peak_cache_size = std::max(stats_.peak_cache_size, memo_->size());
        }
        return value;
    }

    EdgeRef choose_edge(const Multigraph& g) {
        const auto& edges = g.edges();
        switch (opts_.selection) {
        case EdgeSelection::FirstEdge: return {edges.front().first, edges.front().second, 0};
        case EdgeSelection::LastEdge: return {edges.back().first, edges.back().second, 0};
        case EdgeSelection::Random: {
            std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
            const Edge& e = edges[pick(rng_)];
            return {e.first, e.second, 0};
        }
        case EdgeSelection::MinDegree: break;
        }
        const auto deg = g.degrees();
        Vertex best = 0;
        for (Vertex v = 1; v < g.vertex_count(); ++v)
            if (deg[v] < deg[best]) best = v;
        // Edges are sorted, so the first one touching `best` has the
        // smallest other endpoint.
        for (const Edge& e : edges)
            if (e.touches(best)) return {e.first, e.second, 0};
        throw std::logic_error("choose_edge: connected graph without incident edge");
    }

    const XiOptions& opts_;
    std::mt19937_64 rng_;
    std::shared_ptr<XiMemo> memo_;
    XiStats stats_;
};

}  // namespace detail

inline XiResult xi_with_stats(const Multigraph& g, const XiOptions& opts = {}) {
    if (g.vertex_count() > opts.max_vertices)
        throw resource_limit_error("graph has " + std::to_string(g.vertex_count()) + " vertices; limit is " +
                                   std::to_string(opts.max_vertices));
    detail::XiComputation run(opts);
    Poly value = run.of_graph(g);
    return {std::move(value), run.stats()};
}

inline Poly xi(const Multigraph& g, const XiOptions& opts = {}) { return xi_with_stats(g, opts).value; }

}  // namespace elimpoly
