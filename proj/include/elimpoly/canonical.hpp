/*
 * canonical.hpp
 * -------------
 * Exact canonical form of a multigraph, used as the memoization key.
 *
 * The vertex set is partitioned by iterated refinement (loop count, then the
 * multiset of (neighbour cell, multiplicity) pairs, repeated until stable).
 * Non-singleton cells are split by individualising each member in turn and
 * refining again. Every leaf of this search tree is a vertex ordering; the
 * key is the lexicographically smallest adjacency encoding over all leaves.
 *
 * The search tree is built from isomorphism-invariant data only, so two
 * multigraphs get the same key iff they are isomorphic. No automorphism
 * pruning is done: cost grows with the number of leaves, which is fine for
 * the graph sizes the recursion is guarded to.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "elimpoly/multigraph.hpp"

namespace elimpoly {

struct CanonicalKey {
    std::vector<std::uint8_t> bytes;

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
    std::size_t operator()(const CanonicalKey& k) const noexcept {
        return std::hash<std::string_view>{}(
            std::string_view(reinterpret_cast<const char*>(k.bytes.data()), k.bytes.size()));
    }
};

namespace detail {

class Canonicalizer {
public:
    explicit Canonicalizer(const Multigraph& g) : n_(g.vertex_count()), adj_(std::size_t{n_} * n_, 0) {
        for (const Edge& e : g.edges()) {
            ++adj_[index(e.first, e.second)];
            if (!e.is_loop()) ++adj_[index(e.second, e.first)];
        }
    }

    std::vector<std::uint32_t> best_encoding() {
        if (n_ == 0) return {};
        Partition all(1);
        all[0].resize(n_);
        for (Vertex v = 0; v < n_; ++v) all[0][v] = v;
        search(refine(std::move(all)));
        return best_;
    }

private:
    using Partition = std::vector<std::vector<Vertex>>;

    [[nodiscard]] std::size_t index(Vertex u, Vertex v) const { return std::size_t{u} * n_ + v; }

    Partition refine(Partition p) const {
        std::vector<std::uint32_t> cell_of(n_);
        while (true) {
            for (std::uint32_t k = 0; k < p.size(); ++k)
                for (Vertex v : p[k]) cell_of[v] = k;

            Partition next;
            next.reserve(n_);
            for (const auto& cell : p) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<std::pair<std::vector<std::uint32_t>, Vertex>> keyed;
                keyed.reserve(cell.size());
                for (Vertex v : cell) keyed.emplace_back(signature(v, cell_of), v);
                std::sort(keyed.begin(), keyed.end());
                for (std::size_t i = 0; i < keyed.size(); ++i) {
                    if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
                    next.back().push_back(keyed[i].second);
                }
            }
            if (next.size() == p.size()) return next;
            p = std::move(next);
        }
    }

    std::vector<std::uint32_t> signature(Vertex v, const std::vector<std::uint32_t>& cell_of) const {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> nbrs;
        for (Vertex w = 0; w < n_; ++w)
            if (w != v && adj_[index(v, w)] != 0) nbrs.emplace_back(cell_of[w], adj_[index(v, w)]);
        std::sort(nbrs.begin(), nbrs.end());
        std::vector<std::uint32_t> sig;
        sig.reserve(1 + 2 * nbrs.size());
        sig.push_back(adj_[index(v, v)]);
        for (auto [c, m] : nbrs) {
            sig.push_back(c);
            sig.push_back(m);
        }
        return sig;
    }

    void search(const Partition& p) {
        auto target = std::find_if(p.begin(), p.end(), [](const auto& cell) { return cell.size() > 1; });
        if (target == p.end()) {
            consider_leaf(p);
            return;
        }
        const auto k = static_cast<std::size_t>(target - p.begin());
        for (Vertex v : p[k]) {
            Partition child;
            child.reserve(p.size() + 1);
            child.insert(child.end(), p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
            child.push_back({v});
            std::vector<Vertex> rest;
            for (Vertex w : p[k])
                if (w != v) rest.push_back(w);
            child.push_back(std::move(rest));
            child.insert(child.end(), p.begin() + static_cast<std::ptrdiff_t>(k) + 1, p.end());
            search(refine(std::move(child)));
        }
    }

    void consider_leaf(const Partition& p) {
        std::vector<Vertex> order;
        order.reserve(n_);
        for (const auto& cell : p) order.push_back(cell.front());
        std::vector<std::uint32_t> enc;
        enc.reserve(std::size_t{n_} * (n_ + 1) / 2);
        for (Vertex i = 0; i < n_; ++i)
            for (Vertex j = i; j < n_; ++j) enc.push_back(adj_[index(order[i], order[j])]);
        if (best_.empty() || enc < best_) best_ = std::move(enc);
    }

    Vertex n_;
    std::vector<std::uint32_t> adj_;
    std::vector<std::uint32_t> best_;
};

inline void put_varint(std::vector<std::uint8_t>& out, std::uint32_t v) {
    while (v >= 0x80) {
        out.push_back(static_cast<std::uint8_t>(v | 0x80));
        v >>= 7;
    }
    out.push_back(static_cast<std::uint8_t>(v));
}

}  // namespace detail

/// Isomorphism-invariant encoding: vertex count, then the upper triangle
/// (diagonal = loop counts) of the minimal adjacency matrix, as varints.
inline CanonicalKey canonical_key(const Multigraph& g) {
    CanonicalKey key;
    detail::put_varint(key.bytes, g.vertex_count());
    for (std::uint32_t entry : detail::Canonicalizer(g).best_encoding()) detail::put_varint(key.bytes, entry);
    return key;
}

}  // namespace elimpoly
