#ifndef HARMPOLY_CANONICAL_HPP
#define HARMPOLY_CANONICAL_HPP

// Small-scale isomorphism: a backtracking matcher and a canonical form by
// permutation minimisation. Both are exponential in the worst case and meant
// for graphs with at most a handful of vertices.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace harmpoly {

inline constexpr std::size_t isomorphism_vertex_limit = 9;

class SizeLimitError : public std::length_error {
  public:
    using std::length_error::length_error;
};

namespace detail {

/// Colour refinement until stable. Colours are ranks of label-free keys,
/// so isomorphic graphs get corresponding colourings.
inline std::vector<std::size_t> equitable_colors(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> color(n);
    for (Vertex v = 0; v < n; ++v)
        color[v] = g.degree(v);
    std::size_t classes = 0;
    while (true) {
        std::vector<std::vector<std::size_t>> key(n);
        for (Vertex v = 0; v < n; ++v) {
            key[v].push_back(color[v]);
            for (Vertex w : g.neighbors(v))
                key[v].push_back(color[w]);
            std::sort(key[v].begin() + 1, key[v].end());
        }
        auto sorted = key;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (Vertex v = 0; v < n; ++v)
            color[v] = static_cast<std::size_t>(
                std::lower_bound(sorted.begin(), sorted.end(), key[v]) - sorted.begin());
        if (sorted.size() == classes)
            break;
        classes = sorted.size();
    }
    return color;
}

class CanonicalSearch {
  public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
        color_ = equitable_colors(g);
        slot_color_ = color_;
        std::sort(slot_color_.begin(), slot_color_.end());
        order_.resize(n_);
        used_.assign(n_, false);
        cur_.assign(n_ * (n_ > 0 ? n_ - 1 : 0) / 2, 0);
    }

    std::vector<Vertex> run() {
        search(0, false);
        return best_order_;
    }

  private:
    bool search(std::size_t p, bool prefix_less) {
        if (p == n_) {
            if (!have_best_ || prefix_less) {
                best_ = cur_;
                best_order_ = order_;
                have_best_ = true;
                return true;
            }
            return false;
        }
        bool changed = false;
        const std::size_t off = p * (p - (p > 0 ? 1 : 0)) / 2;
        for (Vertex v = 0; v < n_; ++v) {
            if (used_[v] || color_[v] != slot_color_[p])
                continue;
            for (std::size_t i = 0; i < p; ++i)
                cur_[off + i] = g_.adjacent(order_[i], v) ? 1 : 0;
            bool less = prefix_less;
            if (have_best_ && !less) {
                auto mis = std::mismatch(cur_.begin() + static_cast<std::ptrdiff_t>(off),
                                         cur_.begin() + static_cast<std::ptrdiff_t>(off + p),
                                         best_.begin() + static_cast<std::ptrdiff_t>(off));
                if (mis.first != cur_.begin() + static_cast<std::ptrdiff_t>(off + p)) {
                    if (*mis.first > *mis.second)
                        continue;
                    less = true;
                }
            }
            used_[v] = true;
            order_[p] = v;
            if (search(p + 1, less)) {
                changed = true;
                prefix_less = false;
            }
            used_[v] = false;
        }
        return changed;
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<std::size_t> color_, slot_color_;
    std::vector<Vertex> order_, best_order_;
    std::vector<bool> used_;
    std::vector<std::uint8_t> cur_, best_;
    bool have_best_ = false;
};

}  // namespace detail

/// Canonical relabelling: result[i] is the source vertex placed at position i.
inline std::vector<Vertex> canonical_order(const Graph& g) {
    return detail::CanonicalSearch(g).run();
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& order) {
    std::vector<Vertex> pos(g.order());
    for (std::size_t i = 0; i < order.size(); ++i)
        pos[order[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    edges.reserve(g.size());
    g.for_each_edge([&](Vertex u, Vertex v) { edges.emplace_back(pos[u], pos[v]); });
    return Graph::from_edges(g.order(), edges);
}

/// Isomorphic graphs, and only those, map to equal canonical forms.
inline Graph canonical_form(const Graph& g) { return relabel(g, canonical_order(g)); }

/// Backtracking isomorphism test with degree pruning. Refuses n above
/// isomorphism_vertex_limit instead of guessing.
inline bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() > isomorphism_vertex_limit || b.order() > isomorphism_vertex_limit)
        throw SizeLimitError("is_isomorphic supports at most " +
                             std::to_string(isomorphism_vertex_limit) + " vertices");
    const std::size_t n = a.order();
    if (n != b.order() || a.size() != b.size())
        return false;
    auto da = degree_summary(a).degrees, db = degree_summary(b).degrees;
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb)
        return false;

    constexpr Vertex unmapped = static_cast<Vertex>(-1);
    std::vector<Vertex> map(n, unmapped);
    std::vector<bool> taken(n, false);
    auto extend = [&](auto&& self, Vertex u) -> bool {
        if (u == n)
            return true;
        for (Vertex cand = 0; cand < n; ++cand) {
            if (taken[cand] || db[cand] != da[u])
                continue;
            bool ok = true;
            for (Vertex w = 0; w < u && ok; ++w)
                ok = a.adjacent(u, w) == b.adjacent(cand, map[w]);
            if (!ok)
                continue;
            map[u] = cand;
            taken[cand] = true;
            if (self(self, u + 1))
                return true;
            taken[cand] = false;
        }
        map[u] = unmapped;
        return false;
    };
    return extend(extend, 0);
}

}  // namespace harmpoly

#endif
