#ifndef HARMPOLY_ENUMERATE_HPP
#define HARMPOLY_ENUMERATE_HPP

// Exhaustive generation of small graphs: every labelled graph on n vertices
// (one per subset of vertex pairs), or one representative per isomorphism
// class.

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"
#include "graph6.hpp"

namespace harmpoly {

/// Largest n enumerated without an explicit opt-in, and the absolute cap.
inline constexpr std::size_t enumeration_default_limit = 7;
inline constexpr std::size_t enumeration_opt_in_limit = 8;

class EnumerationLimitError : public std::length_error {
  public:
    using std::length_error::length_error;
};

struct EnumerationOptions {
    bool connected_only = false;
    /// One canonical representative per isomorphism class.
    bool deduplicate = false;
    /// Permit n = enumeration_opt_in_limit.
    bool allow_large = false;
};

inline std::size_t pair_count(std::size_t n) { return n * (n > 0 ? n - 1 : 0) / 2; }

inline void check_enumeration_limit(std::size_t n, bool allow_large) {
    const std::size_t cap = allow_large ? enumeration_opt_in_limit : enumeration_default_limit;
    if (n <= cap)
        return;
    std::string count = n < 12 ? std::to_string(std::uint64_t{1} << pair_count(n))
                               : "2^" + std::to_string(pair_count(n));
    std::string msg = "refusing to enumerate " + count + " labelled graphs on " + std::to_string(n) +
                      " vertices (limit " + std::to_string(cap);
    if (!allow_large && n <= enumeration_opt_in_limit)
        msg += "; n = " + std::to_string(enumeration_opt_in_limit) + " needs the explicit opt-in";
    throw EnumerationLimitError(msg + ")");
}

/// Bit p of mask is vertex pair p in graph6 column order (0,1), (0,2), (1,2), (0,3), ...
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
    std::vector<Edge> edges;
    std::size_t p = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++p)
            if (mask >> p & 1)
                edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

/// Calls f(mask, graph) for every labelled graph on n vertices with
/// mask % stride == offset, in increasing mask order.
template <class F>
void for_each_labeled_graph(std::size_t n, F&& f, std::uint64_t stride = 1, std::uint64_t offset = 0) {
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t mask = offset; mask < total; mask += stride)
        f(mask, graph_from_mask(n, mask));
}

/**
 * Isomorphism class representatives on exactly n vertices, in canonical
 * form, sorted by graph6 string. Classes on n vertices are grown from those
 * on n-1 by adding a vertex with every possible neighbourhood.
 */
inline std::vector<Graph> graph_classes(std::size_t n) {
    std::vector<Graph> level{Graph()};
    for (std::size_t k = 1; k <= n; ++k) {
        std::set<std::string> seen;
        std::vector<std::pair<std::string, Graph>> next;
        for (const Graph& base : level) {
            auto edges = base.edges();
            const auto fresh = static_cast<Vertex>(k - 1);
            for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (k - 1)); ++nb) {
                auto e = edges;
                for (Vertex v = 0; v + 1 < k; ++v)
                    if (nb >> v & 1)
                        e.emplace_back(v, fresh);
                Graph c = canonical_form(Graph::from_edges(k, e));
                std::string key = write_graph6(c);
                if (seen.insert(key).second)
                    next.emplace_back(std::move(key), std::move(c));
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        level.clear();
        for (auto& [key, g] : next)
            level.push_back(std::move(g));
    }
    return level;
}

/// All graphs on n vertices (labelled, or one per class when deduplicating).
inline std::vector<Graph> enumerate_graphs(std::size_t n, const EnumerationOptions& opt = {}) {
    check_enumeration_limit(n, opt.allow_large);
    std::vector<Graph> out;
    if (opt.deduplicate) {
        for (auto& g : graph_classes(n))
            if (!opt.connected_only || is_connected(g))
                out.push_back(std::move(g));
        return out;
    }
    for_each_labeled_graph(n, [&](std::uint64_t, Graph g) {
        if (!opt.connected_only || is_connected(g))
            out.push_back(std::move(g));
    });
    return out;
}

}  // namespace harmpoly

#endif
