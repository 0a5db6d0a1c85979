#ifndef HARMPOLY_GRAPH_HPP
#define HARMPOLY_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace harmpoly {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Rejected graph input: an endpoint out of range or a loop.
class GraphError : public std::invalid_argument {
  public:
    GraphError(const std::string& what, Edge offending)
        : std::invalid_argument(what), edge_(offending) {}
    Edge offending_edge() const noexcept { return edge_; }

  private:
    Edge edge_;
};

/**
 * Finite simple undirected graph on vertices 0..n-1.
 *
 * Stored as sorted adjacency rows in one flat array (CSR). Values are
 * immutable once built, so a Graph can be shared freely between threads.
 */
class Graph {
  public:
    Graph() : offsets_(1, 0) {}

    /// Builds from unordered pairs; repeated pairs collapse to one edge.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                            std::size_t* collapsed = nullptr) {
        std::vector<Edge> canon;
        canon.reserve(edges.size());
        for (auto [u, v] : edges) {
            if (u >= n || v >= n)
                throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                     ") has an endpoint outside 0.." +
                                     (n == 0 ? std::string("(empty)") : std::to_string(n - 1)),
                                 {u, v});
            if (u == v)
                throw GraphError("loop at vertex " + std::to_string(u), {u, v});
            canon.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(canon.begin(), canon.end());
        auto last = std::unique(canon.begin(), canon.end());
        if (collapsed)
            *collapsed = static_cast<std::size_t>(canon.end() - last);
        canon.erase(last, canon.end());

        Graph g;
        g.offsets_.assign(n + 1, 0);
        for (auto [u, v] : canon) {
            ++g.offsets_[u + 1];
            ++g.offsets_[v + 1];
        }
        for (std::size_t i = 0; i < n; ++i)
            g.offsets_[i + 1] += g.offsets_[i];
        g.adj_.resize(2 * canon.size());
        std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
        // canon is sorted by (u, v), so every row ends up sorted.
        for (auto [u, v] : canon)
            g.adj_[fill[v]++] = u;
        for (auto [u, v] : canon)
            g.adj_[fill[u]++] = v;
        for (std::size_t i = 0; i < n; ++i)
            std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
                      g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]));
        g.m_ = canon.size();
        return g;
    }

    static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    std::size_t order() const noexcept { return offsets_.size() - 1; }
    std::size_t size() const noexcept { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    bool adjacent(Vertex u, Vertex v) const {
        auto row = neighbors(u);
        return std::binary_search(row.begin(), row.end(), v);
    }

    /// Calls f(u, v) once per edge with u < v, in lexicographic order.
    template <class F>
    void for_each_edge(F&& f) const {
        for (Vertex u = 0; u < order(); ++u)
            for (Vertex v : neighbors(u))
                if (u < v)
                    f(u, v);
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for_each_edge([&](Vertex u, Vertex v) { out.emplace_back(u, v); });
        return out;
    }

    bool has_isolated_vertex() const {
        for (Vertex v = 0; v < order(); ++v)
            if (degree(v) == 0)
                return true;
        return false;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.offsets_ == b.offsets_ && a.adj_ == b.adj_;
    }

  private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adj_;
    std::size_t m_ = 0;
};

struct BuildResult {
    Graph graph;
    std::size_t collapsed_duplicates = 0;

    bool had_duplicates() const noexcept { return collapsed_duplicates != 0; }
};

/// Validating constructor; duplicates are reported rather than rejected.
inline BuildResult build_graph(std::size_t n, std::span<const Edge> edges) {
    BuildResult r;
    r.graph = Graph::from_edges(n, edges, &r.collapsed_duplicates);
    return r;
}

inline BuildResult build_graph(std::size_t n, std::initializer_list<Edge> edges) {
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

// ---------------------------------------------------------------------------
// Degrees

struct DegreeSummary {
    std::vector<std::size_t> degrees;
    /// Each occurring degree once, ascending (0 included when isolated vertices exist).
    std::vector<std::size_t> distinct;
    /// Over vertices of degree >= 1; empty when the graph has no edges.
    std::optional<std::size_t> max_degree;
    std::optional<std::size_t> min_degree;
};

inline DegreeSummary degree_summary(const Graph& g) {
    DegreeSummary s;
    s.degrees.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        std::size_t d = g.degree(v);
        s.degrees[v] = d;
        if (d == 0)
            continue;
        s.max_degree = std::max(s.max_degree.value_or(d), d);
        s.min_degree = std::min(s.min_degree.value_or(d), d);
    }
    s.distinct = s.degrees;
    std::sort(s.distinct.begin(), s.distinct.end());
    s.distinct.erase(std::unique(s.distinct.begin(), s.distinct.end()), s.distinct.end());
    return s;
}

// ---------------------------------------------------------------------------
// Components

/// Component id per vertex, numbered by smallest member vertex.
inline std::vector<std::size_t> component_labels(const Graph& g, std::size_t* count = nullptr) {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(g.order(), unset);
    std::vector<Vertex> stack;
    std::size_t next = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (label[s] != unset)
            continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u))
                if (label[w] == unset) {
                    label[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    if (count)
        *count = next;
    return label;
}

inline std::size_t component_count(const Graph& g) {
    std::size_t c = 0;
    component_labels(g, &c);
    return c;
}

inline bool is_connected(const Graph& g) { return component_count(g) <= 1; }

struct Component {
    Graph graph;
    /// Local vertex i is vertex to_parent[i] of the source graph (ascending).
    std::vector<Vertex> to_parent;
};

inline std::vector<Component> connected_components(const Graph& g) {
    std::size_t count = 0;
    auto label = component_labels(g, &count);
    std::vector<Component> out(count);
    std::vector<Vertex> local(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        local[v] = static_cast<Vertex>(out[label[v]].to_parent.size());
        out[label[v]].to_parent.push_back(v);
    }
    std::vector<std::vector<Edge>> edges(count);
    g.for_each_edge([&](Vertex u, Vertex v) { edges[label[u]].emplace_back(local[u], local[v]); });
    for (std::size_t c = 0; c < count; ++c)
        out[c].graph = Graph::from_edges(out[c].to_parent.size(), edges[c]);
    return out;
}

/// Subgraph induced by `keep` (ascending, distinct); vertex i maps to keep[i].
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    constexpr Vertex absent = static_cast<Vertex>(-1);
    std::vector<Vertex> local(g.order(), absent);
    for (std::size_t i = 0; i < keep.size(); ++i)
        local[keep[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (Vertex u : keep)
        for (Vertex v : g.neighbors(u))
            if (u < v && local[v] != absent)
                edges.emplace_back(local[u], local[v]);
    return Graph::from_edges(keep.size(), edges);
}

/// Drops degree-0 vertices, renumbering the rest in order.
inline Graph without_isolated_vertices(const Graph& g) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0)
            keep.push_back(v);
    return induced_subgraph(g, keep);
}

/// Disjoint union; vertices of b are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    auto edges = a.edges();
    auto shift = static_cast<Vertex>(a.order());
    b.for_each_edge([&](Vertex u, Vertex v) { edges.emplace_back(u + shift, v + shift); });
    return Graph::from_edges(a.order() + b.order(), edges);
}

// ---------------------------------------------------------------------------
// Line graph, distances

/// Vertex i of the result stands for g.edges()[i].
inline Graph line_graph(const Graph& g) {
    auto edges = g.edges();
    std::vector<std::vector<Vertex>> incident(g.order());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        incident[edges[i].first].push_back(static_cast<Vertex>(i));
        incident[edges[i].second].push_back(static_cast<Vertex>(i));
    }
    std::vector<Edge> out;
    for (const auto& inc : incident)
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b)
                out.emplace_back(inc[a], inc[b]);
    return Graph::from_edges(edges.size(), out);
}

inline std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
    constexpr std::size_t inf = static_cast<std::size_t>(-1);
    std::vector<std::size_t> dist(g.order(), inf);
    std::queue<Vertex> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u))
            if (dist[w] == inf) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

/// Length of a shortest cycle; std::nullopt when g is a forest.
inline std::optional<std::size_t> girth(const Graph& g) {
    constexpr std::size_t inf = static_cast<std::size_t>(-1);
    std::optional<std::size_t> best;
    std::vector<std::size_t> dist(g.order());
    std::vector<Vertex> parent(g.order());
    for (Vertex s = 0; s < g.order(); ++s) {
        std::fill(dist.begin(), dist.end(), inf);
        std::queue<Vertex> q;
        dist[s] = 0;
        parent[s] = s;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            if (best && 2 * dist[u] >= *best)
                break;
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] == inf) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (parent[u] != w) {
                    std::size_t len = dist[u] + dist[w] + 1;
                    if (!best || len < *best)
                        best = len;
                }
            }
        }
    }
    return best;
}

/// Largest shortest-path distance; std::nullopt when g is disconnected.
inline std::optional<std::size_t> diameter(const Graph& g) {
    constexpr std::size_t inf = static_cast<std::size_t>(-1);
    std::size_t best = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        for (std::size_t d : bfs_distances(g, s)) {
            if (d == inf)
                return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Local structure

inline bool is_triangle_free(const Graph& g) {
    bool found = false;
    g.for_each_edge([&](Vertex u, Vertex v) {
        if (found)
            return;
        auto a = g.neighbors(u), b = g.neighbors(v);
        auto i = a.begin(), j = b.begin();
        while (i != a.end() && j != b.end()) {
            if (*i == *j) {
                found = true;
                return;
            }
            if (*i < *j)
                ++i;
            else
                ++j;
        }
    });
    return !found;
}

/// Vertices adjacent to every other vertex.
inline std::vector<Vertex> dominant_vertices(const Graph& g) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) + 1 == g.order())
            out.push_back(v);
    return out;
}

/// Number of edges whose endpoint degrees are exactly {1, 2}.
inline std::size_t pendant_path_count(const Graph& g) {
    std::size_t count = 0;
    g.for_each_edge([&](Vertex u, Vertex v) {
        auto du = g.degree(u), dv = g.degree(v);
        if (std::min(du, dv) == 1 && std::max(du, dv) == 2)
            ++count;
    });
    return count;
}

/// Every edge joins an odd-degree vertex to an even-degree vertex.
inline bool has_alternated_degree(const Graph& g) {
    bool ok = true;
    g.for_each_edge([&](Vertex u, Vertex v) {
        if ((g.degree(u) % 2) == (g.degree(v) % 2))
            ok = false;
    });
    return ok;
}

/// Proper 2-colouring (0/1 per vertex) or std::nullopt if an odd cycle exists.
inline std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g) {
    constexpr std::uint8_t none = 2;
    std::vector<std::uint8_t> color(g.order(), none);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (color[s] != none)
            continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u)) {
                if (color[w] == none) {
                    color[w] = static_cast<std::uint8_t>(1 - color[u]);
                    stack.push_back(w);
                } else if (color[w] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

inline bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

// ---------------------------------------------------------------------------
// Regularity

struct ComponentClass {
    enum class Kind { Regular, Biregular, Neither };
    Kind kind = Kind::Neither;
    std::size_t max_degree = 0;
    std::size_t min_degree = 0;

    friend bool operator==(const ComponentClass&, const ComponentClass&) = default;
};

/// Classifies a connected graph. Biregular requires a 2-colouring whose
/// sides are each degree-homogeneous with distinct degrees.
inline ComponentClass classify_connected(const Graph& g) {
    ComponentClass c;
    if (g.order() == 0)
        return c;
    auto s = degree_summary(g);
    c.max_degree = s.distinct.back();
    c.min_degree = s.distinct.front();
    if (s.distinct.size() == 1) {
        c.kind = ComponentClass::Kind::Regular;
        return c;
    }
    if (s.distinct.size() != 2)
        return c;
    auto coloring = two_coloring(g);
    if (!coloring)
        return c;
    std::optional<std::size_t> side_degree[2];
    for (Vertex v = 0; v < g.order(); ++v) {
        auto& d = side_degree[(*coloring)[v]];
        if (d && *d != g.degree(v))
            return c;
        d = g.degree(v);
    }
    if (side_degree[0] != side_degree[1])
        c.kind = ComponentClass::Kind::Biregular;
    return c;
}

/// One classification per connected component, in component order.
inline std::vector<ComponentClass> regularity_class(const Graph& g) {
    std::vector<ComponentClass> out;
    for (const auto& comp : connected_components(g))
        out.push_back(classify_connected(comp.graph));
    return out;
}

/// Every component regular or biregular, with max+min degree equal across components.
inline bool is_coherent(const Graph& g) {
    std::optional<std::size_t> sum;
    for (const auto& c : regularity_class(g)) {
        if (c.kind == ComponentClass::Kind::Neither)
            return false;
        std::size_t s = c.max_degree + c.min_degree;
        if (sum && *sum != s)
            return false;
        sum = s;
    }
    return true;
}

inline bool is_regular(const Graph& g) { return degree_summary(g).distinct.size() <= 1; }

}  // namespace harmpoly

#endif
