#ifndef HARMPOLY_FAMILIES_HPP
#define HARMPOLY_FAMILIES_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "numeric.hpp"
#include "polynomial.hpp"

namespace harmpoly {

enum class Family { Complete, Cycle, Hypercube, CompleteBipartite, Path, Wheel, Star, TrTree, GrUnion };

/// A named family with its integer parameters, e.g. {CompleteBipartite, {2, 3}}.
struct FamilySpec {
    Family family;
    std::vector<std::size_t> params;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

class FamilyError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::Complete: return "complete";
        case Family::Cycle: return "cycle";
        case Family::Hypercube: return "hypercube";
        case Family::CompleteBipartite: return "kbip";
        case Family::Path: return "path";
        case Family::Wheel: return "wheel";
        case Family::Star: return "star";
        case Family::TrTree: return "trtree";
        case Family::GrUnion: return "grunion";
    }
    return "?";
}

inline std::string to_string(const FamilySpec& s) {
    std::string out = std::string(family_name(s.family)) + ":";
    for (std::size_t i = 0; i < s.params.size(); ++i)
        out += (i ? "," : "") + std::to_string(s.params[i]);
    return out;
}

namespace detail {

inline void require(bool ok, const FamilySpec& s, const char* constraint) {
    if (!ok)
        throw FamilyError(to_string(s) + ": requires " + constraint);
}

inline void validate(const FamilySpec& s) {
    const std::size_t want = s.family == Family::CompleteBipartite ? 2 : 1;
    if (s.params.size() != want)
        throw FamilyError(std::string(family_name(s.family)) + " takes " + std::to_string(want) +
                          " parameter(s)");
    const std::size_t n = s.params[0];
    switch (s.family) {
        case Family::Complete: require(n >= 1, s, "n >= 1"); break;
        case Family::Cycle: require(n >= 3, s, "n >= 3"); break;
        case Family::Hypercube: require(n >= 1 && n <= 20, s, "1 <= n <= 20"); break;
        case Family::CompleteBipartite: require(n >= 1 && s.params[1] >= 1, s, "n1, n2 >= 1"); break;
        case Family::Path: require(n >= 2, s, "n >= 2"); break;
        case Family::Wheel: require(n >= 4, s, "n >= 4"); break;
        case Family::Star: require(n >= 2, s, "n >= 2"); break;
        case Family::TrTree: require(n >= 3, s, "r >= 3"); break;
        case Family::GrUnion: require(n >= 1, s, "r >= 1"); break;
    }
}

inline Graph complete_bipartite(std::size_t n1, std::size_t n2) {
    std::vector<Edge> e;
    for (std::size_t a = 0; a < n1; ++a)
        for (std::size_t b = 0; b < n2; ++b)
            e.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(n1 + b));
    return Graph::from_edges(n1 + n2, e);
}

}  // namespace detail

/// "complete:5", "kbip:2,3", ... Throws FamilyError on bad syntax or range.
inline FamilySpec parse_family_spec(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw FamilyError("family spec '" + text + "' must look like name:params");
    const std::string name = text.substr(0, colon);
    FamilySpec s{};
    bool known = false;
    for (Family f : {Family::Complete, Family::Cycle, Family::Hypercube, Family::CompleteBipartite,
                     Family::Path, Family::Wheel, Family::Star, Family::TrTree, Family::GrUnion})
        if (name == family_name(f)) {
            s.family = f;
            known = true;
        }
    if (!known)
        throw FamilyError("unknown family '" + name + "'");
    std::string rest = text.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
        auto comma = rest.find(',', pos);
        std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw FamilyError("bad parameter '" + tok + "' in '" + text + "'");
        s.params.push_back(std::stoull(tok));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    detail::validate(s);
    return s;
}

/// Permutation a_1..a_r of 1..r alternating around the middle so that
/// consecutive sums are r + 1 or r + 2.
inline std::vector<std::size_t> t_r_degree_order(std::size_t r) {
    if (r < 3)
        throw FamilyError("trtree:" + std::to_string(r) + ": requires r >= 3");
    std::vector<std::size_t> a;
    if (r % 2 == 0) {
        for (std::size_t i = 0; i < r / 2; ++i) {
            a.push_back(r / 2 + 1 + i);
            a.push_back(r / 2 - i);
        }
    } else {
        const std::size_t c = (r + 1) / 2;
        a.push_back(c);
        for (std::size_t i = 1; i <= (r - 1) / 2; ++i) {
            a.push_back(c + i);
            a.push_back(c - i);
        }
    }
    std::vector<bool> seen(r + 1, false);
    for (std::size_t j = 0; j < r; ++j) {
        if (a[j] < 1 || a[j] > r || seen[a[j]])
            throw InvariantViolation("T_r degree order is not a permutation");
        seen[a[j]] = true;
        if (j + 1 < r && a[j] + a[j + 1] != r + 1 && a[j] + a[j + 1] != r + 2)
            throw InvariantViolation("T_r consecutive degree sum outside {r+1, r+2}");
    }
    return a;
}

inline constexpr std::size_t t_r_vertex_budget = 10'000'000;

/**
 * Layered tree with degree set {1..r}.
 *
 * The root (vertex 0) gets a_1 children. Every vertex at depth j-1, for
 * 2 <= j <= r-1, gets a_j - 1 children, so its degree is a_j. Depth r-1
 * holds the leaves (a_r = 1). Vertices are numbered breadth-first.
 */
inline Graph t_r_tree(std::size_t r) {
    const auto a = t_r_degree_order(r);
    std::size_t total = 1, layer = 1;
    for (std::size_t j = 1; j < r; ++j) {
        layer *= (j == 1 ? a[0] : a[j - 1] - 1);
        total += layer;
        if (total > t_r_vertex_budget)
            throw FamilyError("trtree:" + std::to_string(r) + " exceeds the vertex budget of " +
                              std::to_string(t_r_vertex_budget));
    }
    std::vector<Edge> edges;
    edges.reserve(total - 1);
    std::vector<Vertex> current{0}, next;
    Vertex fresh = 1;
    for (std::size_t depth = 1; depth < r; ++depth) {
        const std::size_t children = depth == 1 ? a[0] : a[depth - 1] - 1;
        next.clear();
        for (Vertex u : current)
            for (std::size_t c = 0; c < children; ++c) {
                edges.emplace_back(u, fresh);
                next.push_back(fresh++);
            }
        current.swap(next);
    }
    return Graph::from_edges(fresh, edges);
}

/// The complete bipartite pairs K_{i, r+1-i} making up G_r, smallest side first.
inline std::vector<std::pair<std::size_t, std::size_t>> g_r_parts(std::size_t r) {
    if (r < 1)
        throw FamilyError("grunion:0: requires r >= 1");
    std::vector<std::pair<std::size_t, std::size_t>> parts;
    for (std::size_t i = 1; 2 * i <= r + 1; ++i)
        parts.emplace_back(i, r + 1 - i);
    return parts;
}

/// Disjoint union K_{1,r} + K_{2,r-1} + ...; every edge has degree sum r + 1.
inline Graph g_r_union(std::size_t r) {
    Graph g;
    for (auto [a, b] : g_r_parts(r))
        g = disjoint_union(g, detail::complete_bipartite(a, b));
    return g;
}

/**
 * Deterministic labelling:
 *  - complete, cycle, path: 0..n-1 in order along the cycle/path
 *  - hypercube: bit strings 0..2^n-1, edges at Hamming distance 1
 *  - kbip: first side 0..n1-1, second side n1..n1+n2-1
 *  - wheel, star: hub 0, then rim / leaves 1..n-1
 */
inline Graph generate(const FamilySpec& s) {
    detail::validate(s);
    const std::size_t n = s.params[0];
    std::vector<Edge> e;
    auto V = [](std::size_t x) { return static_cast<Vertex>(x); };
    switch (s.family) {
        case Family::Complete:
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = u + 1; v < n; ++v)
                    e.emplace_back(V(u), V(v));
            return Graph::from_edges(n, e);
        case Family::Cycle:
            for (std::size_t u = 0; u < n; ++u)
                e.emplace_back(V(u), V((u + 1) % n));
            return Graph::from_edges(n, e);
        case Family::Hypercube: {
            const std::size_t count = std::size_t{1} << n;
            for (std::size_t u = 0; u < count; ++u)
                for (std::size_t b = 0; b < n; ++b)
                    if (!(u >> b & 1))
                        e.emplace_back(V(u), V(u | (std::size_t{1} << b)));
            return Graph::from_edges(count, e);
        }
        case Family::CompleteBipartite: return detail::complete_bipartite(n, s.params[1]);
        case Family::Path:
            for (std::size_t u = 0; u + 1 < n; ++u)
                e.emplace_back(V(u), V(u + 1));
            return Graph::from_edges(n, e);
        case Family::Wheel:
            for (std::size_t u = 1; u < n; ++u) {
                e.emplace_back(0, V(u));
                e.emplace_back(V(u), V(u + 1 < n ? u + 1 : 1));
            }
            return Graph::from_edges(n, e);
        case Family::Star:
            for (std::size_t u = 1; u < n; ++u)
                e.emplace_back(0, V(u));
            return Graph::from_edges(n, e);
        case Family::TrTree: return t_r_tree(n);
        case Family::GrUnion: return g_r_union(n);
    }
    throw FamilyError("unhandled family");
}

/// Published closed form of H(G,x) for a family. T_r has none: only its
/// number of terms and exponent support are known.
struct ClosedForm {
    std::optional<IntPolynomial> polynomial;
    std::optional<std::size_t> nonzero_count;
    std::vector<std::size_t> exponent_support;
    std::string formula;

    bool available() const { return polynomial.has_value(); }
};

inline ClosedForm closed_form_polynomial(const FamilySpec& s) {
    detail::validate(s);
    const std::size_t n = s.params[0];
    auto big = [](std::size_t x) { return BigInt(static_cast<unsigned long long>(x)); };
    auto mono = [&](const BigInt& c, std::size_t e) { return IntPolynomial::monomial(c, e); };
    ClosedForm cf;
    switch (s.family) {
        case Family::Complete:
            // n(n-1)/2 x^(2n-3); K_1 has no edges.
            cf.polynomial = n == 1 ? IntPolynomial{} : mono(big(n * (n - 1) / 2), 2 * n - 3);
            cf.formula = "n(n-1)/2 x^(2n-3)";
            break;
        case Family::Cycle:
            cf.polynomial = mono(big(n), 3);
            cf.formula = "n x^3";
            break;
        case Family::Hypercube:
            cf.polynomial = mono(big(n) << (n - 1), 2 * n - 1);
            cf.formula = "n 2^(n-1) x^(2n-1)";
            break;
        case Family::CompleteBipartite:
            cf.polynomial = mono(big(n * s.params[1]), n + s.params[1] - 1);
            cf.formula = "n1 n2 x^(n1+n2-1)";
            break;
        case Family::Path:
            if (n == 2) {
                // P_2 is 1-regular; 2x^2 + (n-3)x^3 only holds from n = 3.
                cf.polynomial = mono(1, 1);
                cf.formula = "m x^(2k-1) with m = 1, k = 1";
            } else {
                cf.polynomial = mono(2, 2) + mono(big(n - 3), 3);
                cf.formula = "2x^2 + (n-3) x^3";
            }
            break;
        case Family::Wheel:
            cf.polynomial = mono(big(n - 1), n + 1) + mono(big(n - 1), 5);
            cf.formula = "(n-1)(x^(n+1) + x^5)";
            break;
        case Family::Star:
            cf.polynomial = mono(big(n - 1), n - 1);
            cf.formula = "(n-1) x^(n-1)";
            break;
        case Family::TrTree:
            cf.nonzero_count = 2;
            cf.exponent_support = {n, n + 1};
            cf.formula = "not available; two terms at x^r and x^(r+1)";
            return cf;
        case Family::GrUnion: {
            BigInt m = 0;
            for (auto [a, b] : g_r_parts(n))
                m += big(a * b);
            cf.polynomial = mono(m, n);
            cf.formula = "m x^r";
            break;
        }
    }
    cf.nonzero_count = cf.polynomial->nonzero_count();
    for (std::size_t j = 0; j < cf.polynomial->coefficients().size(); ++j)
        if (cf.polynomial->coefficient(j) != 0)
            cf.exponent_support.push_back(j);
    return cf;
}

}  // namespace harmpoly

#endif
