#ifndef HARMPOLY_TEST_SUPPORT_HPP
#define HARMPOLY_TEST_SUPPORT_HPP

#include <string>
#include <vector>

#include "harmpoly/harmpoly.hpp"

namespace hp_test {

using namespace harmpoly;

// Small graphs built straight from edge lists, independent of the family generators.

inline Graph path(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

inline Graph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
        e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph::from_edges(n, e);
}

inline Graph complete(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

inline Graph kbip(std::size_t a, std::size_t b) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < b; ++j)
            e.emplace_back(i, static_cast<Vertex>(a + j));
    return Graph::from_edges(a + b, e);
}

/// Hub 0, rim 1..n-1.
inline Graph wheel(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 1; i < n; ++i) {
        e.emplace_back(0, i);
        e.emplace_back(i, static_cast<Vertex>(i + 1 < n ? i + 1 : 1));
    }
    return Graph::from_edges(n, e);
}

inline Graph edgeless(std::size_t n) { return Graph::from_edges(n, std::vector<Edge>{}); }

inline IntPolynomial poly(std::vector<long long> coeffs) {
    std::vector<BigInt> c;
    for (auto v : coeffs)
        c.emplace_back(v);
    return IntPolynomial(c);
}

inline Rational q(long long a, long long b = 1) { return make_rational(a, b); }

}  // namespace hp_test

#endif
