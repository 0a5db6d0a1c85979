#ifndef HARMPOLY_INDICES_HPP
#define HARMPOLY_INDICES_HPP

// Harmonic polynomial and the degree-based indices derived from it.
//
// Most quantities are computed from the coefficient profile (edges bucketed
// by d_u + d_v - 1) and re-derived from a direct pass over the edges; a
// mismatch throws InvariantViolation.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "graph.hpp"
#include "numeric.hpp"
#include "polynomial.hpp"

namespace harmpoly {

/// c_j = number of edges uv with d_u + d_v - 1 = j.
struct CoefficientProfile {
    std::map<std::size_t, std::size_t> counts;
    std::size_t total = 0;

    IntPolynomial to_polynomial() const {
        IntPolynomial p;
        for (auto [j, c] : counts)
            p.add_term(j, BigInt(c));
        return p;
    }

    friend bool operator==(const CoefficientProfile&, const CoefficientProfile&) = default;
};

inline CoefficientProfile coefficient_profile(const Graph& g) {
    CoefficientProfile prof;
    g.for_each_edge([&](Vertex u, Vertex v) {
        ++prof.counts[g.degree(u) + g.degree(v) - 1];
        ++prof.total;
    });
    return prof;
}

/// H(G,x) = sum over edges of x^(d_u + d_v - 1).
inline IntPolynomial harmonic_polynomial(const Graph& g) {
    std::vector<BigInt> c;
    g.for_each_edge([&](Vertex u, Vertex v) {
        std::size_t j = g.degree(u) + g.degree(v) - 1;
        if (j >= c.size())
            c.resize(j + 1);
        c[j] += 1;
    });
    return IntPolynomial(std::move(c));
}

/// First Zagreb polynomial, sum over edges of x^(d_u + d_v).
inline IntPolynomial zagreb_polynomial(const Graph& g) {
    IntPolynomial p;
    g.for_each_edge([&](Vertex u, Vertex v) { p.add_term(g.degree(u) + g.degree(v), 1); });
    return p;
}

// ---------------------------------------------------------------------------
// Direct edge sums. These never look at the profile and serve as the
// independent route for cross-checks and for the verifier.

/// sum over edges of 2/(d_u + d_v)
inline Rational harmonic_index_by_edges(const Graph& g) {
    Rational h = 0;
    g.for_each_edge([&](Vertex u, Vertex v) {
        h += Rational(BigInt(2), BigInt(static_cast<unsigned long long>(g.degree(u) + g.degree(v))));
    });
    return h;
}

inline Rational int_power(const Rational& base, std::int64_t e) {
    if (e < 0)
        return 1 / int_power(base, -e);
    Rational r = 1, b = base;
    for (auto k = static_cast<std::uint64_t>(e); k; k >>= 1) {
        if (k & 1)
            r *= b;
        b *= b;
    }
    return r;
}

/// sum over edges of (d_u + d_v)^alpha, exact.
inline Rational chi_by_edges(const Graph& g, std::int64_t alpha) {
    Rational s = 0;
    g.for_each_edge([&](Vertex u, Vertex v) {
        s += int_power(Rational(static_cast<unsigned long long>(g.degree(u) + g.degree(v))), alpha);
    });
    return s;
}

inline double chi_real_by_edges(const Graph& g, double alpha) {
    long double s = 0;
    g.for_each_edge([&](Vertex u, Vertex v) {
        s += std::pow(static_cast<long double>(g.degree(u) + g.degree(v)),
                      static_cast<long double>(alpha));
    });
    return static_cast<double>(s);
}

inline BigInt pi1_star_by_edges(const Graph& g) {
    BigInt p = 1;
    g.for_each_edge([&](Vertex u, Vertex v) {
        p *= static_cast<unsigned long long>(g.degree(u) + g.degree(v));
    });
    return p;
}

// ---------------------------------------------------------------------------

/// H(G) as the edge sum and as sum 2 c_j / (j + 1); both must agree.
inline Rational harmonic_index(const Graph& g) {
    Rational via_profile = 0;
    for (auto [j, c] : coefficient_profile(g).counts)
        via_profile += Rational(BigInt(2 * c), BigInt(static_cast<unsigned long long>(j + 1)));
    Rational direct = harmonic_index_by_edges(g);
    if (direct != via_profile)
        throw InvariantViolation("harmonic index: edge sum " + to_string(direct) +
                                 " != profile sum " + to_string(via_profile));
    return direct;
}

struct ZagrebIndices {
    BigInt m1;
    BigInt m2;
    BigInt forgotten;
};

/// M1, M2 and F. M1 and F are each computed over edges and over vertices.
inline ZagrebIndices zagreb_and_forgotten(const Graph& g) {
    ZagrebIndices z;
    BigInt m1_vertices = 0, f_vertices = 0;
    g.for_each_edge([&](Vertex u, Vertex v) {
        auto du = static_cast<unsigned long long>(g.degree(u));
        auto dv = static_cast<unsigned long long>(g.degree(v));
        z.m1 += du + dv;
        z.m2 += BigInt(du) * dv;
        z.forgotten += BigInt(du) * du + BigInt(dv) * dv;
    });
    for (Vertex v = 0; v < g.order(); ++v) {
        BigInt d = static_cast<unsigned long long>(g.degree(v));
        m1_vertices += d * d;
        f_vertices += d * d * d;
    }
    if (m1_vertices != z.m1 || f_vertices != z.forgotten)
        throw InvariantViolation("Zagreb edge and vertex sums disagree");
    return z;
}

/// General sum-connectivity index for integer alpha, exact.
inline Rational chi(const Graph& g, std::int64_t alpha) {
    Rational via_profile = 0;
    for (auto [j, c] : coefficient_profile(g).counts)
        via_profile += Rational(BigInt(c)) *
                       int_power(Rational(static_cast<unsigned long long>(j + 1)), alpha);
    Rational direct = chi_by_edges(g, alpha);
    if (direct != via_profile)
        throw InvariantViolation("chi_" + std::to_string(alpha) + " routes disagree");
    return direct;
}

inline constexpr double real_chi_tolerance = 1e-12;

/// General sum-connectivity index for real alpha, double precision.
inline double chi_real(const Graph& g, double alpha) {
    double via_profile = 0;
    for (auto [j, c] : coefficient_profile(g).counts)
        via_profile += static_cast<double>(c) * std::pow(static_cast<double>(j + 1), alpha);
    double direct = chi_real_by_edges(g, alpha);
    double scale = std::max(std::abs(direct), 1.0);
    if (std::abs(direct - via_profile) > real_chi_tolerance * scale)
        throw InvariantViolation("chi_real routes disagree");
    return via_profile;
}

/// F_G(z) = sum over edges of (d_u + d_v)^z, evaluated through the profile.
inline std::complex<double> chi_complex(const Graph& g, std::complex<double> z) {
    std::complex<double> s = 0;
    for (auto [j, c] : coefficient_profile(g).counts)
        s += static_cast<double>(c) * std::exp(z * std::log(static_cast<double>(j + 1)));
    return s;
}

namespace detail {

template <class R>
R checked_mu(const R& value, std::size_t t) {
    if (!(value > 0))
        throw std::domain_error("mu(" + std::to_string(t) + ") is not positive");
    return value;
}

template <class R>
R power(R base, std::size_t e) {
    R r(1);
    for (; e; e >>= 1) {
        if (e & 1)
            r *= base;
        base *= base;
    }
    return r;
}

}  // namespace detail

/// T_mu(G) = sum over edges of mu(d_u + d_v), evaluated as sum_j c_j mu(j + 1).
/// mu must be positive on every occurring edge-degree sum.
template <class Mu>
auto t_mu(const Graph& g, Mu&& mu) {
    using R = std::decay_t<decltype(mu(std::size_t{}))>;
    R s(0);
    for (auto [j, c] : coefficient_profile(g).counts)
        s += R(c) * detail::checked_mu(R(mu(j + 1)), j + 1);
    return s;
}

/// U_mu(G) = product over edges of mu(d_u + d_v), as prod_j mu(j + 1)^c_j.
template <class Mu>
auto u_mu(const Graph& g, Mu&& mu) {
    using R = std::decay_t<decltype(mu(std::size_t{}))>;
    R p(1);
    for (auto [j, c] : coefficient_profile(g).counts)
        p *= detail::power(detail::checked_mu(R(mu(j + 1)), j + 1), c);
    return p;
}

/// Modified first multiplicative Zagreb index, product of (d_u + d_v).
inline BigInt pi1_star(const Graph& g) {
    BigInt via_profile = u_mu(g, [](std::size_t t) { return BigInt(static_cast<unsigned long long>(t)); });
    BigInt direct = pi1_star_by_edges(g);
    if (direct != via_profile)
        throw InvariantViolation("Pi_1^* routes disagree");
    return direct;
}

// ---------------------------------------------------------------------------
// Derivative identities at x = 1.

struct Relation {
    std::string name;
    Rational lhs;
    Rational rhs;

    bool equal() const { return lhs == rhs; }
};

struct DerivativeIdentities {
    Relation edge_count;     // H(1) = m
    Relation first_zagreb;   // H'(1) + H(1) = M1
    Relation second_order;   // H''(1) - 2H(1) = F + 2 M2 - 3 M1
    Relation line_graph;     // H''(1) + 2H(1) = M1(L(G)) + M1(G)
    /// H^(k)(1) against chi_k + sum_{j<k} a_{k,j} chi_j, for k = 0..k_max.
    std::vector<Relation> higher;
    /// 2H(1)/Delta <= n <= 2H(1)/delta; absent for graphs with isolated vertices or no edges.
    std::optional<Rational> lower_vertex_bound;
    std::optional<Rational> upper_vertex_bound;
    std::size_t n = 0;

    bool vertex_bounds_hold() const {
        if (!lower_vertex_bound)
            return true;
        Rational nn(static_cast<unsigned long long>(n));
        return *lower_vertex_bound <= nn && nn <= *upper_vertex_bound;
    }

    bool all_hold() const {
        for (const auto& r : higher)
            if (!r.equal())
                return false;
        return edge_count.equal() && first_zagreb.equal() && second_order.equal() &&
               line_graph.equal() && vertex_bounds_hold();
    }
};

/// Left sides come from formal derivatives of H(G,x); right sides from the
/// degrees (and the explicit line graph) only.
inline DerivativeIdentities derivative_identities(const Graph& g, std::size_t k_max) {
    if (k_max < 2)
        throw std::invalid_argument("derivative_identities requires k_max >= 2");
    const IntPolynomial h = harmonic_polynomial(g);
    auto at_one = [&](std::size_t k) { return evaluate(derivative(h, k), Rational(1)); };
    const Rational h0 = at_one(0), h1 = at_one(1), h2 = at_one(2);

    const Rational m(static_cast<unsigned long long>(g.size()));
    const auto z = zagreb_and_forgotten(g);
    const Rational m1(z.m1), m2(z.m2), f(z.forgotten);
    BigInt m1_line = 0;
    const Graph lg = line_graph(g);
    for (Vertex w = 0; w < lg.order(); ++w)
        m1_line += BigInt(static_cast<unsigned long long>(lg.degree(w))) * lg.degree(w);

    DerivativeIdentities out;
    out.n = g.order();
    out.edge_count = {"H(1) = m", h0, m};
    out.first_zagreb = {"H'(1) + H(1) = M1", h1 + h0, m1};
    out.second_order = {"H''(1) - 2H(1) = F + 2M2 - 3M1", h2 - 2 * h0, f + 2 * m2 - 3 * m1};
    out.line_graph = {"H''(1) + 2H(1) = M1(L(G)) + M1(G)", h2 + 2 * h0, Rational(m1_line) + m1};

    std::vector<Rational> chis;
    for (std::size_t j = 0; j <= k_max; ++j)
        chis.push_back(chi_by_edges(g, static_cast<std::int64_t>(j)));
    out.higher.push_back({"H(1) = chi_0", h0, chis[0]});
    for (std::size_t k = 1; k <= k_max; ++k) {
        IntPolynomial q = vieta_q(k);
        Rational rhs = chis[k];
        for (std::size_t j = 0; j < k; ++j)
            rhs += Rational(q.coefficient(j)) * chis[j];
        out.higher.push_back({"H^(" + std::to_string(k) + ")(1) = chi_" + std::to_string(k) +
                                  " + sum a_{k,j} chi_j",
                              at_one(k), rhs});
    }

    auto deg = degree_summary(g);
    if (deg.max_degree && !g.has_isolated_vertex()) {
        out.lower_vertex_bound = 2 * h0 / Rational(static_cast<unsigned long long>(*deg.max_degree));
        out.upper_vertex_bound = 2 * h0 / Rational(static_cast<unsigned long long>(*deg.min_degree));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Full report

/// Exponent for chi: exact when integral, double otherwise.
struct Exponent {
    std::variant<std::int64_t, double> value;
    std::string text;

    bool is_integer() const { return std::holds_alternative<std::int64_t>(value); }
};

/// Accepts "2", "-1", "1/2", "-0.5", "1e-3".
inline Exponent parse_exponent(const std::string& text) {
    Exponent e;
    e.text = text;
    try {
        if (text.find_first_of(".eE") == std::string::npos) {
            Rational r = parse_rational(text);
            if (boost::multiprecision::denominator(r) == 1) {
                e.value = boost::multiprecision::numerator(r).convert_to<std::int64_t>();
            } else {
                e.value = to_double(r);
            }
            return e;
        }
        std::size_t used = 0;
        e.value = std::stod(text, &used);
        if (used != text.size())
            throw std::invalid_argument(text);
        return e;
    } catch (const std::exception&) {
        throw std::invalid_argument("not an exponent: '" + text + "'");
    }
}

struct ChiValue {
    Exponent alpha;
    std::variant<Rational, double> value;
};

struct IndexReport {
    std::size_t n = 0;
    std::size_t m = 0;
    std::optional<std::size_t> max_degree;
    std::optional<std::size_t> min_degree;
    IntPolynomial polynomial;
    PolynomialStructure poly_structure;
    Rational harmonic;
    BigInt m1, m2, forgotten;
    BigInt pi1_star;
    std::vector<ChiValue> chi;
};

inline IndexReport index_report(const Graph& g, const std::vector<Exponent>& alphas = {}) {
    IndexReport r;
    r.n = g.order();
    r.m = g.size();
    auto deg = degree_summary(g);
    r.max_degree = deg.max_degree;
    r.min_degree = deg.min_degree;
    r.polynomial = harmonic_polynomial(g);
    if (coefficient_profile(g).to_polynomial() != r.polynomial)
        throw InvariantViolation("coefficient profile does not rebuild H(G,x)");
    r.poly_structure = structure(r.polynomial);
    r.harmonic = harmonic_index(g);
    auto z = zagreb_and_forgotten(g);
    r.m1 = z.m1;
    r.m2 = z.m2;
    r.forgotten = z.forgotten;
    r.pi1_star = pi1_star(g);
    if (chi(g, 1) != Rational(r.m1) || 2 * chi(g, -1) != r.harmonic)
        throw InvariantViolation("chi_1 != M1 or 2 chi_-1 != H");
    for (const auto& a : alphas) {
        if (a.is_integer())
            r.chi.push_back({a, chi(g, std::get<std::int64_t>(a.value))});
        else
            r.chi.push_back({a, chi_real(g, std::get<double>(a.value))});
    }
    return r;
}

}  // namespace harmpoly

#endif
