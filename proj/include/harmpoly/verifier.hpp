#ifndef HARMPOLY_VERIFIER_HPP
#define HARMPOLY_VERIFIER_HPP

// Executable versions of the structural results about H(G,x), run over
// exhaustive corpora of small graphs.
//
// Every check computes the polynomial side from H(G,x) and the graph side
// from graph-core predicates, then compares. "If and only if" statements
// are checked in both directions on every graph.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "canonical.hpp"
#include "enumerate.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "indices.hpp"
#include "polynomial.hpp"

namespace harmpoly {

enum class Status { Pass, Fail, NotApplicable };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::NotApplicable: return "n/a";
    }
    return "?";
}

struct TheoremCheck {
    std::string id;
    Status status = Status::NotApplicable;
    /// Failed relation with both sides, or the hypothesis that did not hold.
    std::string detail;
    /// Named situations worth counting, e.g. an equality case of a bound.
    std::vector<std::string> events;
};

struct TheoremInfo {
    std::string id;
    std::string statement;
    /// Part of "all". Only the refuted subgraph claim is left out.
    bool in_default_set = true;
};

inline const std::vector<TheoremInfo>& theorem_registry() {
    static const std::vector<TheoremInfo> registry = {
        {"poli1", "k-regular with m edges => H(G,x) = m x^(2k-1)"},
        {"poli2", "closed forms for K_n, C_n, Q_n, K_{n1,n2}, P_n, W_n, stars"},
        {"p1", "H(1) = m; H'(1)+H(1) = M1; H''(1)-2H(1) = F+2M2-3M1; H''(1)+2H(1) = M1(L(G))+M1(G)"},
        {"p1-bounds", "2H(1)/Delta <= n <= 2H(1)/delta"},
        {"p1k", "H^(k)(1) = chi_k + sum_{j<k} a_{k,j} chi_j for k <= 5"},
        {"c1", "proper subgraph => different harmonic polynomial"},
        {"p2", "derivatives have non-negative coefficients; H > 0 and increasing on (0, inf)"},
        {"p2-convexity", "H strictly convex <=> G is not a union of P_2"},
        {"t-p2", "0 is the only zero of H(G,x) <=> G coherent"},
        {"c-p2", "connected: 0 is the only zero <=> regular or biregular"},
        {"p1bis", "H(G) >= 2 H(G,1/2), equality <=> union of P_2"},
        {"p3", "zero multiplicity at 0 = Deg_min; 2delta-1 <= Deg_min <= Deg <= 2Delta-1; "
               "Deg <= 2n-3 with equality <=> two adjacent dominant vertices; Deg monotone on subgraphs"},
        {"p3-subgraph-min", "Deg_min H(subgraph) <= Deg_min H(G) (refuted: K_4 plus a pendant edge)", false},
        {"t-p3", "Deg >= n => girth 3; triangle-free and Deg = n-1 => connected, diam <= 3"},
        {"t-p4", "1 <= K <= m; K = 1 <=> coherent; K = m <=> G = P_2"},
        {"c-p4", "m >= 2 => 1 <= K <= m-1"},
        {"p4", "K <= Deg-Deg_min+1; K <= min(2Delta-2delta+1, m-2delta+2); triangle-free => K <= n-2delta+1"},
        {"t-sucdeg", "r distinct degrees => K <= r(r+1)/2 and r >= ceil((sqrt(8K+1)-1)/2)"},
        {"t-sucdeg2", "connected with r distinct degrees: r > 2 => K >= 2, else K >= 1"},
        {"t-sucdeg3", "a component with more than two distinct degrees => K >= 2"},
        {"p-sucdeg", "H odd <=> each component has all-even or all-odd degrees"},
        {"p-sucdeg2", "H even <=> alternated degree"},
        {"p5", "coefficient of x^2 = number of pendant paths"},
        {"t1", "2m^2/M1 <= H(G) <= (Delta+delta)^2 m^2 / (2 Delta delta M1)"},
        {"p6", "2delta-1 <= Deg_min <= H'(1)/m; 4m/n - 1 <= Deg <= 2Delta-1"},
        {"p7", "c_min/c_max sandwich bounds on H(G)"},
        {"m1-poly", "M1(G,x) = x H(G,x)"},
        {"integral", "H(G) = 2 * integral_0^1 H(G,x) dx"},
        {"additivity", "H(G,x) = sum of H over connected components"},
    };
    return registry;
}

/// "all" (the default set) or a comma-separated list of ids.
inline std::vector<std::string> resolve_theorems(const std::string& spec) {
    std::vector<std::string> ids;
    if (spec == "all") {
        for (const auto& t : theorem_registry())
            if (t.in_default_set)
                ids.push_back(t.id);
        return ids;
    }
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        auto comma = spec.find(',', pos);
        std::string id = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!id.empty()) {
            bool known = std::any_of(theorem_registry().begin(), theorem_registry().end(),
                                     [&](const TheoremInfo& t) { return t.id == id; });
            if (!known)
                throw std::invalid_argument("unknown theorem id '" + id + "'");
            if (std::find(ids.begin(), ids.end(), id) == ids.end())
                ids.push_back(id);
        }
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return ids;
}

namespace detail {

inline Rational Q(std::size_t v) { return Rational(static_cast<unsigned long long>(v)); }

inline std::string str(std::size_t v) { return std::to_string(v); }

/// Positive rational sample points for pointwise checks.
inline const std::vector<Rational>& sample_points() {
    static const std::vector<Rational> pts = {make_rational(1, 7), make_rational(1, 2), make_rational(1),
                                              make_rational(3, 2), make_rational(5)};
    return pts;
}

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

/// Everything the checks read, computed once per graph.
class Facts {
  public:
    explicit Facts(const Graph& graph)
        : g(graph), n(graph.order()), m(graph.size()), deg(degree_summary(graph)),
          h(harmonic_polynomial(graph)), st(structure(h)), K(st.nonzero_count),
          isolated(graph.has_isolated_vertex()) {
        components = connected_components(graph);
        connected = components.size() <= 1;
    }

    const Graph& g;
    std::size_t n, m;
    DegreeSummary deg;
    IntPolynomial h;
    PolynomialStructure st;
    std::size_t K;
    bool isolated;
    bool connected = true;
    std::vector<Component> components;

    std::size_t dmax() const { return *st.degree; }
    std::size_t dmin() const { return *st.min_degree; }
    std::size_t Delta() const { return *deg.max_degree; }
    std::size_t delta() const { return *deg.min_degree; }

    const std::string& graph6() const {
        if (!g6_)
            g6_ = write_graph6(g);
        return *g6_;
    }

    const DerivativeIdentities& identities() const {
        if (!ids_)
            ids_ = derivative_identities(g, 5);
        return *ids_;
    }

    bool all_components_p2() const {
        return std::all_of(components.begin(), components.end(), [](const Component& c) {
            return c.graph.order() == 2 && c.graph.size() == 1;
        });
    }

    bool triangle_free() const {
        if (!tf_)
            tf_ = is_triangle_free(g);
        return *tf_;
    }

    /// Proper subgraphs with isolated vertices dropped: every single-edge and
    /// single-vertex deletion plus a few seeded random edge subsets.
    const std::vector<Graph>& proper_subgraphs() const {
        if (subs_)
            return *subs_;
        subs_.emplace();
        const auto edges = g.edges();
        for (std::size_t skip = 0; skip < edges.size(); ++skip) {
            std::vector<Edge> e;
            for (std::size_t i = 0; i < edges.size(); ++i)
                if (i != skip)
                    e.push_back(edges[i]);
            subs_->push_back(without_isolated_vertices(Graph::from_edges(n, e)));
        }
        for (Vertex v = 0; v < n; ++v) {
            std::vector<Vertex> keep;
            for (Vertex u = 0; u < n; ++u)
                if (u != v)
                    keep.push_back(u);
            subs_->push_back(without_isolated_vertices(induced_subgraph(g, keep)));
        }
        std::mt19937_64 rng(fnv1a(graph6()));
        for (int sample = 0; sample < 4 && !edges.empty(); ++sample) {
            std::vector<Edge> e;
            for (const auto& edge : edges)
                if (rng() & 1)
                    e.push_back(edge);
            if (e.size() == edges.size())
                e.erase(e.begin() + static_cast<std::ptrdiff_t>(rng() % e.size()));
            subs_->push_back(without_isolated_vertices(Graph::from_edges(n, e)));
        }
        return *subs_;
    }

  private:
    mutable std::optional<std::string> g6_;
    mutable std::optional<DerivativeIdentities> ids_;
    mutable std::optional<bool> tf_;
    mutable std::optional<std::vector<Graph>> subs_;
};

/// Collects the verdict of one check.
class Outcome {
  public:
    void not_applicable(std::string reason) {
        if (!na_)
            na_ = std::move(reason);
    }

    /// Records the first failed condition; `describe` runs only on failure.
    template <class Describe>
    void require(bool ok, Describe&& describe) {
        if (!ok && !failure_)
            failure_ = describe();
    }

    void event(std::string name) { events_.push_back(std::move(name)); }

    TheoremCheck finish(std::string id) && {
        TheoremCheck c;
        c.id = std::move(id);
        if (failure_) {
            c.status = Status::Fail;
            c.detail = *failure_;
        } else if (na_) {
            c.status = Status::NotApplicable;
            c.detail = *na_;
        } else {
            c.status = Status::Pass;
        }
        c.events = std::move(events_);
        return c;
    }

    bool skipped() const { return na_.has_value(); }

  private:
    std::optional<std::string> na_, failure_;
    std::vector<std::string> events_;
};

inline std::string rel(const std::string& name, const Rational& lhs, const Rational& rhs) {
    return name + ": lhs " + to_string(lhs) + ", rhs " + to_string(rhs);
}

inline std::string iff(const char* what, bool poly_side, bool graph_side) {
    return std::string(what) + ": polynomial side " + (poly_side ? "true" : "false") + ", graph side " +
           (graph_side ? "true" : "false");
}

inline bool has_adjacent_dominant_pair(const Graph& g) {
    auto dom = dominant_vertices(g);
    for (std::size_t i = 0; i < dom.size(); ++i)
        for (std::size_t j = i + 1; j < dom.size(); ++j)
            if (g.adjacent(dom[i], dom[j]))
                return true;
    return false;
}

/// Smallest r with r(r+1)/2 >= s, and the same value from the square-root formula.
inline std::size_t min_distinct_degrees(std::size_t s) {
    std::size_t by_search = 0;
    while (by_search * (by_search + 1) / 2 < s)
        ++by_search;
    const std::uint64_t t = 8 * static_cast<std::uint64_t>(s) + 1;
    const std::uint64_t q = isqrt(t);
    const std::uint64_t by_formula = q * q == t ? (q - 1) / 2 : (q + 1) / 2;
    if (by_formula != by_search)
        throw InvariantViolation("ceil((sqrt(8s+1)-1)/2) mismatch at s = " + std::to_string(s));
    return by_search;
}

using CheckFn = std::function<void(const Facts&, Outcome&)>;

inline const std::map<std::string, CheckFn>& check_table() {
    static const std::map<std::string, CheckFn> table = {
        {"poli1",
         [](const Facts& f, Outcome& o) {
             if (f.deg.distinct.size() != 1)
                 return o.not_applicable("not regular");
             const std::size_t k = f.deg.distinct[0];
             auto expected = IntPolynomial::monomial(BigInt(static_cast<unsigned long long>(f.m)), 2 * k - 1);
             o.require(f.h == expected, [&] { return "H = " + to_string(f.h) + ", expected " + to_string(expected); });
         }},
        {"poli2",
         [](const Facts& f, Outcome& o) {
             if (!f.connected)
                 return o.not_applicable("disconnected");
             if (f.n > isomorphism_vertex_limit)
                 return o.not_applicable("too large for family recognition");
             std::vector<FamilySpec> specs;
             const std::size_t n = f.n;
             specs.push_back({Family::Complete, {n}});
             if (n >= 3)
                 specs.push_back({Family::Cycle, {n}});
             specs.push_back({Family::Path, {n}});
             if (n >= 4)
                 specs.push_back({Family::Wheel, {n}});
             specs.push_back({Family::Star, {n}});
             for (std::size_t a = 1; 2 * a <= n; ++a)
                 specs.push_back({Family::CompleteBipartite, {a, n - a}});
             for (std::size_t k = 1; (std::size_t{1} << k) <= n; ++k)
                 if ((std::size_t{1} << k) == n)
                     specs.push_back({Family::Hypercube, {k}});
             bool matched = false;
             for (const auto& s : specs) {
                 Graph member = generate(s);
                 if (member.size() != f.m || !is_isomorphic(member, f.g))
                     continue;
                 matched = true;
                 o.event("matched " + std::string(family_name(s.family)));
                 auto cf = closed_form_polynomial(s);
                 o.require(*cf.polynomial == f.h, [&] {
                     return to_string(s) + ": H = " + to_string(f.h) + ", closed form " + to_string(*cf.polynomial);
                 });
             }
             if (!matched)
                 o.not_applicable("not a named family");
         }},
        {"p1",
         [](const Facts& f, Outcome& o) {
             const auto& d = f.identities();
             for (const Relation* r : {&d.edge_count, &d.first_zagreb, &d.second_order, &d.line_graph})
                 o.require(r->equal(), [&] { return rel(r->name, r->lhs, r->rhs); });
         }},
        {"p1-bounds",
         [](const Facts& f, Outcome& o) {
             const auto& d = f.identities();
             o.require(d.lower_vertex_bound.has_value(), [] { return std::string("vertex bounds missing"); });
             if (!d.lower_vertex_bound)
                 return;
             o.require(d.vertex_bounds_hold(), [&] {
                 return "2H(1)/Delta = " + to_string(*d.lower_vertex_bound) + ", n = " + str(f.n) +
                        ", 2H(1)/delta = " + to_string(*d.upper_vertex_bound);
             });
             if (*d.lower_vertex_bound == Q(f.n))
                 o.event("lower equality");
             if (*d.upper_vertex_bound == Q(f.n))
                 o.event("upper equality");
         }},
        {"p1k",
         [](const Facts& f, Outcome& o) {
             for (const auto& r : f.identities().higher)
                 o.require(r.equal(), [&] { return rel(r.name, r.lhs, r.rhs); });
         }},
        {"c1",
         [](const Facts& f, Outcome& o) {
             const Rational m_g = evaluate(f.h, Rational(1));
             for (const Graph& sub : f.proper_subgraphs()) {
                 IntPolynomial hs = harmonic_polynomial(sub);
                 Rational m_sub = evaluate(hs, Rational(1));
                 o.require(hs != f.h && m_sub < m_g, [&] {
                     return "subgraph " + write_graph6(sub) + " has H = " + to_string(hs) + " (H(1) = " +
                            to_string(m_sub) + ") vs " + to_string(f.h);
                 });
             }
         }},
        {"p2",
         [](const Facts& f, Outcome& o) {
             for (std::size_t k = 0; k <= f.dmax(); ++k) {
                 IntPolynomial dk = derivative(f.h, k);
                 for (const auto& c : dk.coefficients())
                     o.require(c >= 0, [&] { return "H^(" + str(k) + ") has a negative coefficient"; });
             }
             o.require(f.dmin() >= 1, [&] { return "Deg_min = " + str(f.dmin()); });
             const IntPolynomial h1 = derivative(f.h, 1);
             Rational prev = evaluate(f.h, Rational(0));
             for (const auto& x : sample_points()) {
                 Rational hx = evaluate(f.h, x), dx = evaluate(h1, x);
                 o.require(hx > 0 && dx > 0, [&] {
                     return "at x = " + to_string(x) + ": H = " + to_string(hx) + ", H' = " + to_string(dx);
                 });
                 o.require(hx > prev, [&] { return "H not increasing up to x = " + to_string(x); });
                 prev = hx;
             }
         }},
        {"p2-convexity",
         [](const Facts& f, Outcome& o) {
             const bool not_p2_union = !f.all_components_p2();
             o.require((f.dmax() >= 2) == not_p2_union, [&] { return iff("Deg >= 2 vs not a P_2 union", f.dmax() >= 2, not_p2_union); });
             const IntPolynomial h2 = derivative(f.h, 2);
             for (const auto& x : sample_points()) {
                 bool convex_here = evaluate(h2, x) > 0;
                 o.require(convex_here == not_p2_union, [&] {
                     return iff(("H''(" + to_string(x) + ") > 0 vs not a P_2 union").c_str(), convex_here, not_p2_union);
                 });
             }
         }},
        {"t-p2",
         [](const Facts& f, Outcome& o) {
             const bool only_zero = origin_is_only_root(f.h);
             const bool coherent = is_coherent(f.g);
             o.require(only_zero == coherent, [&] { return iff("0 only zero vs coherent", only_zero, coherent); });
             if (coherent)
                 o.event("coherent");
         }},
        {"c-p2",
         [](const Facts& f, Outcome& o) {
             if (!f.connected)
                 return o.not_applicable("disconnected");
             const auto cls = classify_connected(f.g);
             const bool rb = cls.kind != ComponentClass::Kind::Neither;
             const bool only_zero = origin_is_only_root(f.h);
             o.require(only_zero == rb, [&] { return iff("0 only zero vs regular/biregular", only_zero, rb); });
             if (cls.kind == ComponentClass::Kind::Biregular)
                 o.event("biregular");
         }},
        {"p1bis",
         [](const Facts& f, Outcome& o) {
             const Rational hg = harmonic_index_by_edges(f.g);
             const Rational mid = 2 * evaluate(f.h, make_rational(1, 2));
             o.require(hg >= mid, [&] { return rel("H(G) >= 2H(G,1/2)", hg, mid); });
             const bool eq = hg == mid, p2 = f.all_components_p2();
             o.require(eq == p2, [&] { return iff("equality vs union of P_2", eq, p2); });
             if (eq)
                 o.event("equality");
         }},
        {"p3",
         [](const Facts& f, Outcome& o) {
             auto mult = zero_multiplicity_at_origin(f.h);
             o.require(mult == f.st.min_degree, [&] {
                 return "multiplicity of 0 is " + str(mult.value_or(0)) + ", Deg_min is " + str(f.dmin());
             });
             o.require(2 * f.delta() - 1 <= f.dmin() && f.dmin() <= f.dmax() && f.dmax() <= 2 * f.Delta() - 1, [&] {
                 return "2delta-1 = " + str(2 * f.delta() - 1) + ", Deg_min = " + str(f.dmin()) + ", Deg = " +
                        str(f.dmax()) + ", 2Delta-1 = " + str(2 * f.Delta() - 1);
             });
             o.require(f.dmax() + 3 <= 2 * f.n, [&] { return "Deg = " + str(f.dmax()) + " > 2n-3"; });
             const bool top = f.dmax() + 3 == 2 * f.n;
             const bool dom = has_adjacent_dominant_pair(f.g);
             o.require(top == dom, [&] { return iff("Deg = 2n-3 vs adjacent dominant pair", top, dom); });
             if (top)
                 o.event("Deg = 2n-3");
             for (const Graph& sub : f.proper_subgraphs()) {
                 auto ds = harmonic_polynomial(sub).degree();
                 if (!ds)
                     continue;
                 o.require(*ds <= f.dmax(), [&] {
                     return "subgraph " + write_graph6(sub) + " has Deg " + str(*ds) + " > " + str(f.dmax());
                 });
             }
         }},
        {"p3-subgraph-min",
         [](const Facts& f, Outcome& o) {
             for (const Graph& sub : f.proper_subgraphs()) {
                 auto ds = harmonic_polynomial(sub).min_degree();
                 if (!ds)
                     continue;
                 o.require(*ds <= f.dmin(), [&] {
                     return "subgraph " + write_graph6(sub) + " has Deg_min " + str(*ds) + " > " + str(f.dmin());
                 });
             }
         }},
        {"t-p3",
         [](const Facts& f, Outcome& o) {
             if (f.dmax() >= f.n) {
                 auto gg = girth(f.g);
                 o.require(gg == std::optional<std::size_t>(3), [&] {
                     return "Deg = " + str(f.dmax()) + " >= n but girth is " + (gg ? str(*gg) : std::string("acyclic"));
                 });
                 o.event("Deg >= n");
             }
             if (f.triangle_free()) {
                 o.require(f.dmax() + 1 <= f.n, [&] { return "triangle-free with Deg = " + str(f.dmax()); });
                 if (f.dmax() + 1 == f.n) {
                     auto d = diameter(f.g);
                     o.require(d && *d <= 3, [&] {
                         return "triangle-free, Deg = n-1, diameter " + (d ? str(*d) : std::string("disconnected"));
                     });
                     o.event("triangle-free with Deg = n-1");
                 }
             }
         }},
        {"t-p4",
         [](const Facts& f, Outcome& o) {
             o.require(1 <= f.K && f.K <= f.m, [&] { return "K = " + str(f.K) + ", m = " + str(f.m); });
             const bool k1 = f.K == 1, coherent = is_coherent(f.g);
             o.require(k1 == coherent, [&] { return iff("K = 1 vs coherent", k1, coherent); });
             const bool km = f.K == f.m, p2 = f.n == 2 && f.m == 1;
             o.require(km == p2, [&] { return iff("K = m vs P_2", km, p2); });
         }},
        {"c-p4",
         [](const Facts& f, Outcome& o) {
             if (f.m < 2)
                 return o.not_applicable("fewer than two edges");
             o.require(1 <= f.K && f.K + 1 <= f.m, [&] { return "K = " + str(f.K) + ", m = " + str(f.m); });
         }},
        {"p4",
         [](const Facts& f, Outcome& o) {
             o.require(f.K <= f.dmax() - f.dmin() + 1, [&] {
                 return "K = " + str(f.K) + " > Deg - Deg_min + 1 = " + str(f.dmax() - f.dmin() + 1);
             });
             o.require(f.K + 2 * f.delta() <= 2 * f.Delta() + 1, [&] { return "K = " + str(f.K) + " > 2Delta-2delta+1"; });
             o.require(f.K + 2 * f.delta() <= f.m + 2, [&] { return "K = " + str(f.K) + " > m-2delta+2"; });
             if (f.triangle_free())
                 o.require(f.K + 2 * f.delta() <= f.n + 1, [&] { return "triangle-free, K = " + str(f.K) + " > n-2delta+1"; });
         }},
        {"t-sucdeg",
         [](const Facts& f, Outcome& o) {
             const std::size_t r = f.deg.distinct.size();
             o.require(f.K <= r * (r + 1) / 2, [&] { return "K = " + str(f.K) + " > r(r+1)/2 with r = " + str(r); });
             for (std::size_t s = 1; s <= f.K; ++s) {
                 std::size_t need = min_distinct_degrees(s);
                 o.require(r >= need, [&] { return "K >= " + str(s) + " needs r >= " + str(need) + ", r = " + str(r); });
             }
         }},
        {"t-sucdeg2",
         [](const Facts& f, Outcome& o) {
             if (!f.connected)
                 return o.not_applicable("disconnected");
             const std::size_t r = f.deg.distinct.size();
             const std::size_t need = r > 2 ? 2 : 1;
             o.require(f.K >= need, [&] { return "r = " + str(r) + " but K = " + str(f.K); });
             if (r > 2 && f.K == 2)
                 o.event("sharp at K = 2");
         }},
        {"t-sucdeg3",
         [](const Facts& f, Outcome& o) {
             for (const auto& c : f.components) {
                 const std::size_t r = degree_summary(c.graph).distinct.size();
                 if (r > 2) {
                     o.require(f.K >= 2, [&] { return "component with r = " + str(r) + " but K = " + str(f.K); });
                     o.event("component with r > 2");
                     break;
                 }
             }
         }},
        {"p-sucdeg",
         [](const Facts& f, Outcome& o) {
             const bool odd = parity(f.h) == Parity::OddFunction;
             bool homogeneous = true;
             for (const auto& c : f.components) {
                 auto d = degree_summary(c.graph).distinct;
                 homogeneous = homogeneous && std::all_of(d.begin(), d.end(), [&](std::size_t x) { return x % 2 == d[0] % 2; });
             }
             o.require(odd == homogeneous, [&] { return iff("H odd vs parity-homogeneous components", odd, homogeneous); });
         }},
        {"p-sucdeg2",
         [](const Facts& f, Outcome& o) {
             const bool even = parity(f.h) == Parity::EvenFunction;
             const bool alt = has_alternated_degree(f.g);
             o.require(even == alt, [&] { return iff("H even vs alternated degree", even, alt); });
         }},
        {"p5",
         [](const Facts& f, Outcome& o) {
             const BigInt c2 = f.h.coefficient(2);
             const std::size_t paths = pendant_path_count(f.g);
             o.require(c2 == paths, [&] { return "x^2 coefficient " + c2.str() + ", pendant paths " + str(paths); });
         }},
        {"t1",
         [](const Facts& f, Outcome& o) {
             const Rational hg = harmonic_index_by_edges(f.g);
             const Rational m1(zagreb_and_forgotten(f.g).m1);
             const Rational mm = Q(f.m) * Q(f.m);
             const Rational lower = 2 * mm / m1;
             const Rational D = Q(f.Delta()), d = Q(f.delta());
             const Rational upper = (D + d) * (D + d) * mm / (2 * D * d * m1);
             o.require(lower <= hg, [&] { return rel("2m^2/M1 <= H(G)", lower, hg); });
             o.require(hg <= upper, [&] { return rel("H(G) <= (D+d)^2 m^2/(2 D d M1)", hg, upper); });
             std::set<std::size_t> sums;
             f.g.for_each_edge([&](Vertex u, Vertex v) { sums.insert(f.g.degree(u) + f.g.degree(v)); });
             const bool constant = sums.size() == 1, lower_eq = lower == hg;
             o.require(lower_eq == constant, [&] { return iff("lower equality vs constant d_u+d_v", lower_eq, constant); });
             if (lower_eq)
                 o.event("lower equality");
             const bool regular = f.deg.distinct.size() == 1;
             if (regular)
                 o.require(hg == upper, [&] { return rel("regular => upper equality", hg, upper); });
             if (hg == upper) {
                 o.event("upper equality");
                 if (!regular)
                     o.event("upper equality, not regular");
             }
         }},
        {"p6",
         [](const Facts& f, Outcome& o) {
             const Rational h1 = evaluate(derivative(f.h, 1), Rational(1));
             o.require(2 * f.delta() - 1 <= f.dmin(), [&] { return "Deg_min = " + str(f.dmin()) + " < 2delta-1"; });
             o.require(Q(f.dmin()) * Q(f.m) <= h1, [&] { return rel("Deg_min * m <= H'(1)", Q(f.dmin()) * Q(f.m), h1); });
             o.require(4 * f.m <= (f.dmax() + 1) * f.n, [&] { return "Deg = " + str(f.dmax()) + " < 4m/n - 1"; });
             o.require(f.dmax() + 1 <= 2 * f.Delta(), [&] { return "Deg = " + str(f.dmax()) + " > 2Delta-1"; });
         }},
        {"p7",
         [](const Facts& f, Outcome& o) {
             const Rational hg = harmonic_index_by_edges(f.g);
             const Rational cmin(*f.st.trailing), cmax(*f.st.leading), m = Q(f.m);
             const Rational lo_den = Q(f.dmin() + 1), hi_den = Q(f.dmax() + 1);
             const Rational lower = 2 * cmin / lo_den + (2 * m - 2 * cmin) / hi_den;
             const Rational upper = 2 * cmax / hi_den + (2 * m - 2 * cmax) / lo_den;
             o.require(lower <= hg, [&] { return rel("lower <= H(G)", lower, hg); });
             o.require(hg <= upper, [&] { return rel("H(G) <= upper", hg, upper); });
         }},
        {"m1-poly",
         [](const Facts& f, Outcome& o) {
             IntPolynomial lhs = zagreb_polynomial(f.g), rhs = IntPolynomial::monomial(1, 1) * f.h;
             o.require(lhs == rhs, [&] { return "M1(G,x) = " + to_string(lhs) + ", x H(G,x) = " + to_string(rhs); });
         }},
        {"integral",
         [](const Facts& f, Outcome& o) {
             const Rational hg = harmonic_index_by_edges(f.g);
             const Rational integral = 2 * definite_integral(f.h, Rational(0), Rational(1));
             o.require(hg == integral, [&] { return rel("H(G) = 2 int H", hg, integral); });
         }},
        {"additivity",
         [](const Facts& f, Outcome& o) {
             IntPolynomial sum;
             for (const auto& c : f.components)
                 sum += harmonic_polynomial(c.graph);
             o.require(sum == f.h, [&] { return "component sum " + to_string(sum) + " vs " + to_string(f.h); });
         }},
    };
    return table;
}

}  // namespace detail

/// Runs the listed checks on one graph. Graphs with an isolated vertex (and
/// the empty graph) fall outside every result's hypotheses and get n/a.
inline std::vector<TheoremCheck> run_checks(const Graph& g, const std::vector<std::string>& ids) {
    std::vector<TheoremCheck> out;
    out.reserve(ids.size());
    if (g.order() == 0 || g.has_isolated_vertex()) {
        for (const auto& id : ids)
            out.push_back({id, Status::NotApplicable, g.order() == 0 ? "empty graph" : "isolated vertex present", {}});
        return out;
    }
    const detail::Facts facts(g);
    const auto& table = detail::check_table();
    for (const auto& id : ids) {
        auto it = table.find(id);
        if (it == table.end())
            throw std::invalid_argument("unknown theorem id '" + id + "'");
        detail::Outcome outcome;
        it->second(facts, outcome);
        out.push_back(std::move(outcome).finish(id));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Corpus verification

struct FailureWitness {
    /// Position in the corpus stream (n ascending, then labelled mask ascending).
    std::uint64_t index = 0;
    std::string graph6;
    std::string detail;
};

struct TheoremTally {
    std::string id;
    std::uint64_t pass = 0, fail = 0, not_applicable = 0;
    std::map<std::string, std::uint64_t> events;
    std::vector<FailureWitness> witnesses;

    std::uint64_t total() const { return pass + fail + not_applicable; }
};

struct CorpusDescriptor {
    std::size_t n_min = 1;
    std::size_t n_max = 0;
    bool connected_only = false;
    std::uint64_t count = 0;
};

struct VerificationReport {
    CorpusDescriptor corpus;
    std::vector<TheoremTally> tallies;
    std::size_t workers = 1;
    double elapsed_seconds = 0;

    std::uint64_t total_fail() const {
        std::uint64_t f = 0;
        for (const auto& t : tallies)
            f += t.fail;
        return f;
    }
};

struct VerifyOptions {
    std::size_t n_max = 5;
    bool connected_only = false;
    std::vector<std::string> theorems = resolve_theorems("all");
    std::size_t workers = 1;
    bool allow_large = false;
    std::size_t max_witnesses = 20;
};

/// Runs the registry over every labelled graph with 1 <= n <= n_max. Workers
/// take interleaved masks; tallies and witness lists merge independently of
/// scheduling, so the report depends only on the options (apart from timing).
inline VerificationReport verify_corpus(const VerifyOptions& opt) {
    check_enumeration_limit(opt.n_max, opt.allow_large);
    const auto start = std::chrono::steady_clock::now();
    const std::size_t workers = std::max<std::size_t>(1, opt.workers);

    struct Partial {
        std::vector<TheoremTally> tallies;
        std::uint64_t count = 0;
    };
    std::vector<Partial> partial(workers);
    for (auto& p : partial)
        for (const auto& id : opt.theorems)
            p.tallies.push_back({id, 0, 0, 0, {}, {}});

    std::vector<std::uint64_t> base(opt.n_max + 2, 0);
    for (std::size_t n = 1; n <= opt.n_max; ++n)
        base[n + 1] = base[n] + (std::uint64_t{1} << pair_count(n));

    auto work = [&](std::size_t w) {
        Partial& mine = partial[w];
        for (std::size_t n = 1; n <= opt.n_max; ++n) {
            for_each_labeled_graph(
                n,
                [&](std::uint64_t mask, const Graph& g) {
                    if (opt.connected_only && !is_connected(g))
                        return;
                    ++mine.count;
                    auto checks = run_checks(g, opt.theorems);
                    for (std::size_t i = 0; i < checks.size(); ++i) {
                        auto& t = mine.tallies[i];
                        switch (checks[i].status) {
                            case Status::Pass: ++t.pass; break;
                            case Status::NotApplicable: ++t.not_applicable; break;
                            case Status::Fail:
                                ++t.fail;
                                if (t.witnesses.size() < opt.max_witnesses)
                                    t.witnesses.push_back({base[n] + mask, write_graph6(g), checks[i].detail});
                                break;
                        }
                        for (auto& e : checks[i].events)
                            ++t.events[e];
                    }
                },
                workers, w);
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    work(w);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto& t : pool)
            t.join();
        for (auto& e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    VerificationReport report;
    report.workers = workers;
    report.corpus = {1, opt.n_max, opt.connected_only, 0};
    report.tallies = std::move(partial[0].tallies);
    report.corpus.count = partial[0].count;
    for (std::size_t w = 1; w < workers; ++w) {
        report.corpus.count += partial[w].count;
        for (std::size_t i = 0; i < report.tallies.size(); ++i) {
            auto& dst = report.tallies[i];
            auto& src = partial[w].tallies[i];
            dst.pass += src.pass;
            dst.fail += src.fail;
            dst.not_applicable += src.not_applicable;
            for (auto& [k, v] : src.events)
                dst.events[k] += v;
            dst.witnesses.insert(dst.witnesses.end(), src.witnesses.begin(), src.witnesses.end());
        }
    }
    for (auto& t : report.tallies) {
        std::sort(t.witnesses.begin(), t.witnesses.end(),
                  [](const FailureWitness& a, const FailureWitness& b) { return a.index < b.index; });
        if (t.witnesses.size() > opt.max_witnesses)
            t.witnesses.resize(opt.max_witnesses);
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// ---------------------------------------------------------------------------
// Collision mining

struct CollisionPair {
    Graph first;
    Graph second;
    IntPolynomial polynomial;
    /// Index agreements that did not hold; empty when the battery passed.
    std::vector<std::string> failures;

    bool agrees() const { return failures.empty(); }
};

struct CollisionReport {
    std::size_t n_max = 0;
    std::size_t classes_examined = 0;
    std::vector<CollisionPair> pairs;

    std::size_t failing_pairs() const {
        return static_cast<std::size_t>(
            std::count_if(pairs.begin(), pairs.end(), [](const CollisionPair& p) { return !p.agrees(); }));
    }
};

inline const std::vector<std::string>& collision_alphas() {
    static const std::vector<std::string> a = {"-2", "-1", "-1/2", "0", "1/2", "1", "2", "3"};
    return a;
}

/// Compares indices of two graphs through per-edge sums over each graph,
/// not through the shared polynomial.
inline std::vector<std::string> index_agreement_battery(const Graph& a, const Graph& b) {
    std::vector<std::string> failures;
    auto close = [](double x, double y) {
        return std::abs(x - y) <= real_chi_tolerance * std::max({std::abs(x), std::abs(y), 1e-300});
    };
    for (const auto& text : collision_alphas()) {
        Exponent e = parse_exponent(text);
        if (e.is_integer()) {
            auto alpha = std::get<std::int64_t>(e.value);
            Rational x = chi_by_edges(a, alpha), y = chi_by_edges(b, alpha);
            if (x != y)
                failures.push_back("chi_" + text + ": " + to_string(x) + " vs " + to_string(y));
        } else {
            double alpha = std::get<double>(e.value);
            double x = chi_real_by_edges(a, alpha), y = chi_real_by_edges(b, alpha);
            if (!close(x, y))
                failures.push_back("chi_" + text + " differs beyond 1e-12 relative");
        }
    }
    if (pi1_star_by_edges(a) != pi1_star_by_edges(b))
        failures.push_back("Pi_1^* differs");

    // T_mu and U_mu for mu(t) = 1/(t^2 + 1), exact, summed edge by edge.
    auto mu = [](std::size_t t) { return Rational(BigInt(1), BigInt(static_cast<unsigned long long>(t * t + 1))); };
    auto by_edges = [&](const Graph& g) {
        Rational t = 0, u = 1;
        g.for_each_edge([&](Vertex x, Vertex y) {
            auto v = mu(g.degree(x) + g.degree(y));
            t += v;
            u *= v;
        });
        return std::pair{t, u};
    };
    if (by_edges(a) != by_edges(b))
        failures.push_back("T_mu/U_mu with mu(t) = 1/(t^2+1) differ");

    // F_G(z) at a complex point, edge by edge.
    const std::complex<double> z(0.5, 3.0);
    auto fz = [&](const Graph& g) {
        std::complex<double> s = 0;
        g.for_each_edge([&](Vertex x, Vertex y) {
            s += std::exp(z * std::log(static_cast<double>(g.degree(x) + g.degree(y))));
        });
        return s;
    };
    auto fa = fz(a), fb = fz(b);
    if (std::abs(fa - fb) > 1e-12 * std::max({std::abs(fa), std::abs(fb), 1.0}))
        failures.push_back("F_G(1/2 + 3i) differs");
    return failures;
}

/// Non-isomorphic graphs without isolated vertices (2 <= n <= n_max) that
/// share a harmonic polynomial, each checked with index_agreement_battery.
inline CollisionReport mine_collisions(std::size_t n_max, bool allow_large = false) {
    check_enumeration_limit(n_max, allow_large);
    CollisionReport report;
    report.n_max = n_max;
    std::map<std::string, std::vector<Graph>> groups;
    for (std::size_t n = 2; n <= n_max; ++n)
        for (auto& g : graph_classes(n)) {
            if (g.has_isolated_vertex())
                continue;
            ++report.classes_examined;
            groups[to_string(harmonic_polynomial(g))].push_back(std::move(g));
        }
    for (auto& [key, members] : groups) {
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                CollisionPair p{members[i], members[j], harmonic_polynomial(members[i]), {}};
                if (is_isomorphic(p.first, p.second))
                    p.failures.push_back("pair is isomorphic");
                if (harmonic_polynomial(p.second) != p.polynomial)
                    p.failures.push_back("polynomials differ");
                for (auto& f : index_agreement_battery(p.first, p.second))
                    p.failures.push_back(std::move(f));
                report.pairs.push_back(std::move(p));
            }
    }
    return report;
}

}  // namespace harmpoly

#endif
