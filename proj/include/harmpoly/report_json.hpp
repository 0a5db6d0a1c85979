#ifndef HARMPOLY_REPORT_JSON_HPP
#define HARMPOLY_REPORT_JSON_HPP

// JSON and plain-text renderings of reports. Exact values are strings
// ("11/6", "240"); the only JSON numbers are counts and the approximate
// values of real-exponent indices, which carry "approx": true.

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "families.hpp"
#include "graph6.hpp"
#include "indices.hpp"
#include "verifier.hpp"

namespace harmpoly {

using Json = nlohmann::ordered_json;

inline Json polynomial_json(const IntPolynomial& p) {
    Json coeffs = Json::object();
    const auto& c = p.coefficients();
    for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j] != 0)
            coeffs[std::to_string(j)] = to_string(c[j]);
    return Json{{"text", to_string(p)}, {"coefficients", coeffs}};
}

inline Json optional_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline Json to_json(const IndexReport& r) {
    const auto& s = r.poly_structure;
    Json chi = Json::array();
    for (const auto& c : r.chi) {
        if (const auto* exact = std::get_if<Rational>(&c.value))
            chi.push_back({{"alpha", c.alpha.text}, {"value", to_string(*exact)}});
        else
            chi.push_back({{"alpha", c.alpha.text}, {"value", std::get<double>(c.value)}, {"approx", true}});
    }
    return Json{
        {"n", r.n},
        {"m", r.m},
        {"max_degree", optional_json(r.max_degree)},
        {"min_degree", optional_json(r.min_degree)},
        {"polynomial", polynomial_json(r.polynomial)},
        {"structure",
         {{"degree", optional_json(s.degree)},
          {"min_degree", optional_json(s.min_degree)},
          {"nonzero_count", s.nonzero_count},
          {"leading", s.leading ? Json(to_string(*s.leading)) : Json(nullptr)},
          {"trailing", s.trailing ? Json(to_string(*s.trailing)) : Json(nullptr)},
          {"parity", to_string(parity(r.polynomial))},
          {"zero_is_only_root", origin_is_only_root(r.polynomial)}}},
        {"indices",
         {{"harmonic", to_string(r.harmonic)},
          {"first_zagreb", to_string(r.m1)},
          {"second_zagreb", to_string(r.m2)},
          {"forgotten", to_string(r.forgotten)},
          {"pi1_star", to_string(r.pi1_star)},
          {"chi", chi}}},
    };
}

inline std::string to_text(const IndexReport& r) {
    const auto& s = r.poly_structure;
    auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
    std::ostringstream out;
    out << "n = " << r.n << ", m = " << r.m << ", Delta = " << opt(r.max_degree) << ", delta = " << opt(r.min_degree)
        << "\n";
    out << "H(G,x) = " << to_string(r.polynomial) << "\n";
    out << "Deg = " << opt(s.degree) << ", Deg_min = " << opt(s.min_degree) << ", K = " << s.nonzero_count
        << ", parity = " << to_string(parity(r.polynomial)) << "\n";
    out << "H = " << to_string(r.harmonic) << "\n";
    out << "M1 = " << r.m1 << ", M2 = " << r.m2 << ", F = " << r.forgotten << "\n";
    out << "Pi1* = " << r.pi1_star << "\n";
    for (const auto& c : r.chi) {
        out << "chi_" << c.alpha.text << " = ";
        if (const auto* exact = std::get_if<Rational>(&c.value))
            out << to_string(*exact) << "\n";
        else
            out << format_double(std::get<double>(c.value)) << " (approx)\n";
    }
    return out.str();
}

inline Json to_json(const VerificationReport& r) {
    Json theorems = Json::array();
    for (const auto& t : r.tallies) {
        Json events = Json::object();
        for (const auto& [k, v] : t.events)
            events[k] = v;
        Json witnesses = Json::array();
        for (const auto& w : t.witnesses)
            witnesses.push_back({{"index", w.index}, {"graph6", w.graph6}, {"detail", w.detail}});
        theorems.push_back({{"id", t.id},
                            {"pass", t.pass},
                            {"fail", t.fail},
                            {"not_applicable", t.not_applicable},
                            {"events", events},
                            {"witnesses", witnesses}});
    }
    return Json{{"corpus",
                 {{"n_min", r.corpus.n_min},
                  {"n_max", r.corpus.n_max},
                  {"connected_only", r.corpus.connected_only},
                  {"count", r.corpus.count}}},
                {"theorems", theorems},
                {"total_fail", r.total_fail()}};
}

inline std::string to_text(const VerificationReport& r) {
    std::ostringstream out;
    out << "corpus: n = " << r.corpus.n_min << ".." << r.corpus.n_max
        << (r.corpus.connected_only ? ", connected" : "") << ", " << r.corpus.count << " labelled graphs\n";
    char line[160];
    std::snprintf(line, sizeof line, "%-18s %10s %10s %10s\n", "theorem", "pass", "fail", "n/a");
    out << line;
    for (const auto& t : r.tallies) {
        std::snprintf(line, sizeof line, "%-18s %10llu %10llu %10llu\n", t.id.c_str(),
                      static_cast<unsigned long long>(t.pass), static_cast<unsigned long long>(t.fail),
                      static_cast<unsigned long long>(t.not_applicable));
        out << line;
        for (const auto& [k, v] : t.events)
            out << "    " << k << ": " << v << "\n";
        for (const auto& w : t.witnesses)
            out << "    FAIL #" << w.index << " " << w.graph6 << ": " << w.detail << "\n";
    }
    std::snprintf(line, sizeof line, "total failures: %llu, workers: %zu, elapsed: %.3f s\n",
                  static_cast<unsigned long long>(r.total_fail()), r.workers, r.elapsed_seconds);
    out << line;
    return out.str();
}

inline Json to_json(const CollisionReport& r) {
    Json pairs = Json::array();
    for (const auto& p : r.pairs) {
        pairs.push_back({{"first", write_graph6(p.first)},
                         {"second", write_graph6(p.second)},
                         {"first_connected", is_connected(p.first)},
                         {"second_connected", is_connected(p.second)},
                         {"polynomial", polynomial_json(p.polynomial)},
                         {"agrees", p.agrees()},
                         {"failures", p.failures}});
    }
    return Json{{"n_max", r.n_max},
                {"classes_examined", r.classes_examined},
                {"pair_count", r.pairs.size()},
                {"failing_pairs", r.failing_pairs()},
                {"pairs", pairs}};
}

inline std::string to_text(const CollisionReport& r) {
    std::ostringstream out;
    out << r.pairs.size() << " colliding pairs among " << r.classes_examined << " classes (n <= " << r.n_max
        << ")\n";
    for (const auto& p : r.pairs) {
        out << write_graph6(p.first) << " " << write_graph6(p.second) << "  H = " << to_string(p.polynomial)
            << (p.agrees() ? "  ok" : "  MISMATCH") << "\n";
        for (const auto& f : p.failures)
            out << "    " << f << "\n";
    }
    return out.str();
}

struct FamilyComparison {
    FamilySpec spec;
    Graph graph;
    IntPolynomial computed;
    ClosedForm closed_form;

    /// True when a closed form exists and matches, or when only its
    /// coefficient count and exponent support are known and both match.
    bool matches() const {
        if (closed_form.polynomial)
            return *closed_form.polynomial == computed;
        if (closed_form.nonzero_count && *closed_form.nonzero_count != computed.nonzero_count())
            return false;
        const auto& c = computed.coefficients();
        for (std::size_t j = 0; j < c.size(); ++j)
            if (c[j] != 0 && std::find(closed_form.exponent_support.begin(), closed_form.exponent_support.end(), j) ==
                                 closed_form.exponent_support.end())
                return false;
        return true;
    }
};

inline FamilyComparison compare_family(const FamilySpec& spec) {
    FamilyComparison c{spec, generate(spec), {}, closed_form_polynomial(spec)};
    c.computed = harmonic_polynomial(c.graph);
    return c;
}

inline Json to_json(const FamilyComparison& c) {
    Json closed = Json::object();
    closed["formula"] = c.closed_form.formula;
    closed["polynomial"] = c.closed_form.polynomial ? polynomial_json(*c.closed_form.polynomial) : Json(nullptr);
    closed["nonzero_count"] = c.closed_form.nonzero_count ? Json(*c.closed_form.nonzero_count) : Json(nullptr);
    closed["exponent_support"] = c.closed_form.exponent_support;
    return Json{{"family", to_string(c.spec)},
                {"n", c.graph.order()},
                {"m", c.graph.size()},
                {"computed", polynomial_json(c.computed)},
                {"closed_form", closed},
                {"match", c.matches()}};
}

inline std::string to_text(const FamilyComparison& c) {
    std::ostringstream out;
    out << to_string(c.spec) << ": n = " << c.graph.order() << ", m = " << c.graph.size() << "\n";
    out << "computed    H(G,x) = " << to_string(c.computed) << "\n";
    if (c.closed_form.polynomial)
        out << "closed form H(G,x) = " << to_string(*c.closed_form.polynomial) << "  [" << c.closed_form.formula
            << "]\n";
    else
        out << "closed form: " << c.closed_form.formula << "\n";
    out << (c.matches() ? "match" : "MISMATCH") << "\n";
    return out.str();
}

}  // namespace harmpoly

#endif
