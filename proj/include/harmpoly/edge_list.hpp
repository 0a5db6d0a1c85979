#ifndef HARMPOLY_EDGE_LIST_HPP
#define HARMPOLY_EDGE_LIST_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace harmpoly {

class EdgeListError : public std::invalid_argument {
  public:
    EdgeListError(const std::string& what, std::size_t line)
        : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

struct LabeledGraph {
    Graph graph;
    /// labels[i] is the input label of vertex i.
    std::vector<std::string> labels;
    std::size_t collapsed_duplicates = 0;
};

/**
 * Text edge list: one "u v" pair per line, '#' comments and blank lines
 * ignored, optional leading "n=<count>" line.
 *
 * If every label is a non-negative integer the labels are ordered
 * numerically; with an explicit count they are used as vertex ids directly
 * and the unused ids become isolated vertices. Otherwise labels are numbered
 * in order of first appearance, and an explicit count pads the graph with
 * isolated vertices.
 */
inline LabeledGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::size_t> declared;
    std::vector<std::pair<std::string, std::string>> pairs;
    std::vector<std::size_t> pair_line;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a))
            continue;
        if (a.rfind("n=", 0) == 0) {
            if (declared || !pairs.empty())
                throw EdgeListError("vertex count must be the first entry", lineno);
            auto digits = a.substr(2);
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
                (ls >> extra))
                throw EdgeListError("malformed vertex count '" + line + "'", lineno);
            declared = std::stoull(digits);
            continue;
        }
        if (!(ls >> b) || (ls >> extra))
            throw EdgeListError("expected two labels, got '" + line + "'", lineno);
        if (a == b)
            throw EdgeListError("loop at '" + a + "'", lineno);
        pairs.emplace_back(a, b);
        pair_line.push_back(lineno);
    }

    auto is_number = [](const std::string& s) {
        return !s.empty() && s.size() < 19 && s.find_first_not_of("0123456789") == std::string::npos;
    };
    bool numeric = std::all_of(pairs.begin(), pairs.end(),
                               [&](const auto& p) { return is_number(p.first) && is_number(p.second); });

    LabeledGraph out;
    std::map<std::string, Vertex> ids;
    if (numeric && declared) {
        for (std::size_t i = 0; i < pairs.size(); ++i)
            for (const auto* s : {&pairs[i].first, &pairs[i].second})
                if (std::stoull(*s) >= *declared)
                    throw EdgeListError("vertex " + *s + " outside 0.." +
                                            std::to_string(*declared == 0 ? 0 : *declared - 1),
                                        pair_line[i]);
        for (std::size_t v = 0; v < *declared; ++v) {
            ids[std::to_string(v)] = static_cast<Vertex>(v);
            out.labels.push_back(std::to_string(v));
        }
        for (auto& p : pairs) {
            p.first = std::to_string(std::stoull(p.first));
            p.second = std::to_string(std::stoull(p.second));
        }
    } else if (numeric) {
        std::vector<unsigned long long> values;
        for (const auto& p : pairs) {
            values.push_back(std::stoull(p.first));
            values.push_back(std::stoull(p.second));
        }
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        for (auto v : values) {
            ids[std::to_string(v)] = static_cast<Vertex>(out.labels.size());
            out.labels.push_back(std::to_string(v));
        }
        for (auto& p : pairs) {
            p.first = std::to_string(std::stoull(p.first));
            p.second = std::to_string(std::stoull(p.second));
        }
    } else {
        for (const auto& p : pairs)
            for (const auto* s : {&p.first, &p.second})
                if (ids.emplace(*s, static_cast<Vertex>(out.labels.size())).second)
                    out.labels.push_back(*s);
        if (declared) {
            if (out.labels.size() > *declared)
                throw EdgeListError(std::to_string(out.labels.size()) + " labels exceed declared n=" +
                                        std::to_string(*declared),
                                    lineno);
            for (std::size_t i = out.labels.size(); i < *declared; ++i)
                out.labels.push_back("_" + std::to_string(i));
        }
    }

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        Vertex u = ids.at(pairs[i].first), v = ids.at(pairs[i].second);
        if (u == v)
            throw EdgeListError("loop at '" + pairs[i].first + "'", pair_line[i]);
        edges.emplace_back(u, v);
    }
    out.graph = Graph::from_edges(out.labels.size(), edges, &out.collapsed_duplicates);
    return out;
}

inline std::string write_edge_list(const Graph& g) {
    std::string out = "n=" + std::to_string(g.order()) + "\n";
    g.for_each_edge([&](Vertex u, Vertex v) { out += std::to_string(u) + " " + std::to_string(v) + "\n"; });
    return out;
}

}  // namespace harmpoly

#endif
