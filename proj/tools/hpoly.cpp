// hpoly: harmonic polynomials and degree-based indices from the command line.
//
// Exit status: 0 success, 1 theorem failure / closed-form mismatch /
// invariant violation, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "harmpoly/harmpoly.hpp"

namespace {

using namespace harmpoly;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t default_workers() {
    if (const char* env = std::getenv("HP_WORKERS")) {
        try {
            long v = std::stol(env);
            if (v >= 1)
                return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
        throw UsageError(std::string("HP_WORKERS must be a positive integer, got '") + env + "'");
    }
    return 1;
}

void write_json(const Json& j, const std::string& path) {
    if (path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw UsageError("cannot write " + path);
    out << j.dump(2) << "\n";
}

struct ComputeArgs {
    std::string input = "-";
    std::string format = "g6";
    std::string report = "json";
    std::vector<std::string> alphas;
};

void emit_report(const ComputeArgs& a, const Graph& g, const std::vector<Exponent>& alphas, Json extra = {}) {
    IndexReport r = index_report(g, alphas);
    if (a.report == "json") {
        Json j = to_json(r);
        for (auto& [k, v] : extra.items())
            j[k] = v;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << to_text(r) << "\n";
    }
}

int run_compute(const ComputeArgs& a) {
    std::vector<Exponent> alphas;
    for (const auto& s : a.alphas) {
        try {
            alphas.push_back(parse_exponent(s));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    std::ifstream file;
    if (a.input != "-") {
        file.open(a.input, std::ios::binary);
        if (!file)
            throw UsageError("cannot open " + a.input);
    }
    std::istream& in = a.input == "-" ? std::cin : file;

    if (a.format == "edgelist") {
        std::stringstream buf;
        buf << in.rdbuf();
        LabeledGraph lg;
        try {
            lg = parse_edge_list(buf.str());
        } catch (const EdgeListError& e) {
            throw UsageError(e.what());
        }
        if (lg.collapsed_duplicates)
            std::cerr << "warning: collapsed " << lg.collapsed_duplicates << " duplicate edge(s)\n";
        emit_report(a, lg.graph, alphas, Json{{"labels", lg.labels}});
        return exit_ok;
    }

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        Graph g;
        try {
            g = a.format == "s6" ? parse_sparse6(line) : parse_graph6(line);
        } catch (const Graph6Error& e) {
            throw UsageError("line " + std::to_string(lineno) + ": " + e.what());
        }
        emit_report(a, g, alphas);
    }
    return exit_ok;
}

struct GenerateArgs {
    std::string family;
    std::string emit = "g6";
    bool report = false;
};

int run_generate(const GenerateArgs& a) {
    FamilySpec spec;
    try {
        spec = parse_family_spec(a.family);
    } catch (const FamilyError& e) {
        throw UsageError(e.what());
    }
    FamilyComparison c = compare_family(spec);
    if (a.emit == "edgelist")
        std::cout << write_edge_list(c.graph);
    else
        std::cout << write_graph6(c.graph) << "\n";
    if (a.report)
        std::cout << to_text(c);
    return c.matches() ? exit_ok : exit_failure;
}

struct VerifyArgs {
    std::size_t n_max = 0;
    bool connected = false;
    std::string theorems = "all";
    std::size_t workers = 0;
    std::string json;
    bool allow_large = false;
};

int run_verify(const VerifyArgs& a) {
    VerifyOptions opt;
    opt.n_max = a.n_max;
    opt.connected_only = a.connected;
    opt.allow_large = a.allow_large;
    opt.workers = a.workers ? a.workers : default_workers();
    try {
        opt.theorems = resolve_theorems(a.theorems);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    VerificationReport r;
    try {
        r = verify_corpus(opt);
    } catch (const EnumerationLimitError& e) {
        throw UsageError(e.what());
    }
    std::cout << to_text(r);
    if (!a.json.empty())
        write_json(to_json(r), a.json);
    return r.total_fail() == 0 ? exit_ok : exit_failure;
}

struct MineArgs {
    std::size_t n_max = 0;
    std::string json;
    bool allow_large = false;
};

int run_mine(const MineArgs& a) {
    CollisionReport r;
    try {
        r = mine_collisions(a.n_max, a.allow_large);
    } catch (const EnumerationLimitError& e) {
        throw UsageError(e.what());
    }
    std::cout << to_text(r);
    if (!a.json.empty())
        write_json(to_json(r), a.json);
    return r.failing_pairs() == 0 ? exit_ok : exit_failure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Harmonic polynomials of graphs: indices, families, theorem checks"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "Polynomial, structure and indices for each input graph");
    c->add_option("--input", compute.input, "File path, or - for stdin")->capture_default_str();
    c->add_option("--format", compute.format, "Input format")->check(CLI::IsMember({"g6", "s6", "edgelist"}))
        ->capture_default_str();
    c->add_option("--report", compute.report, "Output format")->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    c->add_option("--alpha", compute.alphas, "Exponents for chi_alpha, e.g. -1,1/2,2")->delimiter(',');

    GenerateArgs generate;
    auto* g = app.add_subcommand("generate", "Build a family member and compare with its closed form");
    g->add_option("--family", generate.family, "e.g. wheel:6, kbip:2,3, trtree:5")->required();
    g->add_option("--emit", generate.emit, "Graph output format")->check(CLI::IsMember({"g6", "edgelist"}))
        ->capture_default_str();
    g->add_flag("--report", generate.report, "Print the closed-form comparison");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Run theorem checks over all labelled graphs up to nmax vertices");
    v->add_option("--nmax", verify.n_max, "Largest order enumerated")->required()->check(CLI::Range(1, 8));
    v->add_flag("--connected", verify.connected, "Connected graphs only");
    v->add_option("--theorems", verify.theorems, "all, or a comma-separated list of ids")->capture_default_str();
    v->add_option("--workers", verify.workers, "Worker threads (default: HP_WORKERS or 1)")
        ->check(CLI::PositiveNumber);
    v->add_option("--json", verify.json, "Write the JSON report to this path (- for stdout)");
    v->add_flag("--allow-large", verify.allow_large, "Permit nmax = 8");

    MineArgs mine;
    auto* mc = app.add_subcommand("mine-collisions", "Non-isomorphic graphs sharing a harmonic polynomial");
    mc->add_option("--nmax", mine.n_max, "Largest order examined")->required()->check(CLI::Range(2, 8));
    mc->add_option("--json", mine.json, "Write the JSON report to this path (- for stdout)");
    mc->add_flag("--allow-large", mine.allow_large, "Permit nmax = 8");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*c)
            return run_compute(compute);
        if (*g)
            return run_generate(generate);
        if (*v)
            return run_verify(verify);
        return run_mine(mine);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return exit_failure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }
}
