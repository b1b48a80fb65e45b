// Command-line entry point: compute parameter reports, enumerate universes,
// dump per-graph parameter tables, verify the theorem catalog, and hunt for
// counterexamples to user-supplied claims.
//
// Exit codes: 0 success / all-pass / claim exhausted, 1 violations or a
// counterexample found, 2 usage or parse errors.  For a fixed invocation the
// bytes written to stdout (or --output) are identical across runs and across
// --jobs settings; progress notes go to stderr.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"

#include "isodom/enumerate.hpp"
#include "isodom/graph.hpp"
#include "isodom/harness.hpp"
#include "isodom/hunt.hpp"
#include "isodom/solvers.hpp"

namespace {

using namespace isodom;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

// stdout unless --output was given.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output path: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

struct ComputeOptions {
    std::string input_path;
    std::string input_format = "graph6";
    std::string family;
    int k = 1;
    std::string format = "text";
    std::string output_path;
};

struct UniverseOptions {
    std::string universe = "connected";
    int n_min = 1;
    int n_max = 6;
    std::string input_path;
    int jobs = 1;
};

struct VerifyOptions {
    UniverseOptions univ;
    std::vector<std::string> theorem_ids;
    std::string output_path;
};

struct SweepOptions {
    UniverseOptions univ;
    std::string format = "csv";
    std::string output_path;
};

struct HuntOptions {
    UniverseOptions univ;
    std::string claim;
    std::string output_path;
};

struct EnumerateOptions {
    UniverseOptions univ;
    std::string output_path;
};

SweepConfig to_sweep_config(const UniverseOptions& u) {
    SweepConfig cfg;
    if (u.universe == "connected")
        cfg.universe = UniverseKind::connected;
    else if (u.universe == "trees")
        cfg.universe = UniverseKind::trees;
    else if (u.universe == "bipartite")
        cfg.universe = UniverseKind::bipartite;
    else if (u.universe == "file")
        cfg.universe = UniverseKind::file;
    else
        throw std::invalid_argument("unknown universe: " + u.universe);
    if (cfg.universe == UniverseKind::file && u.input_path.empty())
        throw std::invalid_argument("--universe file requires --input");
    cfg.n_min = u.n_min;
    cfg.n_max = u.n_max;
    cfg.input_path = u.input_path;
    cfg.parallelism = u.jobs;
    return cfg;
}

void add_universe_flags(CLI::App* cmd, UniverseOptions& u, bool with_file, bool with_jobs) {
    const std::string choices = with_file ? "connected|trees|bipartite|file" : "connected|trees|bipartite";
    cmd->add_option("--universe", u.universe, "graph universe: " + choices)->capture_default_str();
    cmd->add_option("--n-min", u.n_min, "smallest order")->capture_default_str();
    cmd->add_option("--n-max", u.n_max, "largest order")->capture_default_str();
    if (with_file) cmd->add_option("--input,-i", u.input_path, "graph6 file for --universe file");
    if (with_jobs) cmd->add_option("--jobs,-j", u.jobs, "worker threads")->capture_default_str();
}

std::vector<Graph> read_compute_inputs(const ComputeOptions& opt) {
    if (!opt.family.empty()) {
        const auto fam = family_from_name(opt.family);
        if (!fam)
            throw std::invalid_argument("unknown family \"" + opt.family +
                                        "\" (path, cycle, complete, star, complete_bipartite)");
        return {make_named(*fam, opt.k)};
    }
    std::unique_ptr<std::ifstream> file;
    std::istream* in = &std::cin;
    if (!opt.input_path.empty() && opt.input_path != "-") {
        file = std::make_unique<std::ifstream>(opt.input_path);
        if (!*file) throw std::runtime_error("cannot open input path: " + opt.input_path);
        in = file.get();
    }
    if (opt.input_format == "graph6") return read_graph6_stream(*in);
    if (opt.input_format == "edgelist") {
        std::vector<Graph> out;
        out.push_back(parse_edge_list(*in));
        return out;
    }
    throw std::invalid_argument("unknown input format: " + opt.input_format);
}

void write_text_report(std::ostream& os, const Graph& g, const ParameterReport& r) {
    os << "graph " << emit_graph6(g) << ": n=" << r.n << " m=" << r.m << " diam=";
    if (r.diam)
        os << *r.diam;
    else
        os << "inf";
    if (r.has_dominating_vertex) os << " dominating-vertex";
    os << '\n';
    for (auto name : report_field_names()) {
        if (name == "n" || name == "m" || name == "diam") continue;
        os << "  " << name << " = ";
        const Extremal* e = report_extremal(r, name);
        if (e)
            os << e->value << "  witness " << e->witness.to_string();
        else
            os << "undefined";
        os << '\n';
    }
}

int run_compute(const ComputeOptions& opt) {
    const std::vector<Graph> graphs = read_compute_inputs(opt);
    OutputTarget out(opt.output_path);
    std::ostream& os = out.stream();
    if (opt.format == "json") {
        json doc = json::array();
        for (const Graph& g : graphs) doc.push_back(report_json(g, compute_report(g)));
        os << doc.dump(2) << '\n';
    } else if (opt.format == "csv") {
        os << parameter_table_csv_header() << '\n';
        for (const Graph& g : graphs) os << parameter_table_csv_row(g, compute_report(g)) << '\n';
    } else if (opt.format == "text") {
        for (const Graph& g : graphs) write_text_report(os, g, compute_report(g));
    } else {
        throw std::invalid_argument("unknown format: " + opt.format);
    }
    return kExitOk;
}

int run_enumerate(const EnumerateOptions& opt) {
    SweepConfig cfg = to_sweep_config(opt.univ);
    if (cfg.universe == UniverseKind::file)
        throw std::invalid_argument("enumerate works on generated universes only");
    const std::vector<Graph> graphs = load_universe(cfg);
    OutputTarget out(opt.output_path);
    for (const Graph& g : graphs) out.stream() << emit_graph6(g) << '\n';
    return kExitOk;
}

int run_sweep_table(const SweepOptions& opt) {
    const SweepConfig cfg = to_sweep_config(opt.univ);
    const std::vector<Graph> graphs = load_universe(cfg);
    std::vector<ParameterReport> reports(graphs.size());
    parallel_over(graphs.size(), cfg.parallelism,
                  [&](std::size_t i) { reports[i] = compute_report(graphs[i]); });
    OutputTarget out(opt.output_path);
    std::ostream& os = out.stream();
    if (opt.format == "csv") {
        os << parameter_table_csv_header() << '\n';
        for (std::size_t i = 0; i < graphs.size(); ++i)
            os << parameter_table_csv_row(graphs[i], reports[i]) << '\n';
    } else if (opt.format == "json") {
        json doc = json::array();
        for (std::size_t i = 0; i < graphs.size(); ++i) doc.push_back(report_json(graphs[i], reports[i]));
        os << doc.dump(2) << '\n';
    } else {
        throw std::invalid_argument("unknown format: " + opt.format);
    }
    return kExitOk;
}

int run_verify(const VerifyOptions& opt) {
    SweepConfig cfg = to_sweep_config(opt.univ);
    cfg.theorem_ids = opt.theorem_ids;
    for (const auto& id : cfg.theorem_ids)
        if (!is_known_theorem(id)) {
            std::ostringstream known;
            for (const auto& info : theorem_catalog()) known << ' ' << info.id;
            throw std::invalid_argument("unknown theorem id \"" + id + "\"; known:" + known.str());
        }
    const std::vector<TheoremVerdict> verdicts = run_sweep(cfg);
    OutputTarget out(opt.output_path);
    out.stream() << sweep_report_json(cfg, verdicts).dump(2) << '\n';

    bool all_pass = true;
    for (const auto& v : verdicts) {
        std::cerr << (v.pass() ? "pass " : "FAIL ") << v.theorem_id << "  checked=" << v.graphs_checked
                  << " skipped=" << v.graphs_skipped << " violations=" << v.violations.size() << '\n';
        all_pass = all_pass && v.pass();
    }
    return all_pass ? kExitOk : kExitViolation;
}

int run_hunt(const HuntOptions& opt) {
    const Claim claim = Claim::parse(opt.claim);
    const SweepConfig cfg = to_sweep_config(opt.univ);
    const std::vector<Graph> universe = load_universe(cfg);
    const HuntOutcome outcome = hunt_claim(claim, universe);

    OutputTarget out(opt.output_path);
    std::ostream& os = out.stream();
    os << "claim: " << claim.text() << '\n';
    os << "universe: " << universe_label(cfg) << '\n';
    if (outcome.counterexample) {
        const Graph& g = universe[*outcome.counterexample];
        os << "counterexample: " << emit_graph6(g) << '\n';
        write_text_report(os, g, compute_report(g));
        return kExitViolation;
    }
    os << "exhausted: no counterexample (evaluated " << outcome.scanned << " graphs, skipped "
       << outcome.skipped << ")\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solvers and exhaustive verification for domination-type graph parameters"};
    app.require_subcommand(1);

    ComputeOptions compute_opt;
    CLI::App* compute = app.add_subcommand("compute", "parameter reports for input graphs");
    CLI::Option* in_opt =
        compute->add_option("--input,-i", compute_opt.input_path, "graph6 file ('-' or omitted: stdin)");
    compute->add_option("--input-format", compute_opt.input_format, "graph6|edgelist")->capture_default_str();
    CLI::Option* fam_opt = compute->add_option(
        "--family", compute_opt.family, "named family: path, cycle, complete, star, complete_bipartite");
    compute->add_option("--k", compute_opt.k, "family size parameter");
    compute->add_option("--format,-f", compute_opt.format, "text|json|csv")->capture_default_str();
    compute->add_option("--output,-o", compute_opt.output_path, "write here instead of stdout");
    in_opt->excludes(fam_opt);
    fam_opt->excludes(in_opt);

    EnumerateOptions enum_opt;
    CLI::App* enumerate = app.add_subcommand("enumerate", "emit one graph6 line per isomorphism class");
    add_universe_flags(enumerate, enum_opt.univ, false, false);
    enumerate->add_option_function<int>(
        "--n", [&](int n) { enum_opt.univ.n_min = enum_opt.univ.n_max = n; },
        "single order (sets both bounds)");
    enumerate->add_option("--output,-o", enum_opt.output_path, "write here instead of stdout");

    SweepOptions sweep_opt;
    CLI::App* sweep = app.add_subcommand("sweep", "per-graph parameter table over a universe");
    add_universe_flags(sweep, sweep_opt.univ, true, true);
    sweep->add_option("--format,-f", sweep_opt.format, "csv|json")->capture_default_str();
    sweep->add_option("--output,-o", sweep_opt.output_path, "write here instead of stdout");

    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "check the theorem catalog over a universe");
    add_universe_flags(verify, verify_opt.univ, true, true);
    verify->add_option("--theorem,-t", verify_opt.theorem_ids,
                       "theorem id (repeatable; default: all except SELFTEST)");
    verify->add_option("--output,-o", verify_opt.output_path, "write the JSON report here");

    HuntOptions hunt_opt;
    CLI::App* hunt = app.add_subcommand("hunt", "scan a universe for a counterexample to a claim");
    hunt->add_option("claim", hunt_opt.claim, "e.g. \"gamma_t <= i0 + 1\"")->required();
    add_universe_flags(hunt, hunt_opt.univ, true, false);
    hunt->add_option("--output,-o", hunt_opt.output_path, "write here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*compute) return run_compute(compute_opt);
        if (*enumerate) return run_enumerate(enum_opt);
        if (*sweep) return run_sweep_table(sweep_opt);
        if (*verify) return run_verify(verify_opt);
        if (*hunt) return run_hunt(hunt_opt);
    } catch (const Graph6ParseError& e) {
        std::cerr << "graph6 parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
