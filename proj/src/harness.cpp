#include "isodom/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <thread>

#include "isodom/enumerate.hpp"
#include "isodom/structure.hpp"

namespace isodom {

namespace {

// Everything a theorem check may want about one graph, computed once.
struct GraphFacts {
    const Graph* g = nullptr;
    std::string g6;
    ParameterReport report;
    bool connected = false;
    bool bipartite = false;
    bool tree = false;
};

GraphFacts make_facts(const Graph& g) {
    GraphFacts f;
    f.g = &g;
    f.g6 = emit_graph6(g);
    f.report = compute_report(g);
    f.connected = is_connected(g);
    f.bipartite = is_bipartite(g);
    f.tree = is_tree(g);
    return f;
}

json witness_json(VertexSet s) { return json(s.to_vector()); }

json chain_diagnostic(const GraphFacts& f, std::initializer_list<std::string_view> names) {
    json d;
    for (auto name : names) {
        const auto v = report_value(f.report, name);
        d[std::string(name)] = v ? json(*v) : json(nullptr);
    }
    return d;
}

// --- per-theorem checks ------------------------------------------------------
//
// Each check assumes `applicable` was already granted by its filter.

GraphVerdict check_chain_t11(const GraphFacts& f) {
    GraphVerdict v;
    v.applicable = true;
    const int gamma = f.report.gamma.value;
    const int ir = f.report.ir.value;
    v.pass = gamma <= 2 * ir && ir <= gamma && gamma <= 2 * ir - 1;
    v.equality = gamma == 2 * ir - 1;
    if (!v.pass) v.diagnostic = chain_diagnostic(f, {"gamma", "ir"});
    return v;
}

GraphVerdict check_chain_t12(const GraphFacts& f) {
    GraphVerdict v;
    v.applicable = true;
    const auto& r = f.report;
    v.pass = r.ir.value <= r.gamma.value && r.gamma.value <= r.ind_dom.value &&
             r.ind_dom.value <= r.alpha.value && r.alpha.value <= r.upper_gamma.value &&
             r.upper_gamma.value <= r.IR.value;
    if (!v.pass) v.diagnostic = chain_diagnostic(f, {"ir", "gamma", "ind_dom", "alpha", "upper_gamma", "IR"});
    return v;
}

GraphVerdict check_bipartite_t13(const GraphFacts& f) {
    GraphVerdict v;
    v.applicable = f.bipartite;
    if (!v.applicable) return v;
    const auto& r = f.report;
    v.pass = r.ir.value <= r.gamma.value && r.gamma.value <= r.ind_dom.value &&
             r.ind_dom.value <= r.alpha.value && r.alpha.value == r.upper_gamma.value &&
             r.upper_gamma.value == r.IR.value;
    if (!v.pass) v.diagnostic = chain_diagnostic(f, {"ir", "gamma", "ind_dom", "alpha", "upper_gamma", "IR"});
    return v;
}

GraphVerdict check_bound_t21(const GraphFacts& f) {
    GraphVerdict v;
    v.applicable = f.report.gamma_t.has_value();
    if (!v.applicable) return v;
    const int gt = f.report.gamma_t->value;
    const int i0 = f.report.i0.value;
    v.pass = gt <= i0 + 1;
    v.equality = gt == i0 + 1;
    if (!v.pass) {
        v.diagnostic = chain_diagnostic(f, {"gamma_t", "i0"});
        v.diagnostic["i0_witness"] = witness_json(f.report.i0.witness);
    }
    return v;
}

// Maximality characterization vs the direct one-vertex-extension oracle,
// over every isolate subset.
GraphVerdict check_maximality_t22(const GraphFacts& f) {
    GraphVerdict v;
    v.applicable = true;
    const Graph& g = *f.g;
    const std::uint64_t total = std::uint64_t{1} << g.order();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        const VertexSet s(bits);
        if (!is_isolate_set(g, s)) continue;
        bool extendable = false;
        for (int u : g.vertices() - s)
            if (is_isolate_set(g, s.with(u))) {
                extendable = true;
                break;
            }
        if (is_maximal_isolate_set(g, s) != !extendable) {
            v.pass = false;
            v.diagnostic["subset"] = witness_json(s);
            v.diagnostic["characterization"] = is_maximal_isolate_set(g, s);
            v.diagnostic["one_vertex_extension_maximal"] = !extendable;
            return v;
        }
    }
    return v;
}

GraphVerdict check_diameter_t23(const GraphFacts& f) {
    GraphVerdict v;
    v.applicable = f.connected && f.report.gamma_t.has_value();
    if (!v.applicable) return v;
    const bool at_bound = f.report.gamma_t->value == f.report.i0.value + 1;
    v.equality = at_bound;
    v.pass = !at_bound || (f.report.diam && *f.report.diam <= 2);
    if (!v.pass) v.diagnostic = chain_diagnostic(f, {"gamma_t", "i0", "diam"});
    return v;
}

GraphVerdict check_dominating_vertex_t24(const GraphFacts& f) {
    GraphVerdict v;
    v.applicable = f.connected && f.report.gamma_t.has_value();
    if (!v.applicable) return v;
    const bool at_bound = f.report.gamma_t->value == f.report.i0.value + 1;
    v.equality = at_bound;
    v.pass = !at_bound || f.report.has_dominating_vertex;
    if (!v.pass) v.diagnostic = chain_diagnostic(f, {"gamma_t", "i0"});
    return v;
}

GraphVerdict check_biconditional_c25(const GraphFacts& f) {
    GraphVerdict v;
    v.applicable = f.connected && f.report.gamma_t.has_value();
    if (!v.applicable) return v;
    const bool at_bound = f.report.gamma_t->value == f.report.i0.value + 1;
    v.equality = at_bound;
    v.pass = at_bound == f.report.has_dominating_vertex;
    if (!v.pass) {
        v.diagnostic = chain_diagnostic(f, {"gamma_t", "i0"});
        v.diagnostic["has_dominating_vertex"] = f.report.has_dominating_vertex;
    }
    return v;
}

// Every maximal isolate set S (proper subset of V) plus any outside vertex is
// a total dominating set.
GraphVerdict check_extension_p2(const GraphFacts& f) {
    GraphVerdict v;
    v.applicable = f.connected && f.g->order() >= 2;
    if (!v.applicable) return v;
    const Graph& g = *f.g;
    const std::uint64_t total = std::uint64_t{1} << g.order();
    for (std::uint64_t bits = 0; bits + 1 < total; ++bits) {  // skips s = V
        const VertexSet s(bits);
        if (!is_isolate_set(g, s) || !is_maximal_isolate_set(g, s)) continue;
        for (int u : g.vertices() - s) {
            if (!is_total_dominating(g, s.with(u))) {
                v.pass = false;
                v.diagnostic["maximal_isolate_set"] = witness_json(s);
                v.diagnostic["added_vertex"] = u;
                return v;
            }
        }
    }
    return v;
}

GraphVerdict check_tree_gamma_t31(const GraphFacts& f) {
    GraphVerdict v;
    v.applicable = f.tree && f.g->order() >= 3;
    if (!v.applicable) return v;
    const TreeGammaClassification cls = classify_tree_gamma(*f.g);
    const bool equality = cls.gamma == cls.n_minus_leaves;
    v.equality = equality;
    const VertexSet leaves = leaves_and_supports(*f.g).leaves;
    const bool leafless_ok = !cls.leafless_gamma_set.intersects(leaves) &&
                             cls.leafless_gamma_set.size() == cls.gamma &&
                             is_dominating(*f.g, cls.leafless_gamma_set);
    v.pass = (equality == cls.characterization_holds) && cls.gamma <= cls.n_minus_leaves && leafless_ok;
    if (!v.pass) {
        v.diagnostic["gamma"] = cls.gamma;
        v.diagnostic["n_minus_leaves"] = cls.n_minus_leaves;
        v.diagnostic["all_leaf_or_support"] = cls.characterization_holds;
        v.diagnostic["leafless_gamma_set"] = witness_json(cls.leafless_gamma_set);
    }
    return v;
}

GraphVerdict check_diameter_bound_t32(const GraphFacts& f) {
    GraphVerdict v;
    v.applicable = f.connected && f.g->order() >= 2;
    if (!v.applicable) return v;
    const int gt = f.report.gamma_t->value;  // connected with n >= 2: defined
    const int d = *f.report.diam;
    v.pass = 2 * gt >= d + 1;
    v.equality = 2 * gt == d + 1;
    if (!v.pass) v.diagnostic = chain_diagnostic(f, {"gamma_t", "diam"});
    return v;
}

GraphVerdict check_spanning_tree_l33(const GraphFacts& f) {
    GraphVerdict v;
    v.applicable = f.connected && f.report.gamma_t.has_value();
    if (!v.applicable) return v;
    const Graph& g = *f.g;
    const int gt = f.report.gamma_t->value;
    const std::uint64_t total = std::uint64_t{1} << g.order();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        const VertexSet d(bits);
        if (d.size() != gt || !is_total_dominating(g, d)) continue;
        const SpanningTreeCertificate cert = build_spanning_tree_preserving(g, d);
        const auto tree_gt = min_in_family(cert.tree, [&](VertexSet s) { return is_total_dominating(cert.tree, s); });
        const bool ok = certificate_valid(g, cert) && tree_gt && tree_gt->value == gt;
        if (!ok) {
            v.pass = false;
            v.diagnostic["dset"] = witness_json(d);
            v.diagnostic["components_before"] = cert.components_before;
            v.diagnostic["components_after"] = cert.components_after;
            v.diagnostic["tree_gamma_t"] = tree_gt ? json(tree_gt->value) : json(nullptr);
            return v;
        }
    }
    return v;
}

GraphVerdict check_spanning_caterpillar_t34(const GraphFacts& f) {
    GraphVerdict v;
    v.applicable = f.connected && f.g->order() >= 2;
    if (!v.applicable) return v;
    const int gt = f.report.gamma_t->value;
    const int d = *f.report.diam;
    if (2 * gt != d + 1) return v;  // hypothesis not attained; vacuous pass
    v.equality = true;
    const Graph& g = *f.g;
    const auto t = find_spanning_caterpillar_same_diameter(g);
    bool ok = t.has_value();
    if (ok) {
        ok = t->order() == g.order() && is_tree(*t) && caterpillar_code(*t).has_value() &&
             diameter(*t) == std::optional<int>(d);
        for (auto [a, b] : t->edges())
            if (!g.adjacent(a, b)) ok = false;
    }
    v.pass = ok;
    if (!v.pass) {
        v.diagnostic = chain_diagnostic(f, {"gamma_t", "diam"});
        v.diagnostic["caterpillar_found"] = t.has_value();
    }
    return v;
}

// Deliberately false bound; keeps the capture machinery honest.
GraphVerdict check_selftest(const GraphFacts& f) {
    GraphVerdict v;
    v.applicable = f.report.gamma_t.has_value();
    if (!v.applicable) return v;
    v.pass = f.report.gamma_t->value <= f.report.i0.value;
    if (!v.pass) v.diagnostic = chain_diagnostic(f, {"gamma_t", "i0"});
    return v;
}

using CheckFn = GraphVerdict (*)(const GraphFacts&);

struct TheoremEntry {
    TheoremInfo info;
    CheckFn check;
    bool equality_meaningful;
};

const std::vector<TheoremEntry>& entries() {
    static const std::vector<TheoremEntry> table = {
        {{"T1.1", "gamma/2 <= ir <= gamma <= 2*ir - 1", true}, check_chain_t11, false},
        {{"T1.2", "ir <= gamma <= i <= alpha <= Gamma <= IR", true}, check_chain_t12, false},
        {{"T1.3", "bipartite: ir <= gamma <= i <= alpha = Gamma = IR", true}, check_bipartite_t13, false},
        {{"T2.1", "gamma_t <= i0 + 1", true}, check_bound_t21, true},
        {{"T2.2", "isolate-set maximality iff every outside vertex is adjacent to all isolates", true},
         check_maximality_t22, false},
        {{"T2.3", "connected with gamma_t = i0 + 1 implies diam <= 2", true}, check_diameter_t23, true},
        {{"T2.4", "connected with gamma_t = i0 + 1 has a dominating vertex", true},
         check_dominating_vertex_t24, true},
        {{"C2.5", "connected: gamma_t = i0 + 1 iff a dominating vertex exists", true},
         check_biconditional_c25, true},
        {{"P2", "maximal isolate set plus any outside vertex is total dominating", true},
         check_extension_p2, false},
        {{"T3.1", "tree (n >= 3): gamma = n - l iff every vertex is a leaf or a support", true},
         check_tree_gamma_t31, true},
        {{"T3.2", "connected (n >= 2): 2*gamma_t >= diam + 1", true}, check_diameter_bound_t32, true},
        {{"L3.3", "minimum total dominating sets extend to component-preserving spanning trees", true},
         check_spanning_tree_l33, false},
        {{"T3.4", "2*gamma_t = diam + 1 implies a spanning caterpillar of equal diameter", true},
         check_spanning_caterpillar_t34, true},
        {{"SELFTEST", "deliberately false bound gamma_t <= i0 (harness self-check)", false},
         check_selftest, false},
    };
    return table;
}

const TheoremEntry& entry_for(std::string_view id) {
    for (const auto& e : entries())
        if (e.info.id == id) return e;
    throw std::invalid_argument("unknown theorem id: " + std::string(id));
}

}  // namespace

void parallel_over(std::size_t count, int width, const std::function<void(std::size_t)>& body) {
    if (width <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count || failed.load()) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const int threads = std::min<int>(width, static_cast<int>(count));
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

const std::vector<TheoremInfo>& theorem_catalog() {
    static const std::vector<TheoremInfo> infos = [] {
        std::vector<TheoremInfo> out;
        for (const auto& e : entries()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

bool is_known_theorem(std::string_view id) {
    for (const auto& e : entries())
        if (e.info.id == id) return true;
    return false;
}

GraphVerdict check_theorem(std::string_view theorem_id, const Graph& g) {
    const TheoremEntry& e = entry_for(theorem_id);
    const GraphFacts facts = make_facts(g);
    return e.check(facts);
}

std::string universe_label(const SweepConfig& cfg) {
    switch (cfg.universe) {
        case UniverseKind::connected:
            return "connected, n=" + std::to_string(cfg.n_min) + ".." + std::to_string(cfg.n_max);
        case UniverseKind::trees:
            return "trees, n=" + std::to_string(cfg.n_min) + ".." + std::to_string(cfg.n_max);
        case UniverseKind::bipartite:
            return "bipartite connected, n=" + std::to_string(cfg.n_min) + ".." + std::to_string(cfg.n_max);
        case UniverseKind::file:
            return "file:" + cfg.input_path;
    }
    return "?";
}

std::vector<Graph> load_universe(const SweepConfig& cfg) {
    std::vector<Graph> out;
    switch (cfg.universe) {
        case UniverseKind::connected:
        case UniverseKind::bipartite: {
            if (cfg.n_min < 1 || cfg.n_max < cfg.n_min || cfg.n_max > kMaxConnectedEnumerationOrder)
                throw std::invalid_argument("connected/bipartite universes support 1 <= n <= " +
                                            std::to_string(kMaxConnectedEnumerationOrder));
            for (int n = cfg.n_min; n <= cfg.n_max; ++n)
                for (Graph& g : enumerate_connected_graphs(n))
                    if (cfg.universe == UniverseKind::connected || is_bipartite(g))
                        out.push_back(std::move(g));
            return out;
        }
        case UniverseKind::trees: {
            if (cfg.n_min < 1 || cfg.n_max < cfg.n_min || cfg.n_max > kMaxTreeEnumerationOrder)
                throw std::invalid_argument("tree universe supports 1 <= n <= " +
                                            std::to_string(kMaxTreeEnumerationOrder));
            for (int n = cfg.n_min; n <= cfg.n_max; ++n)
                for (Graph& g : enumerate_trees(n)) out.push_back(std::move(g));
            return out;
        }
        case UniverseKind::file: {
            std::ifstream in(cfg.input_path);
            if (!in) throw std::runtime_error("cannot open universe file: " + cfg.input_path);
            return read_graph6_stream(in);
        }
    }
    throw std::logic_error("unhandled universe kind");
}

std::vector<TheoremVerdict> run_sweep(const SweepConfig& cfg) {
    return run_sweep(cfg, load_universe(cfg));
}

std::vector<TheoremVerdict> run_sweep(const SweepConfig& cfg, const std::vector<Graph>& graphs) {
    std::vector<const TheoremEntry*> selected;
    if (cfg.theorem_ids.empty()) {
        for (const auto& e : entries())
            if (e.info.in_default_set) selected.push_back(&e);
    } else {
        for (const auto& id : cfg.theorem_ids) selected.push_back(&entry_for(id));
    }

    // The report dominates the cost, so facts are shared across theorems.
    std::vector<GraphFacts> facts(graphs.size());
    parallel_over(graphs.size(), cfg.parallelism,
                 [&](std::size_t i) { facts[i] = make_facts(graphs[i]); });

    const std::string label = universe_label(cfg);
    std::vector<TheoremVerdict> out;
    out.reserve(selected.size());
    for (const TheoremEntry* e : selected) {
        const auto start = std::chrono::steady_clock::now();
        std::vector<GraphVerdict> slots(graphs.size());
        parallel_over(graphs.size(), cfg.parallelism, [&](std::size_t i) { slots[i] = e->check(facts[i]); });

        TheoremVerdict verdict;
        verdict.theorem_id = e->info.id;
        verdict.universe = label;
        if (e->equality_meaningful) verdict.equality_attainers = 0;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            const GraphVerdict& gv = slots[i];
            if (!gv.applicable) {
                ++verdict.graphs_skipped;
                continue;
            }
            ++verdict.graphs_checked;
            if (gv.equality && verdict.equality_attainers) ++*verdict.equality_attainers;
            if (!gv.pass) {
                // Replay the capture from its graph6 form before recording it.
                const Graph replay = parse_graph6(facts[i].g6);
                if (check_theorem(e->info.id, replay).pass)
                    throw std::logic_error("violation capture for " + e->info.id +
                                           " did not reproduce from " + facts[i].g6);
                verdict.violations.push_back(Violation{facts[i].g6, gv.diagnostic});
            }
        }
        std::sort(verdict.violations.begin(), verdict.violations.end(),
                  [](const Violation& a, const Violation& b) { return a.graph6 < b.graph6; });
        verdict.elapsed = std::chrono::steady_clock::now() - start;
        out.push_back(std::move(verdict));
    }
    return out;
}

json sweep_report_json(const SweepConfig& cfg, const std::vector<TheoremVerdict>& verdicts) {
    json doc;
    doc["universe"] = universe_label(cfg);
    bool all_pass = true;
    json list = json::array();
    for (const auto& v : verdicts) {
        json jv;
        jv["theorem_id"] = v.theorem_id;
        jv["universe"] = v.universe;
        jv["graphs_checked"] = v.graphs_checked;
        jv["graphs_skipped"] = v.graphs_skipped;
        if (v.equality_attainers) jv["equality_attainers"] = *v.equality_attainers;
        json viols = json::array();
        for (const auto& violation : v.violations) {
            json jviol;
            jviol["graph6"] = violation.graph6;
            jviol["diagnostic"] = violation.diagnostic;
            viols.push_back(std::move(jviol));
        }
        jv["violations"] = std::move(viols);
        jv["pass"] = v.pass();
        all_pass = all_pass && v.pass();
        list.push_back(std::move(jv));
    }
    doc["verdicts"] = std::move(list);
    doc["all_pass"] = all_pass;
    return doc;
}

json report_json(const Graph& g, const ParameterReport& r) {
    json doc;
    doc["graph6"] = emit_graph6(g);
    doc["n"] = r.n;
    doc["m"] = r.m;
    doc["diam"] = r.diam ? json(*r.diam) : json(nullptr);
    doc["has_dominating_vertex"] = r.has_dominating_vertex;
    json params;
    auto put = [&](std::string_view name, const Extremal& e) {
        json p;
        p["value"] = e.value;
        p["witness"] = witness_json(e.witness);
        params[std::string(name)] = std::move(p);
    };
    put("gamma", r.gamma);
    put("upper_gamma", r.upper_gamma);
    put("ind_dom", r.ind_dom);
    put("alpha", r.alpha);
    if (r.gamma_t)
        put("gamma_t", *r.gamma_t);
    else
        params["gamma_t"] = nullptr;
    put("gamma_g", r.gamma_g);
    put("ir", r.ir);
    put("IR", r.IR);
    put("i0", r.i0);
    put("I0", r.I0);
    put("gamma0", r.gamma0);
    put("upper_gamma0", r.upper_gamma0);
    put("ir0", r.ir0);
    put("IR0", r.IR0);
    doc["parameters"] = std::move(params);
    return doc;
}

std::string parameter_table_csv_header() {
    std::string out = "graph6";
    for (auto name : report_field_names()) {
        out += ',';
        out += name;
    }
    return out;
}

std::string parameter_table_csv_row(const Graph& g, const ParameterReport& r) {
    std::string out = emit_graph6(g);
    for (auto name : report_field_names()) {
        out += ',';
        if (name == "diam" && !r.diam) {
            out += "inf";
            continue;
        }
        const auto v = report_value(r, name);
        if (v) out += std::to_string(*v);
        // undefined gamma_t stays an empty field
    }
    return out;
}

}  // namespace isodom
