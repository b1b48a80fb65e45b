#pragma once

// Theorem-by-theorem verification sweeps over enumerated graph universes,
// with counterexample capture and machine-readable reports.  Verdicts are
// reproducible bit-for-bit across runs and parallelism widths: work is
// claimed from a shared index, results land in per-graph slots, and the
// fold over slots is sequential.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "isodom/graph.hpp"
#include "isodom/solvers.hpp"

namespace isodom {

using json = nlohmann::ordered_json;

struct TheoremInfo {
    std::string id;
    std::string statement;
    bool in_default_set = true;  // SELFTEST is opt-in
};

const std::vector<TheoremInfo>& theorem_catalog();
bool is_known_theorem(std::string_view id);

// Outcome of one theorem check on one graph.  applicable=false means the
// graph falls outside the hypothesis class (filtered, not failed).
struct GraphVerdict {
    bool applicable = false;
    bool pass = true;
    bool equality = false;  // theorem-specific "bound attained" marker
    json diagnostic;        // populated on failure
};

// Throws std::invalid_argument for unknown theorem ids.
GraphVerdict check_theorem(std::string_view theorem_id, const Graph& g);

struct Violation {
    std::string graph6;
    json diagnostic;
};

struct TheoremVerdict {
    std::string theorem_id;
    std::string universe;
    std::int64_t graphs_checked = 0;
    std::int64_t graphs_skipped = 0;
    std::optional<std::int64_t> equality_attainers;  // present where meaningful
    std::vector<Violation> violations;               // sorted by graph6 string
    std::chrono::duration<double> elapsed{0};        // wall time; never serialized

    bool pass() const { return violations.empty(); }
};

enum class UniverseKind { connected, trees, bipartite, file };

struct SweepConfig {
    UniverseKind universe = UniverseKind::connected;
    int n_min = 1;
    int n_max = 6;
    std::string input_path;                // universe == file
    std::vector<std::string> theorem_ids;  // empty = all default theorems
    int parallelism = 1;
    std::string output_path;               // empty = caller prints
};

std::string universe_label(const SweepConfig& cfg);

// Materializes the sweep universe.  Enumerated universes honor [n_min, n_max]
// (caps: connected/bipartite 9, trees 14); a file universe is taken as-is.
std::vector<Graph> load_universe(const SweepConfig& cfg);

std::vector<TheoremVerdict> run_sweep(const SweepConfig& cfg);
std::vector<TheoremVerdict> run_sweep(const SweepConfig& cfg, const std::vector<Graph>& graphs);

// Index-claiming parallel loop used by the sweeps; body(i) must touch only
// its own slot.  width <= 1 degenerates to a plain loop, and results are
// independent of width by construction.
void parallel_over(std::size_t count, int width, const std::function<void(std::size_t)>& body);

// --- stable machine-readable output ----------------------------------------

json sweep_report_json(const SweepConfig& cfg, const std::vector<TheoremVerdict>& verdicts);
json report_json(const Graph& g, const ParameterReport& r);

std::string parameter_table_csv_header();
std::string parameter_table_csv_row(const Graph& g, const ParameterReport& r);

}  // namespace isodom
