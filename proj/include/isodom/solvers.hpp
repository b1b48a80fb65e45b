#pragma once

// Exact computation of the domination-type parameters by enumeration over the
// 2^n vertex subsets, with witness sets.  Minimum-over-family and
// maximum-over-family scans walk popcount levels, so the first hit is
// extremal even when the family is not monotone.  Parameters defined over
// minimal or maximal family members enumerate that family explicitly.

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "isodom/graph.hpp"

namespace isodom {

// Subset enumeration is intentionally capped; larger orders are out of scope.
inline constexpr int kMaxSolverOrder = 20;

// --- membership predicates ----------------------------------------------

// Every vertex outside s has a neighbor in s.
bool is_dominating(const Graph& g, VertexSet s);
// N(s) covers every vertex, members included.  The full vertex set fails on
// any graph with an isolated vertex.
bool is_total_dominating(const Graph& g, VertexSet s);
bool is_independent(const Graph& g, VertexSet s);
// Every member keeps a closed private neighbor: N[v] - N[s - {v}] nonempty.
bool is_irredundant(const Graph& g, VertexSet s);
// Some member of s has no neighbor inside s.  The empty set does not qualify.
bool is_isolate_set(const Graph& g, VertexSet s);
// Members of s that are isolated in the induced subgraph.
VertexSet isolates_of(const Graph& g, VertexSet s);
// Maximality test for isolate sets: true iff every vertex outside s is
// adjacent to every isolated vertex of the induced subgraph.  Throws
// std::invalid_argument when s is not an isolate set.
bool is_maximal_isolate_set(const Graph& g, VertexSet s);

// --- generic extremal engine ----------------------------------------------

struct Extremal {
    int value = 0;
    VertexSet witness;
};

using SetPredicate = std::function<bool(VertexSet)>;

// Smallest (resp. largest) member of {s : member(s)}.  Deterministic: within
// one popcount level subsets are visited in increasing numeric order.
// nullopt signals an empty family ("undefined parameter"), never a number.
std::optional<Extremal> min_in_family(const Graph& g, const SetPredicate& member);
std::optional<Extremal> max_in_family(const Graph& g, const SetPredicate& member);

struct FamilyRange {
    Extremal min;
    Extremal max;
};

// Extremal cardinalities over the minimal members (no proper subset in the
// family) resp. maximal members (no proper superset in the family).  Exact
// for arbitrary families: membership is tabulated over all 2^n subsets and
// proper subsets/supersets are scanned directly.  This is the reference
// route; compute_report uses cheaper checks where the family structure
// provably allows them.
std::optional<FamilyRange> over_minimal_members(const Graph& g, const SetPredicate& member);
std::optional<FamilyRange> over_maximal_members(const Graph& g, const SetPredicate& member);

// --- the full report --------------------------------------------------------

struct ParameterReport {
    int n = 0;
    int m = 0;
    std::optional<int> diam;  // nullopt = infinite (disconnected)
    bool has_dominating_vertex = false;

    Extremal gamma;                 // min dominating
    Extremal upper_gamma;           // max minimal dominating
    Extremal ind_dom;               // min independent dominating (i)
    Extremal alpha;                 // max independent (= beta0)
    std::optional<Extremal> gamma_t;  // min total dominating; absent iff an isolated vertex exists
    Extremal gamma_g;               // min dominating in both g and its complement
    Extremal ir, IR;                // min/max maximal irredundant
    Extremal i0, I0;                // min/max maximal isolate
    Extremal gamma0, upper_gamma0;  // min/max minimal isolate dominating
    Extremal ir0, IR0;              // min/max maximal isolate irredundant
};

// All fourteen parameters with witnesses.  gamma_t is reported absent (not an
// error) when undefined.  Throws std::invalid_argument for n > kMaxSolverOrder.
ParameterReport compute_report(const Graph& g);

// Table column order: n, m, diam, then the fourteen parameters.
const std::vector<std::string_view>& report_field_names();

// Value lookup by field name, with the aliases Gamma = upper_gamma,
// i = ind_dom, beta0 = alpha, Gamma0 = upper_gamma0.  nullopt when the value
// is undefined for this graph (gamma_t, diam).  Throws on unknown names.
std::optional<int> report_value(const ParameterReport& r, std::string_view name);
bool is_report_field(std::string_view name);

// Witness-bearing lookup for the fourteen parameters; nullptr when the
// parameter is undefined on this graph (gamma_t).  Throws on unknown names
// and on the witness-free fields n, m, diam.
const Extremal* report_extremal(const ParameterReport& r, std::string_view name);

}  // namespace isodom
