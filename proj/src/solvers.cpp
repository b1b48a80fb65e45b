#include "isodom/solvers.hpp"

#include <stdexcept>

namespace isodom {

bool is_dominating(const Graph& g, VertexSet s) {
    return closed_neighborhood(g, s) == g.vertices();
}

bool is_total_dominating(const Graph& g, VertexSet s) {
    return open_neighborhood(g, s) == g.vertices();
}

bool is_independent(const Graph& g, VertexSet s) {
    for (int v : s)
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

bool is_irredundant(const Graph& g, VertexSet s) {
    for (int v : s) {
        VertexSet others_closed;
        for (int u : s.without(v)) others_closed = others_closed | g.neighbors(u) | VertexSet::single(u);
        const VertexSet closed_v = g.neighbors(v) | VertexSet::single(v);
        if ((closed_v - others_closed).empty()) return false;  // v has no private neighbor
    }
    return true;
}

bool is_isolate_set(const Graph& g, VertexSet s) {
    return !isolates_of(g, s).empty();
}

VertexSet isolates_of(const Graph& g, VertexSet s) {
    VertexSet iso;
    for (int v : s)
        if (!g.neighbors(v).intersects(s)) iso = iso.with(v);
    return iso;
}

namespace {

// Assumes s is an isolate set.
bool maximal_isolate_unchecked(const Graph& g, VertexSet s) {
    const VertexSet iso = isolates_of(g, s);
    for (int u : g.vertices() - s)
        if (!iso.subset_of(g.neighbors(u))) return false;
    return true;
}

void check_solver_order(const Graph& g) {
    if (g.order() > kMaxSolverOrder)
        throw std::invalid_argument("subset enumeration capped at " + std::to_string(kMaxSolverOrder) +
                                    " vertices, got " + std::to_string(g.order()));
}

// Calls visit(bits) for every n-bit mask of popcount k, in increasing numeric
// order, until visit returns true; then returns that mask.
template <typename Visit>
std::optional<std::uint64_t> first_of_popcount(int n, int k, Visit&& visit) {
    if (k == 0) return visit(std::uint64_t{0}) ? std::optional<std::uint64_t>(0) : std::nullopt;
    const std::uint64_t limit = std::uint64_t{1} << n;
    std::uint64_t bits = (std::uint64_t{1} << k) - 1;
    while (bits < limit) {
        if (visit(bits)) return bits;
        // Gosper's hack: next mask with the same popcount.
        const std::uint64_t low = bits & (~bits + 1);
        const std::uint64_t ripple = bits + low;
        bits = ripple | (((bits ^ ripple) >> 2) / low);
    }
    return std::nullopt;
}

}  // namespace

bool is_maximal_isolate_set(const Graph& g, VertexSet s) {
    if (!is_isolate_set(g, s))
        throw std::invalid_argument("maximality is only defined for isolate sets");
    return maximal_isolate_unchecked(g, s);
}

std::optional<Extremal> min_in_family(const Graph& g, const SetPredicate& member) {
    check_solver_order(g);
    for (int k = 0; k <= g.order(); ++k)
        if (auto hit = first_of_popcount(g.order(), k, [&](std::uint64_t bits) { return member(VertexSet(bits)); }))
            return Extremal{k, VertexSet(*hit)};
    return std::nullopt;
}

std::optional<Extremal> max_in_family(const Graph& g, const SetPredicate& member) {
    check_solver_order(g);
    for (int k = g.order(); k >= 0; --k)
        if (auto hit = first_of_popcount(g.order(), k, [&](std::uint64_t bits) { return member(VertexSet(bits)); }))
            return Extremal{k, VertexSet(*hit)};
    return std::nullopt;
}

std::optional<FamilyRange> over_minimal_members(const Graph& g, const SetPredicate& member) {
    check_solver_order(g);
    const std::uint64_t total = std::uint64_t{1} << g.order();
    std::vector<bool> in_family(total);
    for (std::uint64_t bits = 0; bits < total; ++bits) in_family[bits] = member(VertexSet(bits));

    std::optional<FamilyRange> out;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        if (!in_family[bits]) continue;
        bool minimal = true;
        if (bits != 0) {
            for (std::uint64_t sub = (bits - 1) & bits;; sub = (sub - 1) & bits) {
                if (in_family[sub]) {
                    minimal = false;
                    break;
                }
                if (sub == 0) break;
            }
        }
        if (!minimal) continue;
        const Extremal e{VertexSet(bits).size(), VertexSet(bits)};
        if (!out) {
            out = FamilyRange{e, e};
        } else {
            if (e.value < out->min.value) out->min = e;
            if (e.value > out->max.value) out->max = e;
        }
    }
    return out;
}

std::optional<FamilyRange> over_maximal_members(const Graph& g, const SetPredicate& member) {
    check_solver_order(g);
    const std::uint64_t total = std::uint64_t{1} << g.order();
    std::vector<bool> in_family(total);
    for (std::uint64_t bits = 0; bits < total; ++bits) in_family[bits] = member(VertexSet(bits));

    std::optional<FamilyRange> out;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        if (!in_family[bits]) continue;
        bool maximal = true;
        for (std::uint64_t sup = (bits + 1) | bits; sup < total; sup = (sup + 1) | bits) {
            if (in_family[sup]) {
                maximal = false;
                break;
            }
        }
        if (!maximal) continue;
        const Extremal e{VertexSet(bits).size(), VertexSet(bits)};
        if (!out) {
            out = FamilyRange{e, e};
        } else {
            if (e.value < out->min.value) out->min = e;
            if (e.value > out->max.value) out->max = e;
        }
    }
    return out;
}

ParameterReport compute_report(const Graph& g) {
    check_solver_order(g);
    const int n = g.order();
    ParameterReport r;
    r.n = n;
    r.m = g.size();
    r.diam = diameter(g);

    bool has_isolated_vertex = false;
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        if (d == n - 1) r.has_dominating_vertex = true;
        if (d == 0) has_isolated_vertex = true;
    }

    const Graph gc = complement(g);

    r.gamma = min_in_family(g, [&](VertexSet s) { return is_dominating(g, s); }).value();
    if (!has_isolated_vertex)
        r.gamma_t = min_in_family(g, [&](VertexSet s) { return is_total_dominating(g, s); }).value();
    r.gamma_g =
        min_in_family(g, [&](VertexSet s) { return is_dominating(g, s) && is_dominating(gc, s); }).value();
    r.ind_dom =
        min_in_family(g, [&](VertexSet s) { return is_independent(g, s) && is_dominating(g, s); }).value();
    r.alpha = max_in_family(g, [&](VertexSet s) { return is_independent(g, s); }).value();

    // One pass over all subsets covers the families that need explicit
    // minimal/maximal members.  Minimal dominating sets are recognized by
    // single-vertex removal (domination is superset-closed) and maximal
    // irredundant / isolate-irredundant sets by single-vertex extension
    // (heredity makes one-step failure equivalent to true maximality).
    // Isolate dominating sets are not monotone in either direction, so their
    // minimal members are found against a membership table of all subsets.
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<bool> isolate_dominating(total, false);
    std::optional<Extremal> min_minimal_dom, max_minimal_dom;
    std::optional<Extremal> ir_min, ir_max, i0_min, i0_max, ir0_min, ir0_max;

    auto take = [](std::optional<Extremal>& mn, std::optional<Extremal>& mx, VertexSet s) {
        const Extremal e{s.size(), s};
        if (!mn || e.value < mn->value) mn = e;
        if (!mx || e.value > mx->value) mx = e;
    };

    for (std::uint64_t bits = 0; bits < total; ++bits) {
        const VertexSet s(bits);
        const bool dominating = is_dominating(g, s);
        if (dominating) {
            bool minimal = true;
            for (int v : s)
                if (is_dominating(g, s.without(v))) {
                    minimal = false;
                    break;
                }
            if (minimal) take(min_minimal_dom, max_minimal_dom, s);
        }
        const bool irredundant = is_irredundant(g, s);
        if (irredundant) {
            bool maximal = true;
            for (int v : g.vertices() - s)
                if (is_irredundant(g, s.with(v))) {
                    maximal = false;
                    break;
                }
            if (maximal) take(ir_min, ir_max, s);
        }
        if (is_isolate_set(g, s)) {
            if (maximal_isolate_unchecked(g, s)) take(i0_min, i0_max, s);
            if (dominating) isolate_dominating[bits] = true;
            if (irredundant) {
                bool maximal = true;
                for (int v : g.vertices() - s) {
                    const VertexSet t = s.with(v);
                    if (is_isolate_set(g, t) && is_irredundant(g, t)) {
                        maximal = false;
                        break;
                    }
                }
                if (maximal) take(ir0_min, ir0_max, s);
            }
        }
    }

    std::optional<Extremal> g0_min, g0_max;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        if (!isolate_dominating[bits]) continue;
        bool minimal = true;
        if (bits != 0) {
            for (std::uint64_t sub = (bits - 1) & bits;; sub = (sub - 1) & bits) {
                if (isolate_dominating[sub]) {
                    minimal = false;
                    break;
                }
                if (sub == 0) break;
            }
        }
        if (minimal) take(g0_min, g0_max, VertexSet(bits));
    }

    r.upper_gamma = max_minimal_dom.value();
    // Cross-check rather than trust: the smallest dominating set must have the
    // same cardinality as the smallest minimal dominating set.
    if (min_minimal_dom->value != r.gamma.value)
        throw std::logic_error("min over minimal dominating sets disagrees with gamma");
    r.ir = ir_min.value();
    r.IR = ir_max.value();
    r.i0 = i0_min.value();
    r.I0 = i0_max.value();
    r.gamma0 = g0_min.value();
    r.upper_gamma0 = g0_max.value();
    r.ir0 = ir0_min.value();
    r.IR0 = ir0_max.value();
    return r;
}

const std::vector<std::string_view>& report_field_names() {
    static const std::vector<std::string_view> names = {
        "n",  "m",  "diam",   "gamma", "upper_gamma", "ind_dom", "alpha",        "gamma_t", "gamma_g",
        "ir", "IR", "i0",     "I0",    "gamma0",      "upper_gamma0", "ir0",     "IR0"};
    return names;
}

std::optional<int> report_value(const ParameterReport& r, std::string_view name) {
    if (name == "n") return r.n;
    if (name == "m") return r.m;
    if (name == "diam") return r.diam;
    if (name == "gamma") return r.gamma.value;
    if (name == "upper_gamma" || name == "Gamma") return r.upper_gamma.value;
    if (name == "ind_dom" || name == "i") return r.ind_dom.value;
    if (name == "alpha" || name == "beta0") return r.alpha.value;
    if (name == "gamma_t") {
        if (!r.gamma_t) return std::nullopt;
        return r.gamma_t->value;
    }
    if (name == "gamma_g") return r.gamma_g.value;
    if (name == "ir") return r.ir.value;
    if (name == "IR") return r.IR.value;
    if (name == "i0") return r.i0.value;
    if (name == "I0") return r.I0.value;
    if (name == "gamma0") return r.gamma0.value;
    if (name == "upper_gamma0" || name == "Gamma0") return r.upper_gamma0.value;
    if (name == "ir0") return r.ir0.value;
    if (name == "IR0") return r.IR0.value;
    throw std::invalid_argument("unknown parameter name: " + std::string(name));
}

const Extremal* report_extremal(const ParameterReport& r, std::string_view name) {
    if (name == "gamma") return &r.gamma;
    if (name == "upper_gamma" || name == "Gamma") return &r.upper_gamma;
    if (name == "ind_dom" || name == "i") return &r.ind_dom;
    if (name == "alpha" || name == "beta0") return &r.alpha;
    if (name == "gamma_t") return r.gamma_t ? &*r.gamma_t : nullptr;
    if (name == "gamma_g") return &r.gamma_g;
    if (name == "ir") return &r.ir;
    if (name == "IR") return &r.IR;
    if (name == "i0") return &r.i0;
    if (name == "I0") return &r.I0;
    if (name == "gamma0") return &r.gamma0;
    if (name == "upper_gamma0" || name == "Gamma0") return &r.upper_gamma0;
    if (name == "ir0") return &r.ir0;
    if (name == "IR0") return &r.IR0;
    throw std::invalid_argument("no witness-bearing parameter named: " + std::string(name));
}

bool is_report_field(std::string_view name) {
    try {
        ParameterReport dummy;
        dummy.diam = 0;
        dummy.gamma_t = Extremal{};
        (void)report_value(dummy, name);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

}  // namespace isodom
