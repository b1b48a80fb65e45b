#pragma once

// Test-only oracles.  Each one recomputes a quantity straight from its
// definition, along a different route than the library: predicates run over
// a plain adjacency matrix, minimality/maximality scans visit every proper
// subset or superset, the canonical key is maximized over all n!
// permutations with no pruning, and the counting checks come from
// permutation-cycle counting (Burnside + inverse Euler transform) and the
// rooted-tree convolution recurrence.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "isodom/graph.hpp"

namespace oracle {

// Adjacency-matrix graph; deliberately not the bitmask representation.
struct Mat {
    int n = 0;
    std::array<std::array<bool, 16>, 16> adj{};

    static Mat from(const isodom::Graph& g) {
        if (g.order() > 16) throw std::invalid_argument("oracle graphs are capped at 16 vertices");
        Mat m;
        m.n = g.order();
        for (int u = 0; u < m.n; ++u)
            for (int v = 0; v < m.n; ++v) m.adj[u][v] = u != v && g.adjacent(u, v);
        return m;
    }

    Mat complement() const {
        Mat m;
        m.n = n;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) m.adj[u][v] = u != v && !adj[u][v];
        return m;
    }
};

inline bool in(unsigned s, int v) { return (s >> v) & 1u; }

inline bool dominating(const Mat& g, unsigned s) {
    for (int v = 0; v < g.n; ++v) {
        if (in(s, v)) continue;
        bool covered = false;
        for (int u = 0; u < g.n && !covered; ++u) covered = in(s, u) && g.adj[u][v];
        if (!covered) return false;
    }
    return true;
}

inline bool total_dominating(const Mat& g, unsigned s) {
    for (int v = 0; v < g.n; ++v) {
        bool covered = false;
        for (int u = 0; u < g.n && !covered; ++u) covered = in(s, u) && g.adj[u][v];
        if (!covered) return false;
    }
    return true;
}

inline bool independent(const Mat& g, unsigned s) {
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (in(s, u) && in(s, v) && g.adj[u][v]) return false;
    return true;
}

inline bool irredundant(const Mat& g, unsigned s) {
    for (int v = 0; v < g.n; ++v) {
        if (!in(s, v)) continue;
        bool has_private = false;
        for (int w = 0; w < g.n && !has_private; ++w) {
            if (!(w == v || g.adj[v][w])) continue;  // w must lie in N[v]
            bool covered_by_other = false;
            for (int u = 0; u < g.n && !covered_by_other; ++u)
                covered_by_other = u != v && in(s, u) && (w == u || g.adj[u][w]);
            has_private = !covered_by_other;
        }
        if (!has_private) return false;
    }
    return true;
}

inline bool isolate(const Mat& g, unsigned s) {
    for (int v = 0; v < g.n; ++v) {
        if (!in(s, v)) continue;
        bool has_inside_neighbor = false;
        for (int u = 0; u < g.n && !has_inside_neighbor; ++u)
            has_inside_neighbor = u != v && in(s, u) && g.adj[u][v];
        if (!has_inside_neighbor) return true;
    }
    return false;
}

// Direct one-vertex-extension maximality for isolate sets.
inline bool maximal_isolate_direct(const Mat& g, unsigned s) {
    for (int v = 0; v < g.n; ++v)
        if (!in(s, v) && isolate(g, s | (1u << v))) return false;
    return true;
}

// --- extremal scans with full subset/superset checks -------------------------

template <typename Pred>
std::vector<bool> tabulate(const Mat& g, Pred&& pred) {
    const unsigned total = 1u << g.n;
    std::vector<bool> table(total);
    for (unsigned s = 0; s < total; ++s) table[s] = pred(g, s);
    return table;
}

inline std::optional<int> min_card(const std::vector<bool>& fam) {
    std::optional<int> best;
    for (unsigned s = 0; s < fam.size(); ++s)
        if (fam[s] && (!best || std::popcount(s) < *best)) best = std::popcount(s);
    return best;
}

// Members with no proper subset in the family (every proper subset checked).
inline std::vector<bool> minimal_members(const std::vector<bool>& fam) {
    std::vector<bool> out(fam.size(), false);
    for (unsigned s = 0; s < fam.size(); ++s) {
        if (!fam[s]) continue;
        bool minimal = true;
        for (unsigned t = 0; t < s && minimal; ++t)
            if ((t & s) == t && fam[t]) minimal = false;
        out[s] = minimal;
    }
    return out;
}

// Members with no proper superset in the family.
inline std::vector<bool> maximal_members(const std::vector<bool>& fam) {
    std::vector<bool> out(fam.size(), false);
    for (unsigned s = 0; s < fam.size(); ++s) {
        if (!fam[s]) continue;
        bool maximal = true;
        for (unsigned t = s + 1; t < fam.size() && maximal; ++t)
            if ((t & s) == s && fam[t]) maximal = false;
        out[s] = maximal;
    }
    return out;
}

inline std::pair<int, int> card_range(const std::vector<bool>& members) {
    int lo = 1 << 20, hi = -1;
    for (unsigned s = 0; s < members.size(); ++s)
        if (members[s]) {
            lo = std::min(lo, std::popcount(s));
            hi = std::max(hi, std::popcount(s));
        }
    if (hi < 0) throw std::logic_error("oracle family is empty");
    return {lo, hi};
}

struct Params {
    int gamma = 0, Gamma = 0, i = 0, alpha = 0;
    int gamma_t = -1;  // -1 = undefined
    int gamma_g = 0, ir = 0, IR = 0, i0 = 0, I0 = 0, gamma0 = 0, Gamma0 = 0, ir0 = 0, IR0 = 0;
};

inline Params all_params(const isodom::Graph& g) {
    const Mat m = Mat::from(g);
    const Mat mc = m.complement();
    Params p;

    const auto dom = tabulate(m, dominating);
    const auto tot = tabulate(m, total_dominating);
    const auto ind = tabulate(m, independent);
    const auto irr = tabulate(m, irredundant);
    const auto iso = tabulate(m, isolate);

    p.gamma = min_card(dom).value();
    p.Gamma = card_range(minimal_members(dom)).second;
    {
        std::vector<bool> ind_dom(dom.size());
        for (unsigned s = 0; s < dom.size(); ++s) ind_dom[s] = ind[s] && dom[s];
        p.i = min_card(ind_dom).value();
    }
    {
        int best = 0;
        for (unsigned s = 0; s < ind.size(); ++s)
            if (ind[s]) best = std::max(best, std::popcount(s));
        p.alpha = best;
    }
    if (const auto gt = min_card(tot)) p.gamma_t = *gt;
    {
        std::vector<bool> both(dom.size());
        for (unsigned s = 0; s < dom.size(); ++s) both[s] = dom[s] && dominating(mc, s);
        p.gamma_g = min_card(both).value();
    }
    {
        const auto [lo, hi] = card_range(maximal_members(irr));
        p.ir = lo;
        p.IR = hi;
    }
    {
        const auto [lo, hi] = card_range(maximal_members(iso));
        p.i0 = lo;
        p.I0 = hi;
    }
    {
        std::vector<bool> iso_dom(dom.size());
        for (unsigned s = 0; s < dom.size(); ++s) iso_dom[s] = iso[s] && dom[s];
        const auto [lo, hi] = card_range(minimal_members(iso_dom));
        p.gamma0 = lo;
        p.Gamma0 = hi;
    }
    {
        std::vector<bool> iso_irr(irr.size());
        for (unsigned s = 0; s < irr.size(); ++s) iso_irr[s] = iso[s] && irr[s];
        const auto [lo, hi] = card_range(maximal_members(iso_irr));
        p.ir0 = lo;
        p.IR0 = hi;
    }
    return p;
}

// --- isomorphism by blunt permutation search ---------------------------------

// Same key semantics as the library canonical form, computed over every
// permutation with no pruning and no twin skip.
inline std::vector<std::uint64_t> brute_key(const isodom::Graph& g) {
    const int n = g.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::vector<std::uint64_t> best;
    do {
        std::vector<std::uint64_t> cols;
        cols.reserve(static_cast<std::size_t>(n) - 1);
        for (int d = 1; d < n; ++d) {
            std::uint64_t col = 0;
            for (int i = 0; i < d; ++i)
                if (g.adjacent(perm[static_cast<std::size_t>(d)], perm[static_cast<std::size_t>(i)]))
                    col |= std::uint64_t{1} << i;
            cols.push_back(col);
        }
        if (cols > best) best = std::move(cols);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool brute_isomorphic(const isodom::Graph& a, const isodom::Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    const int n = a.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
        bool match = true;
        for (int u = 0; u < n && match; ++u)
            for (int v = u + 1; v < n && match; ++v)
                match = a.adjacent(u, v) ==
                        b.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// --- counting formulas --------------------------------------------------------

// Unlabeled simple graphs on k vertices, 1 <= k <= max_n, by averaging
// 2^(pair cycles) over all vertex permutations.
inline std::vector<long long> unlabeled_graph_counts(int max_n) {
    std::vector<long long> counts;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
        unsigned long long sum = 0;
        unsigned long long perms = 0;
        do {
            ++perms;
            int cycles = 0;
            std::array<std::array<bool, 16>, 16> seen{};
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    if (seen[i][j]) continue;
                    ++cycles;
                    int a = i, b = j;
                    do {
                        seen[std::min(a, b)][std::max(a, b)] = true;
                        const int na = perm[static_cast<std::size_t>(a)];
                        const int nb = perm[static_cast<std::size_t>(b)];
                        a = std::min(na, nb);
                        b = std::max(na, nb);
                    } while (!(a == i && b == j));
                }
            sum += 1ull << cycles;
        } while (std::next_permutation(perm.begin(), perm.end()));
        counts.push_back(static_cast<long long>(sum / perms));
    }
    return counts;
}

// Connected counts from all-graph counts by the inverse Euler transform.
inline std::vector<long long> connected_graph_counts(int max_n) {
    const std::vector<long long> a = unlabeled_graph_counts(max_n);
    std::vector<long long> b(static_cast<std::size_t>(max_n) + 1, 0);
    std::vector<long long> c(static_cast<std::size_t>(max_n) + 1, 0);
    for (int n = 1; n <= max_n; ++n) {
        long long bn = n * a[static_cast<std::size_t>(n - 1)];
        for (int k = 1; k < n; ++k)
            bn -= b[static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(n - k - 1)];
        b[static_cast<std::size_t>(n)] = bn;
        long long cn = bn;
        for (int d = 1; d < n; ++d)
            if (n % d == 0) cn -= d * c[static_cast<std::size_t>(d)];
        if (cn % n != 0) throw std::logic_error("inverse Euler transform is not integral");
        c[static_cast<std::size_t>(n)] = cn / n;
    }
    return std::vector<long long>(c.begin() + 1, c.end());
}

// Free-tree counts from the rooted-tree recurrence plus the rooted/free
// correction term.
inline std::vector<long long> tree_counts(int max_n) {
    std::vector<long long> r(static_cast<std::size_t>(max_n) + 1, 0);
    r[1] = 1;
    for (int n = 2; n <= max_n; ++n) {
        long long acc = 0;
        for (int j = 1; j < n; ++j) {
            long long weight = 0;
            for (int d = 1; d <= j; ++d)
                if (j % d == 0) weight += d * r[static_cast<std::size_t>(d)];
            acc += weight * r[static_cast<std::size_t>(n - j)];
        }
        if (acc % (n - 1) != 0) throw std::logic_error("rooted tree recurrence is not integral");
        r[static_cast<std::size_t>(n)] = acc / (n - 1);
    }
    std::vector<long long> t;
    for (int n = 1; n <= max_n; ++n) {
        long long pairs = 0;
        for (int i = 1; i < n; ++i) pairs += r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(n - i)];
        long long twice = 2 * r[static_cast<std::size_t>(n)] - pairs;
        if (n % 2 == 0) twice += r[static_cast<std::size_t>(n / 2)];
        if (twice % 2 != 0) throw std::logic_error("free-tree correction is not integral");
        t.push_back(twice / 2);
    }
    return t;
}

// --- metric oracle -------------------------------------------------------------

// Diameter via Floyd-Warshall (the library uses BFS layers).
inline std::optional<int> diameter_fw(const isodom::Graph& g) {
    const int n = g.order();
    constexpr int kInf = 1 << 20;
    std::array<std::array<int, 16>, 16> d{};
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) d[u][v] = u == v ? 0 : (g.adjacent(u, v) ? 1 : kInf);
    for (int k = 0; k < n; ++k)
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) d[u][v] = std::min(d[u][v], d[u][k] + d[k][v]);
    int best = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (d[u][v] >= kInf) return std::nullopt;
            best = std::max(best, d[u][v]);
        }
    return best;
}

}  // namespace oracle
