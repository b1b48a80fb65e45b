#include "isodom/enumerate.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <unordered_set>

namespace isodom {

namespace {

// Exact search for the vertex placement maximizing the packed column tuple.
// Prunes a branch as soon as its column prefix falls lexicographically below
// the best complete key found so far, and skips candidates that are twins of
// an already-tried candidate (the transposition is an automorphism, so the
// subtrees produce identical keys).
struct CanonSearcher {
    int n = 0;
    const std::uint64_t* adj = nullptr;

    std::array<int, kMaxVertices> placed{};
    std::array<std::uint64_t, kMaxVertices> cols{};   // cols[d] = column of position d, d >= 1
    std::array<std::uint64_t, kMaxVertices> best{};
    std::uint64_t used = 0;
    bool have_best = false;

    void run() {
        have_best = false;
        used = 0;
        search(0);
    }

    static bool twins(const std::uint64_t* adj, int u, int v) {
        const std::uint64_t drop = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        return (adj[u] & ~drop) == (adj[v] & ~drop);
    }

    void search(int depth) {
        if (have_best) {
            // Columns 1..depth-1 are the ones fixed so far.
            int rel = 0;  // prefix vs best: -1 below, 0 equal, +1 above
            for (int d = 1; d < depth && rel == 0; ++d)
                rel = cols[d] < best[d] ? -1 : (cols[d] > best[d] ? 1 : 0);
            if (rel < 0) return;
            if (depth == n) {
                if (rel > 0) std::copy(cols.begin(), cols.begin() + n, best.begin());
                return;
            }
        } else if (depth == n) {
            std::copy(cols.begin(), cols.begin() + n, best.begin());
            have_best = true;
            return;
        }

        struct Cand {
            std::uint64_t col;
            int v;
        };
        std::array<Cand, kMaxVertices> cand{};
        int count = 0;
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            std::uint64_t col = 0;
            for (int i = 0; i < depth; ++i)
                col |= static_cast<std::uint64_t>((adj[v] >> placed[i]) & 1) << i;
            cand[count++] = Cand{col, v};
        }
        std::sort(cand.begin(), cand.begin() + count,
                  [](const Cand& a, const Cand& b) { return a.col != b.col ? a.col > b.col : a.v < b.v; });

        std::array<int, kMaxVertices> tried{};
        int tried_count = 0;
        for (int c = 0; c < count; ++c) {
            bool skip = false;
            for (int t = 0; t < tried_count && !skip; ++t)
                skip = twins(adj, tried[t], cand[c].v);
            if (skip) continue;
            tried[tried_count++] = cand[c].v;

            placed[depth] = cand[c].v;
            cols[depth] = cand[c].col;
            used |= std::uint64_t{1} << cand[c].v;
            search(depth + 1);
            used &= ~(std::uint64_t{1} << cand[c].v);
        }
    }
};

CanonicalKey canonical_key_raw(const std::uint64_t* adj, int n) {
    if (n == 1) return {};
    CanonSearcher s;
    s.n = n;
    s.adj = adj;
    s.run();
    return CanonicalKey(s.best.begin() + 1, s.best.begin() + n);
}

struct KeyHash {
    std::size_t operator()(const CanonicalKey& key) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint64_t w : key) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace

CanonicalKey canonical_key(const Graph& g) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v).bits();
    return canonical_key_raw(adj.data(), g.order());
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.size() == b.size() && canonical_key(a) == canonical_key(b);
}

struct EnumerationCursor::KeySetImpl {
    std::unordered_set<CanonicalKey, KeyHash> seen;
};

EnumerationCursor::EnumerationCursor(Kind kind, int n) : kind_(kind), target_n_(n) {
    const int cap = kind == Kind::trees ? kMaxTreeEnumerationOrder : kMaxConnectedEnumerationOrder;
    if (n < 1 || n > cap)
        throw std::invalid_argument("enumeration order " + std::to_string(n) + " outside [1, " +
                                    std::to_string(cap) + "]");
    seen_ = std::make_shared<KeySetImpl>();
    if (n == 1) return;

    // Grow representative levels 1 .. n-1 eagerly; the final level streams.
    std::vector<RawGraph> level{RawGraph{{0}}};
    for (int k = 2; k < n; ++k) {
        std::vector<RawGraph> next_level;
        std::unordered_set<CanonicalKey, KeyHash> seen_level;
        std::vector<std::uint64_t> child(static_cast<std::size_t>(k));
        for (const RawGraph& parent : level) {
            const std::uint64_t mask_end = std::uint64_t{1} << (k - 1);
            for (std::uint64_t mask = 1; mask < mask_end; ++mask) {
                if (kind == Kind::trees && std::popcount(mask) != 1) continue;
                for (int v = 0; v + 1 < k; ++v)
                    child[static_cast<std::size_t>(v)] =
                        parent.adj[static_cast<std::size_t>(v)] | (((mask >> v) & 1) << (k - 1));
                child[static_cast<std::size_t>(k - 1)] = mask;
                if (seen_level.insert(canonical_key_raw(child.data(), k)).second)
                    next_level.push_back(RawGraph{child});
            }
        }
        level = std::move(next_level);
    }
    parents_ = std::move(level);
    mask_ = 0;
    if (!advance_mask()) exhausted_ = true;
}

// Moves to the next (parent, neighbor-mask) pair; false when the stream ends.
bool EnumerationCursor::advance_mask() {
    const int k = target_n_;
    const std::uint64_t mask_end = std::uint64_t{1} << (k - 1);
    for (;;) {
        ++mask_;
        if (kind_ == Kind::trees) {
            while (mask_ < mask_end && std::popcount(mask_) != 1) ++mask_;
        }
        if (mask_ < mask_end) return true;
        ++parent_index_;
        mask_ = 0;
        if (parent_index_ >= parents_.size()) return false;
    }
}

std::optional<Graph> EnumerationCursor::next() {
    if (target_n_ == 1) {
        if (emitted_base_) return std::nullopt;
        emitted_base_ = true;
        return Graph(1);
    }
    const int k = target_n_;
    std::vector<std::uint64_t> child(static_cast<std::size_t>(k));
    while (!exhausted_) {
        const RawGraph& parent = parents_[parent_index_];
        for (int v = 0; v + 1 < k; ++v)
            child[static_cast<std::size_t>(v)] =
                parent.adj[static_cast<std::size_t>(v)] | (((mask_ >> v) & 1) << (k - 1));
        child[static_cast<std::size_t>(k - 1)] = mask_;
        const bool fresh = seen_->seen.insert(canonical_key_raw(child.data(), k)).second;
        if (!advance_mask()) exhausted_ = true;
        if (fresh) return Graph::from_adjacency(child);
    }
    return std::nullopt;
}

std::vector<Graph> enumerate_connected_graphs(int n) {
    EnumerationCursor cursor(EnumerationCursor::Kind::connected_graphs, n);
    std::vector<Graph> out;
    while (auto g = cursor.next()) out.push_back(std::move(*g));
    return out;
}

std::vector<Graph> enumerate_trees(int n) {
    EnumerationCursor cursor(EnumerationCursor::Kind::trees, n);
    std::vector<Graph> out;
    while (auto g = cursor.next()) out.push_back(std::move(*g));
    return out;
}

Graph random_connected_graph(int n, double edge_prob, std::uint64_t seed) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("order outside [1, 64]");
    if (!(edge_prob > 0.0 && edge_prob < 1.0))
        throw std::invalid_argument("edge probability must be in (0, 1)");

    std::mt19937_64 rng(seed);
    constexpr int kBudget = 1000;
    for (int attempt = 0; attempt < kBudget; ++attempt) {
        std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                // 53-bit uniform draw; avoids distribution classes whose output
                // is implementation-defined.
                const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                if (draw < edge_prob) {
                    adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
                    adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
                }
            }
        Graph g = Graph::from_adjacency(std::move(adj));
        if (is_connected(g)) return g;
    }
    throw std::runtime_error("no connected sample in " + std::to_string(kBudget) +
                             " draws (n=" + std::to_string(n) + ", p=" + std::to_string(edge_prob) + ")");
}

std::optional<Family> family_from_name(std::string_view name) {
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "complete") return Family::complete;
    if (name == "star") return Family::star;
    if (name == "complete_bipartite") return Family::complete_bipartite;
    return std::nullopt;
}

Graph make_named(Family family, int k) {
    std::vector<std::pair<int, int>> edges;
    switch (family) {
        case Family::path:
            if (k < 1 || k > kMaxVertices) throw std::invalid_argument("path needs 1 <= k <= 64");
            for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
            return Graph(k, edges);
        case Family::cycle:
            if (k < 3 || k > kMaxVertices) throw std::invalid_argument("cycle needs 3 <= k <= 64");
            for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(k - 1, 0);
            return Graph(k, edges);
        case Family::complete:
            if (k < 1 || k > kMaxVertices) throw std::invalid_argument("complete needs 1 <= k <= 64");
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
            return Graph(k, edges);
        case Family::star:
            if (k < 1 || k + 1 > kMaxVertices) throw std::invalid_argument("star needs 1 <= k <= 63");
            for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
            return Graph(k + 1, edges);
        case Family::complete_bipartite:
            if (k < 1 || 2 * k > kMaxVertices) throw std::invalid_argument("complete_bipartite needs 1 <= k <= 32");
            for (int i = 0; i < k; ++i)
                for (int j = k; j < 2 * k; ++j) edges.emplace_back(i, j);
            return Graph(2 * k, edges);
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace isodom
