#include "isodom/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "isodom/solvers.hpp"

namespace isodom {

bool has_dominating_vertex(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1) return true;
    return false;
}

namespace {

void require_tree(const Graph& t, const char* what) {
    if (!is_tree(t)) throw std::invalid_argument(std::string(what) + " requires a tree");
}

}  // namespace

bool all_leaf_or_support(const Graph& t) {
    require_tree(t, "all_leaf_or_support");
    const LeafSupport ls = leaves_and_supports(t);
    return (ls.leaves | ls.supports) == t.vertices();
}

std::optional<CaterpillarCode> caterpillar_code(const Graph& t) {
    require_tree(t, "caterpillar_code");
    const int n = t.order();
    if (n <= 2) {
        // Convention: the whole tree is the spine.
        CaterpillarCode code;
        code.spine_length = n;
        code.leaf_counts.assign(static_cast<std::size_t>(n), 0);
        return code;
    }

    const VertexSet leaves = leaves_and_supports(t).leaves;
    const VertexSet rest = t.vertices() - leaves;  // nonempty for n >= 3

    // The leafless remainder of a tree is a tree; it is a path iff no vertex
    // keeps three non-leaf neighbors.
    std::vector<int> spine;
    int endpoint = -1;
    for (int v : rest) {
        const int deg_in_rest = (t.neighbors(v) & rest).size();
        if (deg_in_rest > 2) return std::nullopt;
        if (deg_in_rest <= 1 && endpoint < 0) endpoint = v;
    }
    int prev = -1;
    int cur = endpoint;
    while (cur >= 0) {
        spine.push_back(cur);
        const VertexSet next = (t.neighbors(cur) & rest).without(prev < 0 ? cur : prev);
        prev = cur;
        cur = next.empty() ? -1 : next.front();
    }

    CaterpillarCode code;
    code.spine_length = static_cast<int>(spine.size());
    code.leaf_counts.reserve(spine.size());
    for (int v : spine) code.leaf_counts.push_back((t.neighbors(v) & leaves).size());
    std::vector<int> reversed(code.leaf_counts.rbegin(), code.leaf_counts.rend());
    if (reversed < code.leaf_counts) code.leaf_counts = std::move(reversed);
    return code;
}

namespace {

// Union-find with path halving; supports the spanning-tree builders.
struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

int induced_component_count(const Graph& g, VertexSet s) {
    return s.empty() ? 0 : component_count(induced_subgraph(g, s).graph);
}

}  // namespace

SpanningTreeCertificate build_spanning_tree_preserving(const Graph& g, VertexSet dset) {
    if (!dset.subset_of(g.vertices()))
        throw std::invalid_argument("dset has vertices beyond the graph");
    if (!is_connected(g)) throw std::invalid_argument("source graph must be connected");
    if (!is_total_dominating(g, dset))
        throw std::invalid_argument("dset must be a total dominating set");

    const int n = g.order();
    DisjointSets uf(n);
    std::vector<std::pair<int, int>> tree_edges;
    tree_edges.reserve(static_cast<std::size_t>(n - 1));

    // Spanning forest inside G[D]: edges with both ends in D, lexicographic.
    for (auto [u, v] : g.edges())
        if (dset.contains(u) && dset.contains(v) && uf.unite(u, v)) tree_edges.emplace_back(u, v);

    // Each outside vertex hangs off its lowest-indexed neighbor in D.
    for (int v : g.vertices() - dset) {
        const int u = (g.neighbors(v) & dset).front();
        uf.unite(v, u);
        tree_edges.emplace_back(std::min(u, v), std::max(u, v));
    }

    // Completion: remaining edges in lexicographic order, cycle-free.  Any
    // edge joining two fragments here has an endpoint outside D (a D-D edge
    // lies inside one G[D] component, already spanned), so the D-components
    // are never merged.
    for (auto [u, v] : g.edges()) {
        if (static_cast<int>(tree_edges.size()) == n - 1) break;
        if (uf.unite(u, v)) tree_edges.emplace_back(u, v);
    }

    SpanningTreeCertificate cert{Graph(n, tree_edges), dset, 0, 0};
    cert.components_before = induced_component_count(g, dset);
    cert.components_after = induced_component_count(cert.tree, dset);
    return cert;
}

bool certificate_valid(const Graph& source, const SpanningTreeCertificate& cert) {
    if (cert.tree.order() != source.order()) return false;
    if (!is_tree(cert.tree)) return false;
    for (auto [u, v] : cert.tree.edges())
        if (!source.adjacent(u, v)) return false;
    if (!is_total_dominating(cert.tree, cert.dset)) return false;
    const int before = induced_component_count(source, cert.dset);
    const int after = induced_component_count(cert.tree, cert.dset);
    return cert.components_before == before && cert.components_after == after && before == after;
}

namespace {

struct CaterpillarSearch {
    const Graph* g = nullptr;
    std::vector<std::pair<int, int>> edge_list;
    int n = 0;
    int target_diam = 0;
    std::vector<std::pair<int, int>> chosen;
    std::optional<Graph> found;

    bool run(std::size_t idx, DisjointSets& uf) {
        if (static_cast<int>(chosen.size()) == n - 1) {
            Graph t(n, chosen);
            if (!is_connected(t)) return false;
            if (!caterpillar_code(t)) return false;
            if (diameter(t) != std::optional<int>(target_diam)) return false;
            found = std::move(t);
            return true;
        }
        if (idx >= edge_list.size()) return false;
        if (edge_list.size() - idx < static_cast<std::size_t>(n - 1) - chosen.size()) return false;

        auto [u, v] = edge_list[idx];
        if (uf.find(u) != uf.find(v)) {
            DisjointSets saved = uf;  // small n; copy instead of rollback
            uf.unite(u, v);
            chosen.push_back(edge_list[idx]);
            if (run(idx + 1, uf)) return true;
            chosen.pop_back();
            uf = saved;
        }
        return run(idx + 1, uf);
    }
};

}  // namespace

std::optional<Graph> find_spanning_caterpillar_same_diameter(const Graph& g) {
    if (g.order() < 2 || !is_connected(g))
        throw std::invalid_argument("spanning caterpillar search needs a connected graph on >= 2 vertices");
    CaterpillarSearch search;
    search.g = &g;
    search.edge_list = g.edges();
    search.n = g.order();
    search.target_diam = diameter(g).value();
    DisjointSets uf(g.order());
    search.run(0, uf);
    return search.found;
}

TreeGammaClassification classify_tree_gamma(const Graph& t) {
    require_tree(t, "classify_tree_gamma");
    if (t.order() < 3) throw std::invalid_argument("classify_tree_gamma requires n >= 3");

    const LeafSupport ls = leaves_and_supports(t);
    TreeGammaClassification out;
    const Extremal gamma = min_in_family(t, [&](VertexSet s) { return is_dominating(t, s); }).value();
    out.gamma = gamma.value;
    out.n_minus_leaves = t.order() - ls.leaves.size();
    out.characterization_holds = (ls.leaves | ls.supports) == t.vertices();

    // Swap each leaf in the witness for its support vertex; for n >= 3 a
    // support is never a leaf, so the leaf count drops every step.
    VertexSet s = gamma.witness;
    while ((s & ls.leaves) != VertexSet()) {
        const int leaf = (s & ls.leaves).front();
        const int support = t.neighbors(leaf).front();
        s = s.without(leaf).with(support);
    }
    if (s.size() != gamma.value || !is_dominating(t, s))
        throw std::logic_error("leaf-free rewrite of a minimum dominating set failed");
    out.leafless_gamma_set = s;
    return out;
}

}  // namespace isodom
