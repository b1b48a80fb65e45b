#pragma once

// Characterization predicates and constructive procedures: dominating vertex,
// leaf-or-support classification, caterpillar recognition with spine code,
// component-preserving spanning trees, and spanning-caterpillar search.

#include <optional>
#include <vector>

#include "isodom/graph.hpp"

namespace isodom {

// True iff some vertex is adjacent to every other vertex (degree n-1).
// K1 qualifies: degree 0 = n-1.
bool has_dominating_vertex(const Graph& g);

// True iff every vertex of the tree is a leaf or adjacent to a leaf.
// Throws std::invalid_argument when t is not a tree.
bool all_leaf_or_support(const Graph& t);

struct CaterpillarCode {
    int spine_length = 0;           // k
    std::vector<int> leaf_counts;   // (l_1, ..., l_k); k + sum = n
};

// Removes all leaves; when the remainder is a path v_1..v_k, returns k and
// the per-spine-vertex leaf counts, canonicalized to the lexicographic
// minimum of the tuple and its reversal.  nullopt when the remainder is not
// a path.  Trees on <= 2 vertices take the whole tree as the spine.
// Throws std::invalid_argument when t is not a tree.
std::optional<CaterpillarCode> caterpillar_code(const Graph& t);

struct SpanningTreeCertificate {
    Graph tree;
    VertexSet dset;
    int components_before = 0;  // components of G[D]
    int components_after = 0;   // components of T[D]
};

// Builds a spanning tree T of g in which dset stays a total dominating set
// and the induced subgraph on dset keeps its component count: a spanning
// forest inside each component of G[D], one edge from each outside vertex to
// its lowest-indexed neighbor in D, then completion with remaining edges in
// lexicographic order (cycle-free union).  Throws std::invalid_argument
// unless g is connected and dset total-dominates g.
SpanningTreeCertificate build_spanning_tree_preserving(const Graph& g, VertexSet dset);

// Re-derives every certificate invariant from scratch against the source
// graph: spanning tree shape, edge containment, total domination of the
// tree by dset, and component-count preservation.
bool certificate_valid(const Graph& source, const SpanningTreeCertificate& cert);

// Exhaustive search over spanning trees of g for a caterpillar with
// diameter(T) = diameter(g); first one found in lexicographic edge order, or
// nullopt.  Throws std::invalid_argument unless g is connected with n >= 2.
std::optional<Graph> find_spanning_caterpillar_same_diameter(const Graph& g);

struct TreeGammaClassification {
    int gamma = 0;
    int n_minus_leaves = 0;
    bool characterization_holds = false;  // every vertex a leaf or a support
    VertexSet leafless_gamma_set;         // minimum dominating set avoiding all leaves
};

// gamma, n - l, and the leaf-or-support predicate for a tree on n >= 3
// vertices; the returned witness is a minimum dominating set containing no
// leaf, obtained by swapping each leaf for its support vertex.
TreeGammaClassification classify_tree_gamma(const Graph& t);

}  // namespace isodom
