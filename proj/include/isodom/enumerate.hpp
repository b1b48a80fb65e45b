#pragma once

// Exhaustive generation of non-isomorphic connected graphs and trees, plus
// seeded random graphs and the standard named families.  Generation works by
// augmentation: every connected graph on n vertices arises from one on n-1 by
// adding a vertex (every connected graph has a non-cut vertex), and every tree
// arises by attaching a leaf.  Duplicates are filtered with a canonical form
// computed by exact search over vertex placements.

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "isodom/graph.hpp"

namespace isodom {

inline constexpr int kMaxConnectedEnumerationOrder = 9;
inline constexpr int kMaxTreeEnumerationOrder = 14;

// Canonical form: the lexicographically greatest tuple of packed adjacency
// columns over all orderings of the vertices (column j = adjacency of the
// j-th placed vertex to the earlier ones).  Two graphs are isomorphic iff
// their keys are equal.  Exact permutation search with prefix pruning and a
// twin skip; practical for the enumeration sizes here (n <= 14).
using CanonicalKey = std::vector<std::uint64_t>;
CanonicalKey canonical_key(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

// Single-consumer stream yielding exactly one representative per isomorphism
// class, in a deterministic order for fixed parameters.
class EnumerationCursor {
public:
    enum class Kind { connected_graphs, trees };

    EnumerationCursor(Kind kind, int n);
    std::optional<Graph> next();

    Kind kind() const { return kind_; }
    int target_order() const { return target_n_; }

private:
    struct RawGraph {
        std::vector<std::uint64_t> adj;
    };

    bool advance_mask();

    Kind kind_;
    int target_n_;
    std::vector<RawGraph> parents_;
    std::size_t parent_index_ = 0;
    std::uint64_t mask_ = 0;       // neighbor mask for the vertex being added
    bool exhausted_ = false;
    bool emitted_base_ = false;    // n == 1 case
    struct KeySetImpl;
    std::shared_ptr<KeySetImpl> seen_;
};

std::vector<Graph> enumerate_connected_graphs(int n);  // 1 <= n <= 9
std::vector<Graph> enumerate_trees(int n);             // 1 <= n <= 14

// Erdos-Renyi G(n, p) conditioned on connectivity by rejection; deterministic
// for a fixed seed.  Throws std::runtime_error when the rejection budget
// (1000 samples) is exhausted.
Graph random_connected_graph(int n, double edge_prob, std::uint64_t seed);

enum class Family { path, cycle, complete, star, complete_bipartite };
std::optional<Family> family_from_name(std::string_view name);

// path k: vertices 0-1-...-k-1; cycle k (k >= 3); complete k; star k: center 0
// with k leaves (order k+1); complete_bipartite k: K_{k,k}.
Graph make_named(Family family, int k);

}  // namespace isodom
