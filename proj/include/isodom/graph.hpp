#pragma once

// Small-graph core: immutable simple undirected graphs on up to 64 vertices,
// stored as one 64-bit neighborhood mask per vertex.  Vertex subsets are a
// single machine word, which makes every set-algebra step in the solvers a
// handful of bit operations.

#include <cstdint>
#include <bit>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace isodom {

inline constexpr int kMaxVertices = 64;

// A subset of {0,...,n-1} packed into one word.  Which n it belongs to is
// contextual; operations that need the universe take the graph as well.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
    // The full set {0,...,n-1}.
    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
    // Lowest-indexed member; set must be nonempty.
    constexpr int front() const { return std::countr_zero(bits_); }

    constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
    // Set difference.
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }

    // Iterates members in increasing order.
    class iterator {
    public:
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }
    private:
        std::uint64_t rest_;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const;
    std::string to_string() const;  // "{0,2,5}"

private:
    std::uint64_t bits_ = 0;
};

// Immutable simple undirected graph over vertices 0..n-1, 1 <= n <= 64.
// adjacency(v) is the open neighborhood N(v).  Construction validates
// symmetry, irreflexivity and that no mask bit >= n is set; after that,
// instances are safe to share across threads.
class Graph {
public:
    // Edgeless graph on n vertices.
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph from_adjacency(std::vector<std::uint64_t> adjacency);

    int order() const { return n_; }                   // |V|
    int size() const { return m_; }                    // |E|
    VertexSet vertices() const { return VertexSet::full(n_); }
    VertexSet neighbors(int v) const { check_vertex(v); return VertexSet(adj_[v]); }
    bool adjacent(int u, int v) const { check_vertex(u); check_vertex(v); return (adj_[u] >> v) & 1; }
    int degree(int v) const { check_vertex(v); return std::popcount(adj_[v]); }

    // Edges as (u, v) pairs with u < v, lexicographically ordered.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    Graph(int n, std::vector<std::uint64_t> adjacency, int m) : n_(n), m_(m), adj_(std::move(adjacency)) {}
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex index " + std::to_string(v) + " out of range");
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint64_t> adj_;
};

// --- neighborhoods and metrics ---------------------------------------------

VertexSet open_neighborhood(const Graph& g, VertexSet s);
VertexSet closed_neighborhood(const Graph& g, VertexSet s);

inline constexpr int kUnreached = -1;

// BFS distances from v; entries are kUnreached for vertices in other components.
std::vector<int> distances_from(const Graph& g, int v);

// Max finite distance over all pairs; nullopt when g is disconnected, 0 for n=1.
std::optional<int> diameter(const Graph& g);

bool is_connected(const Graph& g);
int component_count(const Graph& g);
bool is_tree(const Graph& g);
bool is_bipartite(const Graph& g);

struct LeafSupport {
    VertexSet leaves;    // degree-1 vertices
    VertexSet supports;  // vertices adjacent to a leaf
};
LeafSupport leaves_and_supports(const Graph& g);

Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map;  // vertex_map[new index] = original vertex
};
// Subgraph induced by s, relabeled to 0..|s|-1 in increasing original order.
// Throws std::invalid_argument when s is empty.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

// --- graph6 and edge-list I/O -----------------------------------------------

enum class Graph6Error {
    empty_input,
    byte_out_of_range,
    bad_length,
    trailing_garbage,
    unsupported_order,
};

class Graph6ParseError : public std::runtime_error {
public:
    Graph6ParseError(Graph6Error code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    Graph6Error code() const { return code_; }
private:
    Graph6Error code_;
};

// Parses one graph6 record (no trailing newline).  Bit-exact per the standard
// column-major upper-triangle packing with offset 63.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Reads newline-delimited graph6 records; skips blank lines and an optional
// ">>graph6<<" header.  Parse failures are rethrown with the line number
// prepended to the message.
std::vector<Graph> read_graph6_stream(std::istream& in);

// Edge-list text: one "u v" pair per line, 0-indexed; '#' starts a comment.
// The order is max(vertex index) + 1.
Graph parse_edge_list(std::istream& in);

}  // namespace isodom
