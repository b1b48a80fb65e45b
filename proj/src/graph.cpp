#include "isodom/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace isodom {

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v : *this) out.push_back(v);
    return out;
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int v : *this) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    out += '}';
    return out;
}

namespace {

int count_edges(const std::vector<std::uint64_t>& adj) {
    int twice = 0;
    for (std::uint64_t row : adj) twice += std::popcount(row);
    return twice / 2;
}

void validate_adjacency(int n, const std::vector<std::uint64_t>& adj) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in [1, 64], got " + std::to_string(n));
    const std::uint64_t universe = VertexSet::full(n).bits();
    for (int v = 0; v < n; ++v) {
        if (adj[v] & ~universe)
            throw std::invalid_argument("adjacency mask has bits beyond vertex count");
        if ((adj[v] >> v) & 1)
            throw std::invalid_argument("loop at vertex " + std::to_string(v));
        for (int u : VertexSet(adj[v]))
            if (!((adj[u] >> v) & 1))
                throw std::invalid_argument("asymmetric adjacency between " + std::to_string(v) +
                                            " and " + std::to_string(u));
    }
}

}  // namespace

Graph::Graph(int n) : n_(n), m_(0), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in [1, 64], got " + std::to_string(n));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loop edge rejected");
        adj_[u] |= std::uint64_t{1} << v;
        adj_[v] |= std::uint64_t{1} << u;
    }
    m_ = count_edges(adj_);
}

Graph Graph::from_adjacency(std::vector<std::uint64_t> adjacency) {
    const int n = static_cast<int>(adjacency.size());
    validate_adjacency(n, adjacency);
    const int m = count_edges(adjacency);
    return Graph(n, std::move(adjacency), m);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : VertexSet(adj_[u] & ~(VertexSet::full(u + 1).bits())))
            out.emplace_back(u, v);
    return out;
}

VertexSet open_neighborhood(const Graph& g, VertexSet s) {
    std::uint64_t acc = 0;
    for (int v : s) acc |= g.neighbors(v).bits();
    return VertexSet(acc);
}

VertexSet closed_neighborhood(const Graph& g, VertexSet s) {
    return open_neighborhood(g, s) | s;
}

std::vector<int> distances_from(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("BFS source out of range");
    std::vector<int> dist(static_cast<std::size_t>(g.order()), kUnreached);
    dist[v] = 0;
    VertexSet frontier = VertexSet::single(v);
    VertexSet seen = frontier;
    int level = 0;
    while (!frontier.empty()) {
        ++level;
        VertexSet next = open_neighborhood(g, frontier) - seen;
        for (int u : next) dist[u] = level;
        seen = seen | next;
        frontier = next;
    }
    return dist;
}

std::optional<int> diameter(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.order(); ++v) {
        for (int d : distances_from(g, v)) {
            if (d == kUnreached) return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

bool is_connected(const Graph& g) {
    VertexSet reach = VertexSet::single(0);
    for (;;) {
        VertexSet grown = closed_neighborhood(g, reach);
        if (grown == reach) break;
        reach = grown;
    }
    return reach == g.vertices();
}

int component_count(const Graph& g) {
    VertexSet unseen = g.vertices();
    int count = 0;
    while (!unseen.empty()) {
        ++count;
        VertexSet comp = VertexSet::single(unseen.front());
        for (;;) {
            VertexSet grown = closed_neighborhood(g, comp);
            if (grown == comp) break;
            comp = grown;
        }
        unseen = unseen - comp;
    }
    return count;
}

bool is_tree(const Graph& g) {
    return g.size() == g.order() - 1 && is_connected(g);
}

bool is_bipartite(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    for (int start = 0; start < g.order(); ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

LeafSupport leaves_and_supports(const Graph& g) {
    LeafSupport out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) out.leaves = out.leaves.with(v);
    out.supports = open_neighborhood(g, out.leaves);
    return out;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
    const std::uint64_t universe = VertexSet::full(n).bits();
    for (int v = 0; v < n; ++v)
        adj[v] = universe & ~g.neighbors(v).bits() & ~(std::uint64_t{1} << v);
    return Graph::from_adjacency(std::move(adj));
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
    if (s.empty()) throw std::invalid_argument("induced subgraph of the empty set rejected");
    if (!s.subset_of(g.vertices())) throw std::invalid_argument("subset has vertices beyond the graph");
    std::vector<int> map = s.to_vector();
    const int k = static_cast<int>(map.size());
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(map[i], map[j])) {
                adj[i] |= std::uint64_t{1} << j;
                adj[j] |= std::uint64_t{1} << i;
            }
    return InducedSubgraph{Graph::from_adjacency(std::move(adj)), std::move(map)};
}

// --- graph6 ------------------------------------------------------------------

namespace {

constexpr int kG6Offset = 63;

[[noreturn]] void fail(Graph6Error code, const std::string& msg) {
    throw Graph6ParseError(code, msg);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.empty()) fail(Graph6Error::empty_input, "empty graph6 record");
    for (std::size_t i = 0; i < text.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            fail(Graph6Error::byte_out_of_range,
                 "byte value " + std::to_string(int{c}) + " at offset " + std::to_string(i) +
                     " outside graph6 range [63,126]");
    }

    std::size_t pos = 0;
    long long n;
    if (text[0] != '~') {
        n = static_cast<unsigned char>(text[0]) - kG6Offset;
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~')
            fail(Graph6Error::unsupported_order, "8-byte graph6 order field exceeds the 64-vertex cap");
        if (text.size() < 4) fail(Graph6Error::bad_length, "truncated graph6 order field");
        n = 0;
        for (std::size_t i = 1; i <= 3; ++i)
            n = (n << 6) | (static_cast<unsigned char>(text[i]) - kG6Offset);
        pos = 4;
    }
    if (n < 1 || n > kMaxVertices)
        fail(Graph6Error::unsupported_order,
             "graph6 order " + std::to_string(n) + " outside supported range [1,64]");

    const long long pair_bits = n * (n - 1) / 2;
    const std::size_t data_bytes = static_cast<std::size_t>((pair_bits + 5) / 6);
    if (text.size() - pos < data_bytes)
        fail(Graph6Error::bad_length, "graph6 record too short: expected " + std::to_string(data_bytes) +
                                          " data bytes, got " + std::to_string(text.size() - pos));
    if (text.size() - pos > data_bytes)
        fail(Graph6Error::trailing_garbage,
             std::to_string(text.size() - pos - data_bytes) + " unexpected trailing bytes");

    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    long long bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            const unsigned char byte = static_cast<unsigned char>(text[pos + static_cast<std::size_t>(bit / 6)]);
            if ((byte - kG6Offset) >> (5 - bit % 6) & 1) {
                adj[static_cast<std::size_t>(row)] |= std::uint64_t{1} << col;
                adj[static_cast<std::size_t>(col)] |= std::uint64_t{1} << row;
            }
        }
    }
    return Graph::from_adjacency(std::move(adj));
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + kG6Offset);
    } else {
        out += '~';
        out += static_cast<char>(((n >> 12) & 63) + kG6Offset);
        out += static_cast<char>(((n >> 6) & 63) + kG6Offset);
        out += static_cast<char>((n & 63) + kG6Offset);
    }
    const long long pair_bits = static_cast<long long>(n) * (n - 1) / 2;
    int acc = 0;
    int filled = 0;
    long long emitted = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
            ++filled;
            ++emitted;
            if (filled == 6 || emitted == pair_bits) {
                acc <<= 6 - filled;  // zero padding in the final group
                out += static_cast<char>(acc + kG6Offset);
                acc = 0;
                filled = 0;
            }
        }
    }
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    long long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        if (line_no == 1 && line.rfind(">>graph6<<", 0) == 0) {
            line.erase(0, 10);
            if (line.empty()) continue;
        }
        try {
            out.push_back(parse_graph6(line));
        } catch (const Graph6ParseError& e) {
            throw Graph6ParseError(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

Graph parse_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    int max_vertex = -1;
    std::string line;
    long long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        long long u, v;
        if (!(fields >> u)) continue;  // blank or comment-only line
        if (!(fields >> v))
            throw std::invalid_argument("line " + std::to_string(line_no) + ": expected \"u v\"");
        std::string rest;
        if (fields >> rest)
            throw std::invalid_argument("line " + std::to_string(line_no) + ": trailing tokens after edge");
        if (u < 0 || v < 0 || u >= kMaxVertices || v >= kMaxVertices || u == v)
            throw std::invalid_argument("line " + std::to_string(line_no) + ": bad edge endpoints");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_vertex = std::max(max_vertex, static_cast<int>(std::max(u, v)));
    }
    if (max_vertex < 0) throw std::invalid_argument("edge list contains no edges");
    return Graph(max_vertex + 1, edges);
}

}  // namespace isodom
