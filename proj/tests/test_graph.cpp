#include "doctest.h"

#include <sstream>

#include "isodom/enumerate.hpp"
#include "isodom/graph.hpp"
#include "oracles.hpp"

using namespace isodom;

namespace {

Graph path(int k) { return make_named(Family::path, k); }
Graph cycle(int k) { return make_named(Family::cycle, k); }
Graph complete(int k) { return make_named(Family::complete, k); }
Graph star(int k) { return make_named(Family::star, k); }

}  // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("vertex set algebra and iteration") {
    VertexSet s = VertexSet::single(0).with(2).with(5);
    CHECK(s.size() == 3);
    CHECK(s.contains(2));
    CHECK(!s.contains(1));
    CHECK(s.front() == 0);
    CHECK(s.to_vector() == std::vector<int>{0, 2, 5});
    CHECK(s.to_string() == "{0,2,5}");
    CHECK((s - VertexSet::single(2)).to_vector() == std::vector<int>{0, 5});
    CHECK((s & VertexSet::full(3)) == VertexSet::single(0).with(2));
    CHECK(VertexSet::full(3).to_vector() == std::vector<int>{0, 1, 2});
    CHECK(VertexSet::single(1).subset_of(VertexSet::full(2)));
    CHECK(!VertexSet::full(3).subset_of(VertexSet::full(2)));
    CHECK(VertexSet().empty());
}

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS_AS(Graph(0), std::invalid_argument);
    CHECK_THROWS_AS(Graph(65), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_adjacency({0b010, 0b000, 0b000}), std::invalid_argument);  // asymmetric
    CHECK_THROWS_AS(Graph::from_adjacency({0b1000, 0b000, 0b000}), std::invalid_argument); // stray bit
    const Graph g(4, {{0, 1}, {1, 2}});
    CHECK(g.order() == 4);
    CHECK(g.size() == 2);
    CHECK(g.adjacent(1, 0));
    CHECK_THROWS_AS(g.degree(7), std::out_of_range);
}

TEST_CASE("open and closed neighborhoods") {
    const Graph p3 = path(3);
    CHECK(open_neighborhood(p3, VertexSet::single(1)) == VertexSet::single(0).with(2));
    CHECK(open_neighborhood(p3, VertexSet()) == VertexSet());
    const Graph c4 = cycle(4);
    CHECK(open_neighborhood(c4, VertexSet::single(0).with(2)) == VertexSet::single(1).with(3));

    // closed = open union the set itself, across a spread of graphs and subsets
    for (const Graph& g : enumerate_connected_graphs(5)) {
        for (std::uint64_t bits = 0; bits < 32; ++bits) {
            const VertexSet s(bits);
            CHECK(closed_neighborhood(g, s) == (open_neighborhood(g, s) | s));
        }
    }
}

TEST_CASE("degrees") {
    const Graph k4 = complete(4);
    for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
    const Graph s3 = star(3);
    CHECK(s3.degree(0) == 3);
    CHECK(s3.degree(1) == 1);
    CHECK(Graph(2).degree(0) == 0);  // isolated
}

TEST_CASE("bfs distances") {
    CHECK(distances_from(path(4), 0) == std::vector<int>{0, 1, 2, 3});
    CHECK(distances_from(complete(3), 0) == std::vector<int>{0, 1, 1});
    const Graph split(3, {{0, 1}});  // K2 + K1
    const auto d = distances_from(split, 0);
    CHECK(d[2] == kUnreached);
    CHECK_THROWS_AS(distances_from(split, 9), std::out_of_range);
}

TEST_CASE("diameter") {
    CHECK(diameter(path(4)) == 3);
    CHECK(diameter(complete(2)) == 1);
    CHECK(diameter(complete(6)) == 1);
    CHECK(diameter(Graph(1)) == 0);
    CHECK(oracle::diameter_fw(cycle(5)) == 2);  // independent all-pairs route
    CHECK(diameter(cycle(5)) == 2);

    // against the Floyd-Warshall oracle, and the disconnected <=> infinite
    // equivalence, over every labeled graph on 4 vertices
    for (unsigned mask = 0; mask < (1u << 6); ++mask) {
        std::vector<std::pair<int, int>> edges;
        int bit = 0;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v, ++bit)
                if ((mask >> bit) & 1) edges.emplace_back(u, v);
        const Graph g(4, edges);
        CHECK(diameter(g) == oracle::diameter_fw(g));
        CHECK(diameter(g).has_value() == is_connected(g));
    }
}

TEST_CASE("connectivity") {
    CHECK(is_connected(path(5)));
    CHECK(!is_connected(Graph(3, {{0, 1}})));
    CHECK(is_connected(Graph(1)));
    CHECK(component_count(Graph(5, {{0, 1}, {2, 3}})) == 3);
    CHECK(is_tree(path(6)));
    CHECK(!is_tree(cycle(4)));
    CHECK(is_bipartite(cycle(4)));
    CHECK(!is_bipartite(cycle(5)));
}

TEST_CASE("leaves and supports") {
    const auto p4 = leaves_and_supports(path(4));
    CHECK(p4.leaves == VertexSet::single(0).with(3));
    CHECK(p4.supports == VertexSet::single(1).with(2));
    const auto s3 = leaves_and_supports(star(3));
    CHECK(s3.leaves == VertexSet::single(1).with(2).with(3));
    CHECK(s3.supports == VertexSet::single(0));
    const auto c4 = leaves_and_supports(cycle(4));
    CHECK(c4.leaves.empty());
    CHECK(c4.supports.empty());

    // disjoint on connected graphs with n >= 3; K2 is the exact exception
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : enumerate_connected_graphs(n)) {
            const auto ls = leaves_and_supports(g);
            CHECK((ls.leaves & ls.supports).empty());
        }
    const auto k2 = leaves_and_supports(complete(2));
    CHECK(k2.leaves == VertexSet::full(2));
    CHECK(k2.supports == VertexSet::full(2));
}

TEST_CASE("complement") {
    const Graph k4c = complement(complete(4));
    CHECK(k4c.size() == 0);
    CHECK(k4c.order() == 4);
    for (const Graph& g : enumerate_connected_graphs(5)) CHECK(complement(complement(g)) == g);
    CHECK(oracle::brute_isomorphic(complement(cycle(5)), cycle(5)));
}

TEST_CASE("induced subgraphs") {
    const Graph c4 = cycle(4);
    const auto edge = induced_subgraph(c4, VertexSet::single(0).with(1));
    CHECK(edge.graph.size() == 1);
    CHECK(edge.vertex_map == std::vector<int>{0, 1});
    const auto anti = induced_subgraph(c4, VertexSet::single(0).with(2));
    CHECK(anti.graph.size() == 0);
    const auto whole = induced_subgraph(c4, c4.vertices());
    CHECK(whole.graph == c4);
    CHECK_THROWS_AS(induced_subgraph(c4, VertexSet()), std::invalid_argument);
}

TEST_CASE("graph6 decoding") {
    const Graph k1 = parse_graph6("@");
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);

    const Graph g = parse_graph6("D?{");
    CHECK(g.order() == 5);
    CHECK(g.size() == 4);
    CHECK(emit_graph6(g) == "D?{");
    // decodes to a star with center 4
    for (int v = 0; v < 4; ++v) CHECK(g.adjacent(v, 4));
    CHECK(!g.adjacent(0, 1));

    CHECK(parse_graph6(emit_graph6(cycle(5))) == cycle(5));
}

TEST_CASE("graph6 errors are distinct") {
    auto code_of = [](const char* text) {
        try {
            (void)parse_graph6(text);
        } catch (const Graph6ParseError& e) {
            return e.code();
        }
        return Graph6Error::empty_input;  // not reached in these cases
    };
    CHECK(code_of("") == Graph6Error::empty_input);
    CHECK(code_of("D?{\xc8") == Graph6Error::byte_out_of_range);  // byte 200
    CHECK(code_of("D?") == Graph6Error::bad_length);
    CHECK(code_of("D?{{") == Graph6Error::trailing_garbage);
    CHECK(code_of("?") == Graph6Error::unsupported_order);   // n = 0
    CHECK(code_of("~~????") == Graph6Error::unsupported_order);
    CHECK(code_of("~??") == Graph6Error::bad_length);
}

TEST_CASE("graph6 round trip") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_connected_graphs(n)) CHECK(parse_graph6(emit_graph6(g)) == g);
    // large orders use the multi-byte size field
    for (int n : {62, 63, 64}) {
        const Graph p = make_named(Family::path, n);
        CHECK(parse_graph6(emit_graph6(p)) == p);
    }
    // seeded random graphs, not necessarily connected
    std::uint64_t state = 12345;
    auto next = [&state] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(next() % 32);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (next() & 1) edges.emplace_back(u, v);
        const Graph g(n, edges);
        CHECK(parse_graph6(emit_graph6(g)) == g);
    }
}

TEST_CASE("graph6 stream reading") {
    std::istringstream in(">>graph6<<@\nD?{\n\nA_\n");
    const auto graphs = read_graph6_stream(in);
    REQUIRE(graphs.size() == 3);
    CHECK(graphs[0].order() == 1);
    CHECK(graphs[1].order() == 5);
    CHECK(graphs[2].order() == 2);

    std::istringstream bad("@\nZZ###!!\x7f\n");
    try {
        (void)read_graph6_stream(bad);
        CHECK(false);
    } catch (const Graph6ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("edge list parsing") {
    std::istringstream in("# a triangle plus a pendant\n0 1\n1 2\n2 0\n2 3\n");
    const Graph g = parse_edge_list(in);
    CHECK(g.order() == 4);
    CHECK(g.size() == 4);
    CHECK(g.adjacent(2, 3));

    std::istringstream bad("0 1\n2\n");
    CHECK_THROWS_AS(parse_edge_list(bad), std::invalid_argument);
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(parse_edge_list(empty), std::invalid_argument);
}

TEST_SUITE_END();
