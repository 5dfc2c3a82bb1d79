#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"
#include "turan/construct.hpp"
#include "turan/graph.hpp"
#include "turan/graph6.hpp"

using namespace turan;

TEST_CASE("builders enforce simple-graph invariants") {
    GraphBuilder b(3);
    CHECK_THROWS_AS(b.add_edge(0, 0), argument_error);
    CHECK_THROWS_AS(b.add_edge(0, 3), argument_error);
    CHECK_THROWS_AS(GraphBuilder(-1), argument_error);
    CHECK_THROWS_AS(GraphBuilder(kMaxVertices + 1), capacity_error);

    Graph g = from_edges(3, {{0, 1}, {1, 2}});
    CHECK(g.has_edge(1, 0));
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("join counts vertices and edges") {
    CHECK(join(clique(1), clique(1)) == clique(2));

    Graph j = join(clique(1), turan_graph(6, 2));
    CHECK(j.order() == 7);
    CHECK(j.edge_count() == 15);
    // independent cross-check by edge enumeration
    long long edges = 0;
    for (int u = 0; u < j.order(); ++u)
        for (int v = u + 1; v < j.order(); ++v)
            if (j.has_edge(u, v)) ++edges;
    CHECK(edges == 15);

    Graph g = from_edges(4, {{0, 1}, {2, 3}});
    CHECK(join(Graph(), g) == g);
}

TEST_CASE("disjoint union keeps the parts apart") {
    Graph two_triangles = disjoint_union(clique(3), clique(3));
    CHECK(two_triangles.order() == 6);
    CHECK(two_triangles.edge_count() == 6);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) CHECK_FALSE(two_triangles.has_edge(u, v));

    Graph g = from_edges(3, {{0, 2}});
    CHECK(disjoint_union(Graph(), g) == g);
    CHECK(disjoint_union(clique(2), clique(1)).edge_count() == 1);
}

TEST_CASE("join and union capacity errors") {
    Graph big = Graph::edgeless(kMaxVertices);
    CHECK_THROWS_AS(join(big, clique(1)), capacity_error);
    CHECK_THROWS_AS(disjoint_union(big, clique(1)), capacity_error);
}

TEST_CASE("induced subgraphs") {
    CHECK(induced(clique(5), {0, 2, 4}) == clique(3));
    CHECK(induced(test::cycle_graph(5), {0, 1, 2}) == test::path_graph(3));
    CHECK(induced(clique(4), {}).order() == 0);
    CHECK_THROWS_AS(induced(clique(3), {0, 5}), argument_error);
    CHECK_THROWS_AS(induced(clique(3), {0, 0}), argument_error);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = test::random_graph(6, 0.4, rng);
        std::vector<int> all(6);
        std::iota(all.begin(), all.end(), 0);
        CHECK(induced(g, all) == g);
    }
}

TEST_CASE("additivity of vertex and edge counts", "[property]") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Graph a = test::random_graph(1 + static_cast<int>(rng() % 6), 0.5, rng);
        Graph b = test::random_graph(1 + static_cast<int>(rng() % 6), 0.5, rng);
        Graph u = disjoint_union(a, b);
        Graph j = join(a, b);
        CHECK(u.order() == a.order() + b.order());
        CHECK(j.order() == a.order() + b.order());
        CHECK(u.edge_count() == a.edge_count() + b.edge_count());
        CHECK(j.edge_count() == a.edge_count() + b.edge_count() +
                                    static_cast<long long>(a.order()) * b.order());
    }
}

TEST_CASE("worked graph6 encodings") {
    CHECK(g6_encode(clique(3)) == "Bw");
    CHECK(g6_encode(test::path_graph(3)) == "Bg");
    CHECK(g6_encode(clique(1)) == "@");
    CHECK(g6_encode(Graph()) == "?");
    CHECK(g6_decode("Bw") == clique(3));
    CHECK(g6_decode("@") == clique(1));
}

TEST_CASE("graph6 round trip on random graphs up to 8 vertices", "[property]") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        int n = static_cast<int>(rng() % 9);
        Graph g = test::random_graph(n, 0.4, rng);
        std::string enc = g6_encode(g);
        CHECK(g6_decode(enc) == g);
        CHECK(g6_encode(g6_decode(enc)) == enc);
    }
}

TEST_CASE("graph6 long form for n >= 63") {
    Graph g = turan_graph(70, 2);
    std::string enc = g6_encode(g);
    CHECK(enc.size() == 4 + (static_cast<size_t>(70) * 69 / 2 + 5) / 6);
    CHECK(g6_decode(enc) == g);
}

TEST_CASE("graph6 decode errors carry byte offsets") {
    CHECK_THROWS_AS(g6_decode(""), parse_error);
    CHECK_THROWS_AS(g6_decode("B"), parse_error);      // missing bit bytes
    CHECK_THROWS_AS(g6_decode("Bww"), parse_error);    // trailing bytes
    CHECK_THROWS_AS(g6_decode("B\x1f"), parse_error);  // byte below 63
    CHECK_THROWS_AS(g6_decode("AO"), parse_error);     // nonzero padding
    try {
        g6_decode("Bww");
    } catch (const parse_error& e) {
        CHECK(e.byte_offset() == 2);
    }
}

TEST_CASE("relabel validates and preserves structure") {
    Graph p3 = test::path_graph(3);
    Graph r = relabel(p3, std::vector<int>{2, 0, 1});
    CHECK(r.edge_count() == 2);
    CHECK(r.has_edge(2, 0));
    CHECK(r.has_edge(0, 1));
    CHECK_THROWS_AS(relabel(p3, std::vector<int>{0, 0, 1}), argument_error);
    CHECK_THROWS_AS(relabel(p3, std::vector<int>{0, 1}), argument_error);
}
