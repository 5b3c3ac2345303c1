#include <doctest.h>

#include <sstream>

#include "corpus.hpp"
#include "wrp/errors.hpp"
#include "wrp/graph.hpp"
#include "wrp/partition.hpp"

using namespace wrp;

TEST_CASE("edge list parsing") {
    SUBCASE("plain pairs") {
        std::istringstream in("0 1\n1 2\n");
        Graph g = load_edge_list(in);
        CHECK(g.vertex_count() == 3);
        CHECK(g.edge_count() == 2);
        CHECK(g.has_edge(0, 1));
        CHECK(g.has_edge(2, 1));
        CHECK_FALSE(g.has_edge(0, 2));
    }
    SUBCASE("header adds isolated vertices") {
        std::istringstream in("n 4\n0 1\n");
        Graph g = load_edge_list(in);
        CHECK(g.vertex_count() == 4);
        CHECK(g.edge_count() == 1);
        CHECK(g.degree(2) == 0);
        CHECK(g.degree(3) == 0);
    }
    SUBCASE("comments and duplicates") {
        std::istringstream in("# a triangle\n0 1\n1 2 # dup below\n2 1\n0 2\n");
        Graph g = load_edge_list(in);
        CHECK(g.vertex_count() == 3);
        CHECK(g.edge_count() == 3);
    }
    SUBCASE("self loop rejected") {
        std::istringstream in("0 0\n");
        CHECK_THROWS_AS(load_edge_list(in), validation_error);
    }
    SUBCASE("malformed line names its number") {
        std::istringstream in("0 1\nnot an edge\n");
        try {
            load_edge_list(in);
            FAIL("expected validation_error");
        } catch (const validation_error& e) {
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
    }
    SUBCASE("header too small for edges") {
        std::istringstream in("n 2\n0 5\n");
        CHECK_THROWS_AS(load_edge_list(in), validation_error);
    }
    SUBCASE("empty input") {
        std::istringstream in("# nothing\n");
        CHECK_THROWS_AS(load_edge_list(in), validation_error);
    }
}

TEST_CASE("edge list round trip") {
    for (const auto& [name, g] : corpus::structured_graphs()) {
        CAPTURE(name);
        std::stringstream buf;
        save_edge_list(g, buf);
        Graph back = load_edge_list(buf);
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edges() == g.edges());
    }
}

TEST_CASE("connectivity") {
    CHECK(is_connected(graphs::path(3)));
    CHECK(is_connected(graphs::complete(4)));
    CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}}))); // two disjoint edges
    CHECK(is_connected(Graph(1, {})));
}

TEST_CASE("bipartition") {
    SUBCASE("C4") {
        auto p = bipartition(graphs::cycle(4));
        REQUIRE(p.has_value());
        CHECK(p->classes() == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
    }
    SUBCASE("K3 has none") {
        CHECK_FALSE(bipartition(graphs::complete(3)).has_value());
    }
    SUBCASE("star splits center from leaves") {
        auto p = bipartition(graphs::star(3));
        REQUIRE(p.has_value());
        CHECK(p->classes() == std::vector<std::vector<int>>{{0}, {1, 2, 3}});
    }
    SUBCASE("every edge crosses the classes") {
        for (const auto& [name, g] : corpus::structured_graphs()) {
            auto p = bipartition(g);
            if (!p) continue;
            CAPTURE(name);
            for (auto [u, v] : g.edges()) CHECK(p->class_of(u) != p->class_of(v));
        }
    }
    SUBCASE("edgeless graph has no 2-class partition") {
        CHECK_FALSE(bipartition(Graph(1, {})).has_value());
        CHECK_FALSE(bipartition(Graph(3, {})).has_value());
    }
}

TEST_CASE("generators") {
    SUBCASE("complete(4) has 6 edges") {
        Graph g = generate("complete", {4});
        CHECK(g.vertex_count() == 4);
        CHECK(g.edge_count() == 6);
    }
    SUBCASE("star(3)") {
        Graph g = generate("star", {3});
        CHECK(g.vertex_count() == 4);
        CHECK(g.degree(0) == 3);
    }
    SUBCASE("petersen is 3-regular on 10 vertices") {
        Graph g = generate("petersen");
        CHECK(g.vertex_count() == 10);
        CHECK(g.edge_count() == 15);
        for (int u = 0; u < 10; ++u) CHECK(g.degree(u) == 3);
        CHECK(is_connected(g));
    }
    SUBCASE("unknown family") {
        CHECK_THROWS_AS(generate("moebius", {5}), validation_error);
        CHECK_THROWS_AS(generate("cycle", {}), validation_error);
        CHECK_THROWS_AS(generate("cycle", {2}), validation_error);
    }
}

TEST_CASE("example1 realization") {
    Graph g = graphs::example1();
    REQUIRE(g.vertex_count() == 9);
    CHECK(is_connected(g));
    CHECK(g.edge_count() == 12);

    // hub joined to the whole middle class
    for (int v = 1; v <= 4; ++v) CHECK(g.has_edge(0, v));
    // middle: one hub neighbor + two outer neighbors; outer: two middle neighbors
    for (int v = 1; v <= 4; ++v) CHECK(g.degree(v) == 3);
    for (int v = 5; v <= 8; ++v) CHECK(g.degree(v) == 2);

    // the three-class partition counts neighbors class-independently
    VertexPartition p(9, {{0}, {1, 2, 3, 4}, {5, 6, 7, 8}});
    for (int u = 1; u <= 4; ++u) {
        int hub = 0, outer = 0;
        for (int v : g.neighbors(u)) {
            if (v == 0) ++hub;
            if (v >= 5) ++outer;
        }
        CHECK(hub == 1);
        CHECK(outer == 2);
    }
}

TEST_CASE("partition validation and io") {
    SUBCASE("covering and disjoint") {
        CHECK_THROWS_AS(VertexPartition(3, {{0, 1}}), validation_error);          // misses 2
        CHECK_THROWS_AS(VertexPartition(3, {{0, 1}, {1, 2}}), validation_error);  // overlap
        CHECK_THROWS_AS(VertexPartition(3, {{0, 1, 2}, {}}), validation_error);   // empty class
        CHECK_THROWS_AS(VertexPartition(2, {{0, 1, 2}}), validation_error);       // out of range
    }
    SUBCASE("file round trip") {
        VertexPartition p(5, {{0, 4}, {1, 3}, {2}});
        std::stringstream buf;
        save_partition(p, buf);
        VertexPartition back = load_partition(buf, 5);
        CHECK(back == p);
    }
    SUBCASE("class order is the line order") {
        std::istringstream in("2\n0 1\n# comment\n3 4\n");
        VertexPartition p = load_partition(in, 5);
        REQUIRE(p.class_count() == 3);
        CHECK(p.class_members(0) == std::vector<int>{2});
        CHECK(p.class_of(4) == 2);
    }
}
