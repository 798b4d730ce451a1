#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "graph.hpp"

TEST_CASE("parse_edge_list collapses duplicates and rejects junk") {
    auto g = parse_edge_list("0 1\n1 0\n# comment\n1 2\n");
    CHECK(g.n == 3);
    CHECK(g.edges.size() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK_THROWS_AS(parse_edge_list("0 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("0 x\n"), std::invalid_argument);
}

TEST_CASE("serialize_edge_list roundtrips") {
    auto g = parse_edge_list("0 3\n1 2\n2 3\n");
    auto h = parse_edge_list(serialize_edge_list(g));
    CHECK(g.edges == h.edges);
    CHECK(g.n == h.n);
}

TEST_CASE("add_edge") {
    auto g = parse_edge_list("0 1\n1 2\n");
    auto h = add_edge(g, 0, 2);
    CHECK(h.has_edge(0, 2));
    CHECK_FALSE(g.has_edge(0, 2)); // original untouched
    CHECK_THROWS_AS(add_edge(g, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(add_edge(g, 1, 1), std::invalid_argument);
}

TEST_CASE("bfs distances and connectivity") {
    auto g = parse_edge_list("0 1\n1 2\n2 3\n");
    auto d = bfs_distances(g, 0);
    CHECK(d.dist == std::vector<int>{0, 1, 2, 3});
    CHECK(is_connected(g));
    UndirectedGraph h;
    h.n = 3;
    h.edges.insert({0, 1});
    auto dh = bfs_distances(h, 0);
    CHECK_FALSE(dh.reachable(2));
    CHECK_FALSE(is_connected(h));
}

TEST_CASE("degree and adjacency") {
    auto g = parse_edge_list("0 1\n0 2\n0 3\n");
    CHECK(g.degree(0) == 3);
    CHECK(g.degree(1) == 1);
    CHECK(g.adjacency()[0].size() == 3);
}

TEST_CASE("multigraph matrix aggregates multiplicities and weights") {
    Multigraph m;
    m.n = 2;
    m.add_arc(0, 1, 3);
    m.add_arc(0, 1, 2);
    m.add_weighted_arc(1, 0, BigRational(2, 6)); // canonicalized on entry
    auto a = m.matrix();
    CHECK(a[0][1] == 5);
    CHECK(a[1][0] == BigRational(1, 3));
    CHECK(a[0][0] == 0);
    CHECK_THROWS(m.add_arc(0, 5));
}

TEST_CASE("to_multigraph doubles each edge") {
    auto g = parse_edge_list("0 1\n");
    auto m = to_multigraph(g);
    auto a = m.matrix();
    CHECK(a[0][1] == 1);
    CHECK(a[1][0] == 1);
}

TEST_CASE("row_normalize makes rows stochastic, null rows untouched") {
    Multigraph m;
    m.n = 3;
    m.add_arc(0, 1, 1);
    m.add_arc(0, 2, 3);
    auto r = row_normalize(m).matrix();
    CHECK(r[0][1] == BigRational(1, 4));
    CHECK(r[0][2] == BigRational(3, 4));
    CHECK(r[1][0] == 0); // null row stays null
}

TEST_CASE("base TSV roundtrips weighted and unweighted arcs") {
    Multigraph m;
    m.n = 3;
    m.add_arc(0, 1, 2);
    m.add_weighted_arc(1, 2, BigRational(5, 7));
    auto r = parse_base_tsv(serialize_base_tsv(m));
    CHECK(r.matrix() == m.matrix());
    CHECK_THROWS_AS(parse_base_tsv("0\t1\n"), std::invalid_argument);
}
