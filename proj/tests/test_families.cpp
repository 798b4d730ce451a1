#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "families.hpp"
#include "fibration.hpp"

TEST_CASE("geometric family: size, structure and closed-form scores") {
    long j = 10, k = 36, r = 2;
    auto f = geometric_family(j, k, r);
    CHECK((long)f.graph.n == 6 + j + k + 2 * r);
    CHECK(is_connected(f.graph));
    CHECK_FALSE(f.graph.has_edge(f.x, f.y));
    auto rep = oracle_check(f);
    std::string first_mismatch = rep.mismatches.empty() ? "" : rep.mismatches[0].found;
    INFO("first mismatch: " << first_mismatch);
    CHECK(rep.ok());
    CHECK(rep.checked > 0);
}

TEST_CASE("geometric family closed forms hold on a parameter grid") {
    for (long r = 1; r <= 3; r++) {
        auto f = geometric_family(5 * r, 18 * r, r);
        CHECK(oracle_check(f).ok());
    }
}

TEST_CASE("eigen family: printed base matrix and oracle") {
    auto f = eigen_family(7);
    REQUIRE(f.base.has_value());
    REQUIRE(f.coloring.has_value());
    CHECK((long)f.graph.n == 7 * 7 - 7 + 6); // k^2 - k + 6
    auto q = quotient(to_multigraph(f.graph), *f.coloring);
    CHECK(q.matrix() == f.base->matrix());
    CHECK(oracle_check(f).ok());
}

TEST_CASE("eigen family star-size override") {
    auto f = eigen_family(8, 40);
    int leaves = 0;
    for (int l : f.labels) leaves += (l == 5);
    CHECK(leaves == 40);
}

TEST_CASE("eigen family rejects degenerate parameters") {
    CHECK_THROWS(eigen_family(2));
}

TEST_CASE("small eigenvector graphs carry their caption oracles") {
    CHECK(oracle_check(eigen_small()).ok());
    auto g = eigen_rank_small();
    // disconnected before the edge by design; the added edge joins the parts
    CHECK_FALSE(is_connected(g.graph));
    CHECK(is_connected(add_edge(g.graph, g.x, g.y)));
    CHECK_FALSE(g.graph.has_edge(g.x, g.y));
}

TEST_CASE("pagerank family: both printed bases match the quotient") {
    auto f = pagerank_family(13);
    REQUIRE(f.base.has_value());
    REQUIRE(f.base_post.has_value());
    CHECK((long)f.graph.n == 2 * 13 + 6);
    auto q = quotient(row_normalize(to_multigraph(f.graph)), *f.coloring);
    CHECK(q.matrix() == f.base->matrix());
    auto qp = quotient(row_normalize(to_multigraph(add_edge(f.graph, f.x, f.y))), *f.coloring);
    CHECK(qp.matrix() == f.base_post->matrix());
    CHECK(oracle_check(f).ok());
}

TEST_CASE("pagerank top family is well-formed") {
    auto f = pagerank_top_family(5);
    CHECK(is_connected(f.graph));
    CHECK_FALSE(f.graph.has_edge(f.x, f.y));
    REQUIRE(f.coloring.has_value());
    // the coloring is equitable on the row-normalized graph
    CHECK_NOTHROW(quotient(row_normalize(to_multigraph(f.graph)), *f.coloring));
}

TEST_CASE("star-size table is monotone in k") {
    auto& t = eigen_star_table();
    REQUIRE(t.size() >= 3);
    for (size_t i = 1; i < t.size(); i++) {
        CHECK(t[i].first > t[i - 1].first);
        CHECK(t[i].second > t[i - 1].second);
    }
}

TEST_CASE("oracle_check reports mismatches with the found value") {
    auto f = eigen_small();
    REQUIRE(!f.oracle.empty());
    f.oracle[0].expected_f += 1.0; // corrupt one expectation
    f.oracle[0].expected += 1;
    auto rep = oracle_check(f);
    CHECK_FALSE(rep.ok());
    CHECK(rep.mismatches.size() == 1);
    CHECK_FALSE(rep.mismatches[0].found.empty());
}
