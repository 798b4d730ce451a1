#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "centrality.hpp"
#include "families.hpp"

namespace {
UndirectedGraph path(int n) {
    UndirectedGraph g;
    g.n = n;
    for (int v = 0; v + 1 < n; v++) g.edges.insert({v, v + 1});
    return g;
}
UndirectedGraph star(int leaves) {
    UndirectedGraph g;
    g.n = leaves + 1;
    for (int v = 1; v <= leaves; v++) g.edges.insert({0, v});
    return g;
}
} // namespace

TEST_CASE("closeness on a path") {
    auto s = closeness(path(3));
    CHECK(s.rat[1] == BigRational(1, 2)); // distances 1+1
    CHECK(s.rat[0] == BigRational(1, 3)); // distances 1+2
}

TEST_CASE("harmonic on a path") {
    auto s = harmonic(path(3));
    CHECK(s.rat[1] == 2);
    CHECK(s.rat[0] == BigRational(3, 2));
}

TEST_CASE("betweenness counts shortest-path load exactly") {
    auto s = betweenness(path(3));
    CHECK(s.rat[1] == 1); // the one middle vertex carries pair (0,2)
    CHECK(s.rat[0] == 0);
    // C4: two equal shortest paths split the dependency
    auto g = parse_edge_list("0 1\n1 2\n2 3\n3 0\n");
    auto c = betweenness(g);
    for (int v = 0; v < 4; v++) CHECK(c.rat[v] == BigRational(1, 2));
}

TEST_CASE("seeley is degree over total degree") {
    auto s = degree_seeley(star(3));
    CHECK(s.rat[0] == BigRational(1, 2));
    CHECK(s.rat[1] == BigRational(1, 6));
    CHECK_THROWS_AS(degree_seeley(UndirectedGraph{}), std::domain_error);
}

TEST_CASE("katz closed form on K2") {
    auto s = katz(path(2), BigRational(1, 2));
    CHECK(s.rat[0] == 2);
    CHECK(s.rat[1] == 2);
    // alpha must stay below 1/rho = 1
    CHECK_THROWS(katz(path(2), BigRational(1)));
}

TEST_CASE("resolvent_solve solves x (I - alpha M) = v") {
    std::vector<std::vector<BigRational>> m{{0, 1}, {1, 0}};
    auto x = resolvent_solve(m, BigRational(1, 2), {1, 1});
    CHECK(x == std::vector<BigRational>{2, 2});
}

TEST_CASE("pagerank on K2 and on a star") {
    auto s = pagerank(path(2), BigRational(17, 20));
    CHECK(s.rat[0] == BigRational(1, 2));
    CHECK(s.rat[1] == BigRational(1, 2));
    auto t = pagerank(star(3), BigRational(1, 2));
    CHECK(t.rat[1] == t.rat[2]);
    CHECK(t.rat[0] > t.rat[1]);
    BigRational total = t.rat[0] + t.rat[1] + t.rat[2] + t.rat[3];
    CHECK(total == 1);
}

TEST_CASE("eigenvector normalizations agree on ranking") {
    auto g = parse_edge_list("0 1\n1 2\n2 3\n1 3\n");
    auto l1 = eigenvector(g, EigenNorm::L1);
    auto l2 = eigenvector(g, EigenNorm::L2);
    auto pr = eigenvector(g, EigenNorm::ProjectOnes);
    double s1 = 0, s2 = 0;
    for (int v = 0; v < 4; v++) {
        s1 += l1.flt[v];
        s2 += l2.flt[v] * l2.flt[v];
    }
    CHECK(s1 == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(s2 == doctest::Approx(1.0).epsilon(1e-9));
    for (int u = 0; u < 4; u++)
        for (int v = 0; v < 4; v++) {
            CHECK(l1.cmp(u, v) == l2.cmp(u, v));
            CHECK(l1.cmp(u, v) == pr.cmp(u, v));
        }
}

TEST_CASE("eigenvector float scores match a published small graph") {
    auto f = eigen_small();
    auto s = eigenvector(f.graph, EigenNorm::L1);
    CHECK(s.flt[0] == doctest::Approx(0.30656).epsilon(1e-3));
}

TEST_CASE("compute_measure dispatch") {
    CHECK(is_known_measure("closeness"));
    CHECK(is_known_measure("eigenvector:proj"));
    CHECK_FALSE(is_known_measure("eigenvector"));
    CHECK_FALSE(is_known_measure("nope"));
    auto s = compute_measure(path(3), "harmonic", 0);
    CHECK(s.measure == "harmonic");
    CHECK_THROWS_AS(compute_measure(path(3), "nope", 0), std::invalid_argument);
}

TEST_CASE("tied scores compare as zero under the float tolerance") {
    auto s = eigenvector(star(4), EigenNorm::L1);
    CHECK(s.cmp(1, 2) == 0);
    CHECK(s.cmp(0, 1) == 1);
}
