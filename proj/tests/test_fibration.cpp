#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "centrality.hpp"
#include "fibration.hpp"

namespace {
// C6 with the antipodal 2-coloring is a classic equitable partition
Multigraph cycle6() {
    UndirectedGraph g;
    g.n = 6;
    for (int v = 0; v < 6; v++) g.edges.insert({std::min(v, (v + 1) % 6), std::max(v, (v + 1) % 6)});
    return to_multigraph(g);
}
Coloring parity6() {
    Coloring c;
    c.total_n = 6;
    c.base_n = 2;
    c.map = {0, 1, 0, 1, 0, 1};
    return c;
}
} // namespace

TEST_CASE("coloring validation") {
    auto c = parity6();
    CHECK_NOTHROW(c.validate());
    CHECK(c.fibers()[0] == std::vector<int>{0, 2, 4});
    c.map[0] = 5; // not onto 0..base_n-1
    CHECK_THROWS(c.validate());
}

TEST_CASE("coloring TSV roundtrip") {
    auto c = parity6();
    auto r = parse_coloring_tsv(serialize_coloring_tsv(c));
    CHECK(r.map == c.map);
    CHECK(r.base_n == c.base_n);
}

TEST_CASE("quotient of C6 by parity") {
    auto q = quotient(cycle6(), parity6());
    auto m = q.matrix();
    CHECK(m[0][1] == 2); // each odd node receives 2 from the even fiber
    CHECK(m[1][0] == 2);
    CHECK(m[0][0] == 0);
}

TEST_CASE("quotient rejects a non-equitable coloring") {
    auto g = to_multigraph(parse_edge_list("0 1\n1 2\n"));
    Coloring c;
    c.total_n = 3;
    c.base_n = 2;
    c.map = {0, 1, 0}; // fiber {0,2} is fine, but try merging ends with middle
    CHECK_NOTHROW(quotient(g, c));
    c.map = {0, 0, 1}; // 0 and 1 have different in-weights from fiber 0
    CHECK_THROWS(quotient(g, c));
}

TEST_CASE("check_fibration certifies and reports witnesses") {
    auto g = cycle6();
    auto b = quotient(g, parity6());
    auto cert = check_fibration(g, b, parity6());
    CHECK(cert.valid);
    CHECK(cert.violations.empty());
    // wrong base: one violation per mismatched node
    Multigraph wrong;
    wrong.n = 2;
    wrong.add_arc(0, 1, 1);
    wrong.add_arc(1, 0, 2);
    auto bad = check_fibration(g, wrong, parity6());
    CHECK_FALSE(bad.valid);
    CHECK_FALSE(bad.violations.empty());
}

TEST_CASE("lift_vector repeats base entries along fibers") {
    auto l = lift_vector({BigRational(1, 3), 5}, parity6());
    CHECK(l == std::vector<BigRational>{BigRational(1, 3), 5, BigRational(1, 3), 5,
                                        BigRational(1, 3), 5});
}

TEST_CASE("lifting and resolvent commutation") {
    auto g = cycle6();
    auto b = quotient(g, parity6());
    std::vector<BigRational> u{BigRational(2, 7), BigRational(-3, 5)};
    CHECK(verify_lifting_commutation(g, b, parity6(), u));
    CHECK(verify_resolvent_commutation(g, b, parity6(), u, BigRational(1, 3)));
}
