#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "poly.hpp"

TEST_CASE("parse_poly and eval") {
    auto p = parse_poly("-2,0,1"); // x^2 - 2
    CHECK(p.degree() == 2);
    CHECK(p.eval(2) == 2);
    CHECK(p.eval(BigRational(1, 2)) == BigRational(-7, 4));
    CHECK_THROWS_AS(parse_poly("1,,2"), std::invalid_argument);
}

TEST_CASE("arithmetic and normalization") {
    auto p = parse_poly("1,1");         // 1 + x
    auto q = parse_poly("-1,1");        // -1 + x
    CHECK(p * q == parse_poly("-1,0,1"));
    CHECK((p - p).is_zero());
    CHECK(RatPoly(std::vector<BigRational>{1, 0, 0}).degree() == 0);
}

TEST_CASE("poly_divmod") {
    auto a = parse_poly("-1,0,0,1"); // x^3 - 1
    auto b = parse_poly("-1,1");     // x - 1
    auto [q, r] = poly_divmod(a, b);
    CHECK(q == parse_poly("1,1,1"));
    CHECK(r.is_zero());
    CHECK_THROWS(poly_divmod(a, RatPoly()));
}

TEST_CASE("gcd and squarefree part") {
    auto sq = parse_poly("-1,1") * parse_poly("-1,1") * parse_poly("-2,1"); // (x-1)^2 (x-2)
    auto g = poly_gcd(sq, poly_derivative(sq));
    CHECK(g == parse_poly("-1,1")); // monic gcd
    CHECK(squarefree_part(sq) == parse_poly("-1,1") * parse_poly("-2,1"));
    CHECK_THROWS(squarefree_part(RatPoly()));
}

TEST_CASE("sturm chain sign variations bracket roots") {
    auto p = parse_poly("-2,0,1"); // roots at +-sqrt(2)
    auto c = sturm_chain(p);
    CHECK(sign_variations(c, -2) - sign_variations(c, 2) == 2);
}

TEST_CASE("count_roots on half-open intervals") {
    auto p = parse_poly("-2,0,1");
    CHECK(count_roots(p, 0, 2) == 1);
    CHECK(count_roots(p, -2, 2) == 2);
    CHECK(count_roots(p, 2, 3) == 0);
    // half-open: a root exactly at b counts, at a it does not
    auto q = parse_poly("-1,0,1"); // roots +-1
    CHECK(count_roots(q, 0, 1) == 1);
    CHECK(count_roots(q, 1, 2) == 0);
    CHECK_THROWS_AS(count_roots(q, 2, 1), std::domain_error);
    auto sq = parse_poly("-1,1") * parse_poly("-1,1");
    CHECK_THROWS_AS(count_roots(sq, 0, 2), std::domain_error);
}

TEST_CASE("isolate_root shrinks around sqrt(2)") {
    auto p = parse_poly("-2,0,1");
    auto [lo, hi] = isolate_root(p, 0, 2, BigRational(1, 1 << 20));
    CHECK(hi - lo <= BigRational(1, 1 << 20));
    CHECK(p.eval(lo) < 0);
    CHECK(p.eval(hi) >= 0);
}

TEST_CASE("degree-5 polynomial with clustered roots") {
    // (x-1)(x-2)(x-3)(x-4)(x-401/100)
    auto p = parse_poly("-1,1") * parse_poly("-2,1") * parse_poly("-3,1") *
             parse_poly("-4,1") * parse_poly("-401/100,1");
    CHECK(count_roots(p, 0, 5) == 5);
    CHECK(count_roots(p, 4, 5) == 1);
    CHECK(count_roots(p, BigRational(7, 2), 4) == 1);
}
