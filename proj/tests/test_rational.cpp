#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "rational.hpp"

TEST_CASE("parse_rational accepts integers and fractions") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-7") == -7);
    CHECK(parse_rational("2/3") == BigRational(2, 3));
    CHECK(parse_rational("-2/3") == BigRational(-2, 3));
}

TEST_CASE("parse_rational canonicalizes") {
    CHECK(parse_rational("4/6") == BigRational(2, 3));
    CHECK(rational_str(parse_rational("10/5")) == "2");
    CHECK(rational_str(parse_rational("0/9")) == "0");
}

TEST_CASE("parse_rational rejects junk") {
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("rational_str roundtrips") {
    for (std::string s : {"0", "1", "-1", "22/7", "-355/113"})
        CHECK(rational_str(parse_rational(s)) == s);
}

TEST_CASE("rat_sign") {
    CHECK(rat_sign(parse_rational("5/9")) == 1);
    CHECK(rat_sign(parse_rational("-5/9")) == -1);
    CHECK(rat_sign(parse_rational("0")) == 0);
}

TEST_CASE("exact arithmetic has no drift") {
    BigRational sum = 0;
    for (int i = 0; i < 100; i++) sum += BigRational(1, 3);
    CHECK(sum == BigRational(100, 3));
    CHECK(sum * 3 == 100);
}
