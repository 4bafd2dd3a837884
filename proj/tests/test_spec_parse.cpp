#include <doctest.h>

#include "paulipt/spec_parse.hpp"

using namespace paulipt;

TEST_CASE("component spec parsing") {
    PauliPoly p3 = parse_components("1;0,1;0,0,1;0,0,0,1");
    CHECK(p3.c0 == preset(Preset::P3).c0);
    CHECK(p3.c1 == preset(Preset::P3).c1);
    CHECK(p3.c2 == preset(Preset::P3).c2);
    CHECK(p3.c3 == preset(Preset::P3).c3);

    PauliPoly q = parse_components("0;0.5+2i;1-i;-i");
    CHECK(q.c1 == UniPoly::constant(CRat{Rational(1, 2), Rational(2)}));
    CHECK(q.c2 == UniPoly::constant(CRat{Rational(1), Rational(-1)}));
    CHECK(q.c3 == UniPoly::constant(CRat{Rational(0), Rational(-1)}));
    CHECK(q.c0.is_zero());

    CHECK_THROWS_AS(parse_components("1;2;3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_components("x;0;0;0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_components("0;0;0;0"), AllZero);
}
