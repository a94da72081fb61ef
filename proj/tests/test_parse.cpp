#include <random>

#include "doctest.h"
#include "paralmi/parse.hpp"

using namespace paralmi;

namespace {
const VarSpace kSpace{/*n=*/3, /*t=*/2};
}

TEST_CASE("grammar basics") {
    CHECK(print_poly(parse_poly("x1 + x1", kSpace)) == "2*x1");
    CHECK(print_poly(parse_poly("-x2^2 + 5/3", kSpace)) == "-x2^2 + 5/3");
    CHECK(print_poly(parse_poly("(x1 - y1)*(x1 + y1)", kSpace)) == "x1^2 - y1^2");
    CHECK(print_poly(parse_poly("0", kSpace)) == "0");
    CHECK(print_poly(parse_poly("2 - 2", kSpace)) == "0");
    CHECK(parse_poly("1/2*y1", kSpace) == parse_poly("y1 - 1/2*y1", kSpace));
}

TEST_CASE("errors carry positions") {
    CHECK_THROWS_AS(parse_poly("x1 +", kSpace), ParseError);
    CHECK_THROWS_AS(parse_poly("2x1", kSpace), ParseError);      // implicit mult
    CHECK_THROWS_AS(parse_poly("x1 x2", kSpace), ParseError);    // implicit mult
    CHECK_THROWS_AS(parse_poly("x9", kSpace), ParseError);       // undeclared
    CHECK_THROWS_AS(parse_poly("y3 + 1", kSpace), ParseError);   // undeclared
    CHECK_THROWS_AS(parse_poly("x1/2", kSpace), ParseError);     // no poly division
    try {
        parse_poly("x1 +\n  *", kSpace);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("round trip parse(print(p)) == p") {
    std::mt19937_64 rng(99);
    std::vector<Var> vars = {var_x(1), var_x(2), var_x(3), var_y(1), var_y(2)};
    for (int it = 0; it < 120; ++it) {
        MultiPoly p;
        int terms = static_cast<int>(rng() % 7);
        for (int i = 0; i < terms; ++i) {
            std::vector<Monomial::Factor> fs;
            for (Var v : vars) {
                uint32_t e = static_cast<uint32_t>(rng() % 3);
                if (e) fs.push_back({v, e});
            }
            p.add_term(Monomial(std::move(fs)),
                       make_rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 4)));
        }
        CHECK(parse_poly(print_poly(p), kSpace) == p);
    }
}

TEST_CASE("decimal grid rationals") {
    CHECK(parse_rational("0.5") == make_rational(1, 2));
    CHECK(parse_rational("-0.25") == make_rational(-1, 4));
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-7/3") == make_rational(-7, 3));
    CHECK(parse_rational("2.50") == make_rational(5, 2));
    CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
}
