#include <random>

#include "doctest.h"
#include "paralmi/parse.hpp"
#include "paralmi/polynomial.hpp"
#include "paralmi/ratfunc.hpp"

using namespace paralmi;

namespace {

const VarSpace kSpace{/*n=*/2, /*t=*/2};

MultiPoly P(const std::string& s) { return parse_poly(s, kSpace); }

MultiPoly random_poly(std::mt19937_64& rng, int max_terms) {
    MultiPoly p;
    std::vector<Var> vars = {var_x(1), var_x(2), var_y(1)};
    int terms = 1 + static_cast<int>(rng() % max_terms);
    for (int i = 0; i < terms; ++i) {
        std::vector<Monomial::Factor> fs;
        for (Var v : vars) {
            uint32_t e = static_cast<uint32_t>(rng() % 3);
            if (e) fs.push_back({v, e});
        }
        long num = static_cast<long>(rng() % 9) - 4;
        long den = 1 + static_cast<long>(rng() % 3);
        p.add_term(Monomial(std::move(fs)), make_rational(num, den));
    }
    return p;
}

}  // namespace

TEST_CASE("poly_arith examples") {
    CHECK(P("(x1 + y1)*(x1 - y1)") == P("x1^2 - y1^2"));
    MultiPoly p = P("3*x1^2*y1 - 1/2");
    CHECK(p + MultiPoly() == p);
    // Schoolbook expansion oracle: (x1^2 - y1)^2.
    CHECK(P("(x1^2 - y1)*(x1^2 - y1)") == P("x1^4 - 2*y1*x1^2 + y1^2"));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 80; ++it) {
        MultiPoly a = random_poly(rng, 8), b = random_poly(rng, 8), c = random_poly(rng, 8);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == MultiPoly());
    }
}

TEST_CASE("specialize examples and homomorphism") {
    CHECK(P("x1^2 - y1").specialize({{var_y(1), Rational(4)}}) == P("x1^2 - 4"));
    MultiPoly p = P("3*x1*y1 - y2^2");
    CHECK(p.specialize({}) == p);
    CHECK(P("(1 + y1)*x1").specialize({{var_y(1), Rational(-1)}}) == MultiPoly());

    std::mt19937_64 rng(11);
    for (int it = 0; it < 40; ++it) {
        MultiPoly a = random_poly(rng, 6), b = random_poly(rng, 6);
        std::map<Var, Rational> s = {{var_y(1), make_rational(static_cast<long>(rng() % 7) - 3)}};
        CHECK((a * b).specialize(s) == a.specialize(s) * b.specialize(s));
        CHECK((a + b).specialize(s) == a.specialize(s) + b.specialize(s));
    }
}

TEST_CASE("derivative rules") {
    CHECK(P("x1^2 + x2^2 - 1").derivative(var_x(1)) == P("2*x1"));
    CHECK(P("y1*x1").derivative(var_x(1)) == P("y1"));
    CHECK(P("x1*x2").derivative(var_x(1)) == P("x2"));
    CHECK(P("x1*x2").derivative(var_x(2)) == P("x1"));
    CHECK(P("x1 + x2").derivative(var_x(1)) == P("1"));
}

TEST_CASE("content and primitive part") {
    MultiPoly p = P("4/3*x1^2 - 2/3*x1");
    CHECK(p.primitive_part() == P("2*x1^2 - x1"));
    // The content carries the sign; the primitive part has a positive lead.
    CHECK(P("-2*x1 - 4").primitive_part() == P("x1 + 2"));
    CHECK(P("-2*x1 - 4").content() == -2);
    CHECK(p.primitive_part().content() == 1);
}

TEST_CASE("exact division") {
    MultiPoly p = P("x1^2 - y1^2");
    auto q = p.divide_exact(P("x1 - y1"));
    REQUIRE(q.has_value());
    CHECK(*q == P("x1 + y1"));
    CHECK(!p.divide_exact(P("x1 - 2*y1")).has_value());
}

TEST_CASE("gcd and squarefree part") {
    CHECK(gcd(P("y1^2 - 1"), P("y1 - 1")) == P("y1 - 1"));
    CHECK(gcd(P("x1^2*y1 + x1*y1"), P("x1*y1^2")) == P("x1*y1"));
    CHECK(gcd(P("x1 + 1"), P("x2 + 1")) == P("1"));
    // (y1-1)^2 (y1+2) -> (y1-1)(y1+2)
    MultiPoly p = P("(y1 - 1)*(y1 - 1)*(y1 + 2)");
    CHECK(p.squarefree_part() == P("(y1 - 1)*(y1 + 2)"));
    // multivariate square
    CHECK(P("(x1 - y1)*(x1 - y1)").squarefree_part() == P("x1 - y1"));

    std::mt19937_64 rng(23);
    for (int it = 0; it < 30; ++it) {
        MultiPoly a = random_poly(rng, 4), b = random_poly(rng, 4);
        if (a.is_zero() || b.is_zero()) continue;
        MultiPoly g = gcd(a * b, a);
        // gcd(ab, a) is a multiple of a up to content.
        CHECK(g.divide_exact(a.primitive_part()).has_value());
    }
}

TEST_CASE("ratfunc arithmetic and canonical form") {
    RatFunc y1(P("y1"));
    CHECK(y1 / y1 == RatFunc(Rational(1)));
    RatFunc inv = RatFunc(Rational(1)) / y1;
    CHECK(inv + inv == RatFunc(P("2"), P("y1")));
    CHECK(RatFunc(P("y1^2 - 1"), P("y1 - 1")) == RatFunc(P("y1 + 1")));
    CHECK_THROWS_AS(y1 / RatFunc(), DivisionByZero);

    // Canonical: equal functions have identical representations, with a
    // primitive integer denominator.
    RatFunc a(P("2*y1"), P("4*y2"));
    RatFunc b(P("-y1"), P("-2*y2"));
    CHECK(a == b);
    CHECK(a.den() == P("y2"));
    CHECK(a.num() == P("1/2*y1"));

    // den leading coefficient positive
    RatFunc c(P("y1"), P("-y2 + 1"));
    CHECK(sign(c.den().leading_canonical().second) > 0);

    std::mt19937_64 rng(5);
    for (int it = 0; it < 30; ++it) {
        MultiPoly pa = random_poly(rng, 4), pb = random_poly(rng, 4), pc = random_poly(rng, 4);
        if (pb.is_zero() || pc.is_zero()) continue;
        RatFunc f(pa, pb);
        RatFunc g(pa * pc, pb * pc);
        CHECK(f == g);
    }
}
