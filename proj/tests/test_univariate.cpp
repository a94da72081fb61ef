#include <random>
#include <set>
#include <algorithm>

#include "doctest.h"
#include "paralmi/parse.hpp"
#include "paralmi/univariate.hpp"

using namespace paralmi;

namespace {

const VarSpace kSpace{/*n=*/1, /*t=*/1};
const Var X = var_x(1);

MultiPoly P(const std::string& s) { return parse_poly(s, kSpace); }

MultiPoly from_roots(const std::vector<long>& roots) {
    MultiPoly p(Rational(1));
    for (long r : roots) p = p * (MultiPoly::variable(X) - MultiPoly(Rational(r)));
    return p;
}

}  // namespace

TEST_CASE("sturm_count half-open convention") {
    CHECK(sturm_count(P("x1^2 - 1"), X, Rational(-2), Rational(2)) == 2);
    CHECK(sturm_count(P("x1^2 + 1"), X, Rational(-10), Rational(10)) == 0);
    // roots -1, 0, 1; (0, 2] holds only 1.
    CHECK(sturm_count(P("x1^3 - x1"), X, Rational(0), Rational(2)) == 1);
    // Right endpoint included, left excluded.
    CHECK(sturm_count(P("x1^3 - x1"), X, Rational(-1), Rational(1)) == 2);
    CHECK(sturm_count(P("x1 - 1"), X, Rational(0), Rational(1)) == 1);
    CHECK(sturm_count(P("x1 - 1"), X, Rational(1), Rational(2)) == 0);
}

TEST_CASE("isolate_roots") {
    auto iv = isolate_roots(P("x1^2 - 2"), X);
    REQUIRE(iv.size() == 2);
    CHECK(iv[0].hi < iv[1].lo + 1);  // sorted
    // Each interval isolates one root of the squarefree part.
    for (const auto& r : iv) CHECK(sturm_count(r.poly, X, r.lo, r.hi) == 1);

    auto sq = isolate_roots(P("x1^2"), X);
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].poly == P("x1"));  // squarefree part taken first

    CHECK(isolate_roots(P("5"), X).empty());
}

TEST_CASE("isolate count equals sturm count on random polynomials") {
    std::mt19937_64 rng(500);
    for (int it = 0; it < 500; ++it) {
        MultiPoly p;
        uint32_t degree = 1 + static_cast<uint32_t>(rng() % 8);
        for (uint32_t e = 0; e <= degree; ++e)
            p += MultiPoly::variable(X).pow(e) * make_rational(static_cast<long>(rng() % 11) - 5);
        if (p.is_zero() || p.is_constant()) continue;
        auto roots = isolate_roots(p, X);
        // Whole-line count on the squarefree part with a generous bound.
        MultiPoly sf = roots.empty() ? p : roots[0].poly;
        if (roots.empty()) sf = p.squarefree_part();
        long b = 1;
        for (const auto& [m, c] : p.terms()) {
            (void)m;
            long num = std::abs(static_cast<long>(c.get_num().get_si()));
            if (num > b) b = num;
        }
        Rational bound(100 * b + 100);
        CHECK(static_cast<long>(roots.size()) == sturm_count(sf, X, -bound, bound));
    }
}

TEST_CASE("sign_at_root") {
    auto iv = isolate_roots(P("x1^2 - 2"), X);  // roots -sqrt2, sqrt2
    REQUIRE(iv.size() == 2);
    CHECK(sign_at_root(P("x1"), X, iv[0]) == -1);
    CHECK(sign_at_root(P("x1"), X, iv[1]) == 1);
    CHECK(sign_at_root(P("x1^2 - 2"), X, iv[1]) == 0);
    CHECK(sign_at_root(P("x1^2 - 1"), X, iv[1]) == 1);   // 2 - 1 > 0
    CHECK(sign_at_root(P("x1^2 - 3"), X, iv[1]) == -1);  // 2 - 3 < 0
    CHECK(sign_at_root(P("(x1^2 - 2)*(x1 - 1)"), X, iv[1]) == 0);  // shared factor
}

TEST_CASE("cells and sample points") {
    auto pts = sample_points_1d({P("y1^2 - 1")}, var_y(1));
    // One point per open cell plus the rational roots +-1.
    bool left = false, mid = false, right = false;
    for (const auto& q : pts) {
        if (q < -1) left = true;
        if (q > -1 && q < 1) mid = true;
        if (q > 1) right = true;
    }
    CHECK(left);
    CHECK(mid);
    CHECK(right);
    CHECK(std::find(pts.begin(), pts.end(), Rational(-1)) != pts.end());
    CHECK(std::find(pts.begin(), pts.end(), Rational(1)) != pts.end());

    auto single = sample_points_1d({P("y1")}, var_y(1));
    CHECK(std::find(single.begin(), single.end(), Rational(0)) != single.end());
    CHECK(single.front() < 0);
    CHECK(single.back() > 0);

    auto whole = sample_points_1d({}, var_y(1));
    REQUIRE(whole.size() == 1);
    CHECK(whole[0] == 0);
}

TEST_CASE("sample points hit every sign-invariant interval") {
    std::mt19937_64 rng(901);
    for (int it = 0; it < 60; ++it) {
        std::set<long> used;
        std::vector<long> roots;
        size_t k = 1 + static_cast<size_t>(rng() % 4);
        for (size_t i = 0; i < k; ++i) {
            long r = static_cast<long>(rng() % 13) - 6;
            if (used.insert(r).second) roots.push_back(r);
        }
        MultiPoly p = from_roots(roots);
        auto pts = sample_points_1d({p}, X);
        // Dense grid: every sign value realized on the grid is realized at a
        // sample point as well.
        std::set<int> grid_signs, sample_signs;
        for (long num = -160; num <= 160; ++num) {
            Rational q = make_rational(num, 10);
            grid_signs.insert(sign(p.evaluate({{X, q}})));
        }
        for (const auto& q : pts) sample_signs.insert(sign(p.evaluate({{X, q}})));
        for (int s : grid_signs) CHECK(sample_signs.count(s) == 1);
    }
}

TEST_CASE("feasibility oracle examples") {
    CHECK(feasibility_oracle_1d({P("1 - x1^2")}, X));
    CHECK(!feasibility_oracle_1d({P("1 - x1^2"), P("x1 - 2")}, X));
    // Equality-only intersection at the roots x = +-1.
    CHECK(feasibility_oracle_1d({P("x1^2 - 1"), P("1 - x1^2")}, X));
    CHECK(feasibility_oracle_1d({}, X));
    CHECK(!feasibility_oracle_1d({P("-1 - x1^2")}, X));
}

TEST_CASE("feasibility oracle vs dense grid prescreen") {
    std::mt19937_64 rng(902);
    for (int it = 0; it < 80; ++it) {
        PolyVec gs;
        size_t s = 1 + static_cast<size_t>(rng() % 3);
        for (size_t i = 0; i < s; ++i) {
            MultiPoly g;
            for (uint32_t e = 0; e <= 2 + rng() % 2; ++e)
                g += MultiPoly::variable(X).pow(e) *
                     make_rational(static_cast<long>(rng() % 9) - 4);
            if (g.is_zero()) g = MultiPoly(Rational(1));
            gs.push_back(g);
        }
        bool grid_true = false;
        for (long num = -120; num <= 120 && !grid_true; ++num) {
            Rational q = make_rational(num, 8);
            bool all = true;
            for (const auto& g : gs)
                if (sign(g.evaluate({{X, q}})) < 0) all = false;
            grid_true |= all;
        }
        bool oracle = feasibility_oracle_1d(gs, X);
        if (grid_true) CHECK(oracle);  // the grid can only confirm feasibility
    }
}
