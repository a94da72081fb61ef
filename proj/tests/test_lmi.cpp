#include <random>

#include "doctest.h"
#include "paralmi/lmi.hpp"
#include "paralmi/parse.hpp"

using namespace paralmi;

namespace {

const VarSpace kSpace{/*n=*/2, /*t=*/1};

MultiPoly P(const std::string& s) { return parse_poly(s, kSpace); }

ParamLinearMatrix from_strings(std::vector<std::vector<std::string>> rows, uint32_t n,
                               uint32_t t) {
    Matrix<MultiPoly> m(rows.size(), rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows.size(); ++j) m(i, j) = parse_poly(rows[i][j], VarSpace{n, t});
    return ParamLinearMatrix::from_assembled(m, n, t);
}

}  // namespace

TEST_CASE("psd_matrix_cond examples") {
    auto a = from_strings({{"1", "x1"}, {"x1", "y1"}}, 1, 1);
    auto g = psd_matrix_cond(a).g;
    REQUIRE(g.size() == 3);
    CHECK(g[0] == P("y1 - x1^2"));
    CHECK(g[1] == P("1 + y1"));
    CHECK(g[2] == P("1"));

    // Identity: binomial coefficients.
    auto id3 = from_strings({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}}, 0, 0);
    auto gid = psd_matrix_cond(id3).g;
    CHECK(gid[0] == P("1"));
    CHECK(gid[1] == P("3"));
    CHECK(gid[2] == P("3"));
    CHECK(gid[3] == P("1"));

    auto band = from_strings({{"1 + x1", "y1"}, {"y1", "1 - x1"}}, 1, 1);
    auto gb = psd_matrix_cond(band).g;
    CHECK(gb[0] == P("1 - x1^2 - y1^2"));
    CHECK(gb[1] == P("2"));
    CHECK(gb[2] == P("1"));
}

TEST_CASE("g_m = 1 and g_{m-1} = trace") {
    auto a = from_strings({{"1 + x1", "y1 + x2"}, {"y1 + x2", "2 - x1"}}, 2, 1);
    auto g = psd_matrix_cond(a).g;
    CHECK(g[2] == P("1"));
    CHECK(g[1] == P("3"));  // trace = (1+x1) + (2-x1)
}

TEST_CASE("psd condition matches eigenvalue signs on random matrices") {
    // All g_i(point) >= 0 iff the eigenvalues are all >= 0: cross-checked via
    // the signature of the specialized matrix.
    std::mt19937_64 rng(55);
    for (int it = 0; it < 200; ++it) {
        uint32_t m = 2 + static_cast<uint32_t>(rng() % 3);  // 2..4
        Matrix<MultiPoly> mat(m, m);
        Matrix<Rational> num(m, m);
        for (uint32_t i = 0; i < m; ++i)
            for (uint32_t j = i; j < m; ++j) {
                Rational v = make_rational(static_cast<long>(rng() % 9) - 4);
                num(i, j) = num(j, i) = v;
                mat(i, j) = mat(j, i) = MultiPoly(v);
            }
        auto a = ParamLinearMatrix::from_assembled(mat, 0, 0);
        auto g = psd_matrix_cond(a).g;
        bool all_nonneg = true;
        for (const auto& gi : g)
            if (sign(gi.constant_value()) < 0) all_nonneg = false;
        auto s = signature(num);
        bool psd = (s.signature == s.rank);  // no negative eigenvalues
        CHECK(all_nonneg == psd);
    }
}

TEST_CASE("change_vars") {
    ChangeOfVars two{Matrix<Rational>(1, 1)};
    two.mat(0, 0) = 2;
    CHECK(change_vars(P("x1"), two) == P("2*x1"));

    ChangeOfVars id{Matrix<Rational>::identity(2, Rational(1), Rational(0))};
    MultiPoly p = P("x1^2*y1 - x2 + 3");
    CHECK(change_vars(p, id) == p);

    ChangeOfVars swp{Matrix<Rational>(2, 2)};
    swp.mat(0, 1) = 1;
    swp.mat(1, 0) = 1;
    CHECK(change_vars(P("x1^2 + x2^2"), swp) == P("x1^2 + x2^2"));
    CHECK(change_vars(P("x1 - x2"), swp) == P("x2 - x1"));

    ChangeOfVars sing{Matrix<Rational>(2, 2)};
    CHECK_THROWS_AS(change_vars(P("x1"), sing), SingularMatrix);

    // (p^M)^{M^-1} = p with M = [[1,1],[0,1]].
    ChangeOfVars mm{Matrix<Rational>(2, 2)};
    mm.mat(0, 0) = 1;
    mm.mat(0, 1) = 1;
    mm.mat(1, 1) = 1;
    ChangeOfVars mi{Matrix<Rational>(2, 2)};
    mi.mat(0, 0) = 1;
    mi.mat(0, 1) = -1;
    mi.mat(1, 1) = 1;
    CHECK(change_vars(change_vars(p, mm), mi) == p);
}

TEST_CASE("specialize_params commutes with psd_matrix_cond") {
    auto a = from_strings({{"1", "x1"}, {"x1", "y1"}}, 1, 1);
    auto a4 = specialize_params(a, {Rational(4)});
    CHECK(a4.t == 0);
    CHECK(a4.coeff[0](1, 1) == P("4"));
    CHECK(a4.coeff[1](0, 1) == P("1"));

    auto g_then = psd_matrix_cond(a4).g;
    auto g_first = psd_matrix_cond(a).g;
    for (size_t i = 0; i < g_then.size(); ++i)
        CHECK(g_then[i] == g_first[i].specialize({{var_y(1), Rational(4)}}));

    // t = 0 specialization is the identity.
    auto b = specialize_params(a4, {});
    CHECK(b.coeff[0](1, 1) == a4.coeff[0](1, 1));
}

TEST_CASE("rank_at") {
    auto a = from_strings({{"1", "0"}, {"0", "0"}}, 0, 0);
    CHECK(rank_at(a, {}, {}) == 1);
    auto z = from_strings({{"0", "0"}, {"0", "0"}}, 0, 0);
    CHECK(rank_at(z, {}, {}) == 0);
    auto prop = from_strings({{"1", "2"}, {"2", "4"}}, 0, 0);
    CHECK(rank_at(prop, {}, {}) == 1);
}

TEST_CASE("sos_to_lmi") {
    VarSpace sos_space{1, 0};
    Monomial one;
    Monomial x2 = Monomial::var(var_x(1), 2);

    // x1^4 + 2 x1^2 + 1 over (1, x1^2): fully pinned Gram matrix.
    auto a1 = sos_to_lmi(parse_poly("x1^4 + 2*x1^2 + 1", sos_space), {one, x2}, 0);
    CHECK(a1.n == 0);
    CHECK(a1.m == 2);
    CHECK(a1.coeff[0](0, 0) == P("1"));
    CHECK(a1.coeff[0](0, 1) == P("1"));
    CHECK(a1.coeff[0](1, 1) == P("1"));

    // x1^2 over (x1): the 1x1 case.
    auto a2 = sos_to_lmi(parse_poly("x1^2", sos_space), {Monomial::var(var_x(1), 1)}, 0);
    CHECK(a2.n == 0);
    CHECK(a2.m == 1);
    CHECK(a2.coeff[0](0, 0) == P("1"));

    // x1^4 + 1 over (1, x1^2): the x1^2 coefficient constraint pins the
    // off-diagonal to zero, so there is no free Gram variable.
    auto a3 = sos_to_lmi(parse_poly("x1^4 + 1", sos_space), {one, x2}, 0);
    CHECK(a3.n == 0);
    CHECK(a3.coeff[0](0, 1) == P("0"));
    CHECK(a3.coeff[0](0, 0) == P("1"));
    CHECK(a3.coeff[0](1, 1) == P("1"));

    // A basis with a product collision has one free Gram coordinate and the
    // identity beta^T W(x) beta = p holds symbolically.
    VarSpace sp2{2, 0};
    MultiPoly p = parse_poly("x1^2*x2^2 + 1", sp2);
    Monomial x1x2({{var_x(1), 1}, {var_x(2), 1}});
    Monomial x1sq_x2sq({{var_x(1), 2}, {var_x(2), 2}});

    std::vector<Monomial> beta = {one, x1x2, Monomial::var(var_x(1), 1)};
    // products 1, x1x2, x1, x1^2x2^2, x1^2x2, x1^2 are all distinct: n = 0.
    auto a4 = sos_to_lmi(p, beta, 0);
    CHECK(a4.n == 0);

    std::vector<Monomial> beta2 = {one, x1x2, x1sq_x2sq};
    // 1 * x1^2x2^2 collides with (x1x2)^2: kernel dimension 1.
    auto a5 = sos_to_lmi(p, beta2, 0);
    CHECK(a5.n == 1);
    // Symbolic Gram identity with the free variable left in place.
    MultiPoly assembled_check;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            MultiPoly wij = a5.coeff[0](i, j);
            wij += a5.coeff[1](i, j) * MultiPoly::variable(var_x(3));
            assembled_check += wij * MultiPoly::term(beta2[i] * beta2[j], Rational(1));
        }
    CHECK(assembled_check == p);

    // Unrepresentable monomial.
    CHECK_THROWS_AS(sos_to_lmi(parse_poly("x1^3", sos_space), {one, x2}, 0), NotRepresentable);
}
