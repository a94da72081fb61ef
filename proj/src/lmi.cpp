#include "paralmi/lmi.hpp"

#include <map>
#include <unordered_map>

#include "paralmi/error.hpp"

namespace paralmi {

Matrix<MultiPoly> ParamLinearMatrix::assembled() const {
    Matrix<MultiPoly> out(m, m);
    for (uint32_t i = 0; i < m; ++i)
        for (uint32_t j = 0; j < m; ++j) {
            MultiPoly e = coeff[0](i, j);
            for (uint32_t k = 1; k <= n; ++k)
                e += coeff[k](i, j) * MultiPoly::variable(var_x(k));
            out(i, j) = e;
        }
    return out;
}

int64_t ParamLinearMatrix::param_degree() const {
    int64_t d = 0;
    for (const auto& mat : coeff)
        for (uint32_t i = 0; i < m; ++i)
            for (uint32_t j = 0; j < m; ++j) d = std::max(d, mat(i, j).degree_in(VarKind::Y));
    return d;
}

ParamLinearMatrix ParamLinearMatrix::from_assembled(const Matrix<MultiPoly>& a, uint32_t n,
                                                    uint32_t t) {
    ParamLinearMatrix out;
    out.m = static_cast<uint32_t>(a.rows());
    out.n = n;
    out.t = t;
    if (!a.is_symmetric()) throw NotSymmetric("parametric linear matrix must be symmetric");
    std::map<Var, Rational> x_zero;
    for (uint32_t k = 1; k <= n; ++k) x_zero[var_x(k)] = Rational(0);
    out.coeff.assign(n + 1, Matrix<MultiPoly>(out.m, out.m));
    for (uint32_t i = 0; i < out.m; ++i)
        for (uint32_t j = 0; j < out.m; ++j) {
            const MultiPoly& e = a(i, j);
            if (e.degree_in(VarKind::X) > 1)
                throw std::invalid_argument("entry is not affine in x");
            out.coeff[0](i, j) = e.specialize(x_zero);
            for (uint32_t k = 1; k <= n; ++k) out.coeff[k](i, j) = e.coefficient_of(var_x(k), 1);
        }
    return out;
}

namespace {

// Minor expansion memoized on (row mask, col mask); adequate for m <= 6.
MultiPoly det_rec(const Matrix<MultiPoly>& a, uint32_t rows, uint32_t cols,
                  std::unordered_map<uint64_t, MultiPoly>& memo) {
    if (rows == 0) return MultiPoly(Rational(1));
    uint64_t key = (static_cast<uint64_t>(rows) << 32) | cols;
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int r = __builtin_ctz(rows);  // expand along the first remaining row
    uint32_t rest_rows = rows & (rows - 1);
    MultiPoly acc;
    int parity = 0;
    for (uint32_t c = cols; c != 0; c &= c - 1) {
        int j = __builtin_ctz(c);
        const MultiPoly& e = a(static_cast<size_t>(r), static_cast<size_t>(j));
        if (!e.is_zero()) {
            MultiPoly sub = det_rec(a, rest_rows, cols & ~(1u << j), memo);
            MultiPoly term = e * sub;
            acc += (parity % 2 == 0) ? term : -term;
        }
        ++parity;
    }
    memo.emplace(key, acc);
    return acc;
}

}  // namespace

MultiPoly poly_det(const Matrix<MultiPoly>& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("poly_det: non-square");
    if (a.rows() == 0) return MultiPoly(Rational(1));
    if (a.rows() > 16) throw std::invalid_argument("poly_det: matrix too large");
    std::unordered_map<uint64_t, MultiPoly> memo;
    uint32_t full = (1u << a.rows()) - 1;
    return det_rec(a, full, full, memo);
}

GCoeffs psd_matrix_cond(const ParamLinearMatrix& a) {
    Matrix<MultiPoly> mat = a.assembled();
    uint32_t m = a.m;
    // det(A + lambda I) = sum_i lambda^i * (sum of principal (m-i)-minors).
    GCoeffs out;
    out.g.assign(m + 1, MultiPoly());
    std::unordered_map<uint64_t, MultiPoly> memo;
    uint32_t full = (1u << m) - 1;
    for (uint32_t s = 0; s <= full; ++s) {
        uint32_t size = static_cast<uint32_t>(__builtin_popcount(s));
        out.g[m - size] += det_rec(mat, s, s, memo);
    }
    return out;
}

Rational det(const Matrix<Rational>& m) { return field_det(m); }

MultiPoly change_vars(const MultiPoly& p, const ChangeOfVars& m) {
    size_t n = m.mat.rows();
    if (det(m.mat) == 0) throw SingularMatrix("change of variables is singular");
    std::map<Var, MultiPoly> subst;
    for (size_t i = 0; i < n; ++i) {
        MultiPoly image;
        for (size_t j = 0; j < n; ++j) {
            if (m.mat(i, j) == 0) continue;
            image += MultiPoly::variable(var_x(static_cast<uint32_t>(j + 1))) * m.mat(i, j);
        }
        subst[var_x(static_cast<uint32_t>(i + 1))] = image;
    }
    return p.substitute(subst);
}

ParamLinearMatrix change_vars(const ParamLinearMatrix& a, const ChangeOfVars& m) {
    if (a.n == 0) return a;
    if (m.mat.rows() != a.n || m.mat.cols() != a.n)
        throw std::invalid_argument("change_vars: dimension mismatch");
    if (det(m.mat) == 0) throw SingularMatrix("change of variables is singular");
    ParamLinearMatrix out = a;
    // A(Mx) = A_0 + sum_j (sum_i M_ij A_i) x_j.
    for (uint32_t j = 1; j <= a.n; ++j) {
        Matrix<MultiPoly> b(a.m, a.m);
        for (uint32_t i = 1; i <= a.n; ++i) {
            const Rational& c = m.mat(i - 1, j - 1);
            if (c == 0) continue;
            for (uint32_t r = 0; r < a.m; ++r)
                for (uint32_t s = 0; s < a.m; ++s) b(r, s) += a.coeff[i](r, s) * c;
        }
        out.coeff[j] = b;
    }
    return out;
}

ParamLinearMatrix specialize_params(const ParamLinearMatrix& a, const std::vector<Rational>& y) {
    if (y.size() != a.t) throw std::invalid_argument("specialize_params: wrong length");
    std::map<Var, Rational> assignment;
    for (uint32_t k = 0; k < a.t; ++k) assignment[var_y(k + 1)] = y[k];
    ParamLinearMatrix out = a;
    out.t = 0;
    for (auto& mat : out.coeff)
        mat = mat.map([&](const MultiPoly& p) { return p.specialize(assignment); });
    return out;
}

size_t rank_at(const ParamLinearMatrix& a, const std::vector<Rational>& y,
               const std::vector<Rational>& x) {
    if (y.size() != a.t || x.size() != a.n) throw std::invalid_argument("rank_at: wrong length");
    std::map<Var, Rational> point;
    for (uint32_t k = 0; k < a.t; ++k) point[var_y(k + 1)] = y[k];
    for (uint32_t k = 0; k < a.n; ++k) point[var_x(k + 1)] = x[k];
    Matrix<MultiPoly> mat = a.assembled();
    Matrix<Rational> num = mat.map([&](const MultiPoly& p) { return p.evaluate(point); });
    return rational_rank(num);
}

ParamLinearMatrix sos_to_lmi(const MultiPoly& p, const std::vector<Monomial>& beta, uint32_t t) {
    size_t d = beta.size();
    if (d == 0) throw std::invalid_argument("sos_to_lmi: empty basis");

    // Pairs (i <= j) grouped by their product monomial.
    std::map<Monomial, std::vector<std::pair<size_t, size_t>>, CanonicalLess> products;
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i; j < d; ++j) products[beta[i] * beta[j]].push_back({i, j});

    // Coefficients of p by x-monomial (y-polynomials in general).
    auto coeffs = p.group_by(VarKind::X);
    for (const auto& [mono, c] : coeffs) {
        if (c.is_zero()) continue;
        if (!products.count(mono))
            throw NotRepresentable("a monomial of p is not a product of two basis monomials");
    }

    // Each Gram unknown W_ij appears in exactly one matching equation (the one
    // for beta_i * beta_j), so the row-reduced system is assembled directly:
    // the lexicographically first pair of each product carries the particular
    // value and every later pair contributes one kernel vector.
    std::vector<Matrix<MultiPoly>> kernel;
    Matrix<MultiPoly> w0(d, d);
    for (const auto& [mono, pairs] : products) {
        MultiPoly target;
        auto it = coeffs.find(mono);
        if (it != coeffs.end()) target = it->second;
        auto [i0, j0] = pairs[0];
        long f0 = (i0 == j0) ? 1 : 2;
        MultiPoly val = target * make_rational(1, f0);
        w0(i0, j0) += val;
        if (i0 != j0) w0(j0, i0) += val;
        for (size_t l = 1; l < pairs.size(); ++l) {
            auto [il, jl] = pairs[l];
            long fl = (il == jl) ? 1 : 2;
            // f0 * a + fl * b = 0 with primitive integer (a, b).
            long g = (f0 == fl) ? f0 : 1;
            long aa = fl / g, bb = -f0 / g;
            Matrix<MultiPoly> k(d, d);
            k(i0, j0) += MultiPoly(Rational(aa));
            if (i0 != j0) k(j0, i0) += MultiPoly(Rational(aa));
            k(il, jl) += MultiPoly(Rational(bb));
            if (il != jl) k(jl, il) += MultiPoly(Rational(bb));
            kernel.push_back(std::move(k));
        }
    }
    ParamLinearMatrix out;
    out.m = static_cast<uint32_t>(d);
    out.t = t;
    out.n = static_cast<uint32_t>(kernel.size());
    out.coeff.push_back(std::move(w0));
    for (auto& k : kernel) out.coeff.push_back(std::move(k));
    return out;
}

}  // namespace paralmi
