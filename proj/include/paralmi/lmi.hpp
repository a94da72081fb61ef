#pragma once

#include <vector>

#include "paralmi/linalg.hpp"
#include "paralmi/polynomial.hpp"

namespace paralmi {

// Symmetric pencil A_0 + x_1 A_1 + ... + x_n A_n with entries polynomial in
// the parameters y.
struct ParamLinearMatrix {
    uint32_t m = 0, n = 0, t = 0;
    std::vector<Matrix<MultiPoly>> coeff;  // A_0..A_n, entries in Q[y]

    Matrix<MultiPoly> assembled() const;
    int64_t param_degree() const;  // max total y-degree over all entries

    // Splits a symmetric matrix of polynomials of x-degree <= 1.
    static ParamLinearMatrix from_assembled(const Matrix<MultiPoly>& a, uint32_t n, uint32_t t);
};

// Coefficients g_0..g_m of lambda^i in det(A + lambda I); g_m = 1.
struct GCoeffs {
    PolyVec g;
};

// Exact determinant of a polynomial matrix by minor expansion, memoized over
// (row set, column set) pairs.
MultiPoly poly_det(const Matrix<MultiPoly>& a);

// A(y,x) is PSD iff every returned coefficient is >= 0 at (y,x).
GCoeffs psd_matrix_cond(const ParamLinearMatrix& a);

struct ChangeOfVars {
    Matrix<Rational> mat;  // n x n, invertible
};

MultiPoly change_vars(const MultiPoly& p, const ChangeOfVars& m);
ParamLinearMatrix change_vars(const ParamLinearMatrix& a, const ChangeOfVars& m);
Rational det(const Matrix<Rational>& m);

ParamLinearMatrix specialize_params(const ParamLinearMatrix& a, const std::vector<Rational>& y);

// Exact rank of A(y,x) at a fully specialized point.
size_t rank_at(const ParamLinearMatrix& a, const std::vector<Rational>& y,
               const std::vector<Rational>& x);

// Gram-spectrahedron LMI of p over the monomial list beta: the affine space
// {W symmetric : beta^T W beta = p} parameterized as W_0 + sum x_i W_i with
// the W_i spanning the kernel of the coefficient-matching map. p may carry
// y-parameters in its coefficients; its own variables are x1..xs and they
// are consumed (the output x-variables are the free Gram coordinates).
ParamLinearMatrix sos_to_lmi(const MultiPoly& p, const std::vector<Monomial>& beta, uint32_t t);

}  // namespace paralmi
