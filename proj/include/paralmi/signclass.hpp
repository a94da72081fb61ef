#pragma once

#include <map>
#include <vector>

#include "paralmi/hermite.hpp"
#include "paralmi/linalg.hpp"

namespace paralmi {

// 3^s x 3^s matrix Mat(A, Sigma) with A = {0,1,2}^s, Sigma = {0,1,-1}^s (both
// lexicographic): the s-fold Kronecker power of [[1,1,1],[0,1,-1],[0,1,1]].
Matrix<long> sign_matrix(size_t s);

// Coefficients a_alpha with  #{x in V(f) : g(x) >= 0 componentwise}
//   = sum_alpha a_alpha * Sign(Herm(f, g^alpha)),
// i.e. the row sums of Mat^{-1} over sigma in {0,1}^s. Kronecker power of
// (1, 1/2, -1/2).
std::vector<Rational> count_coefficients(size_t s);

// Exact count of real solutions with every sign polynomial >= 0, evaluated at
// a parameter point (empty map when t = 0).
Integer count_nonneg_solutions(const HermiteEngine& engine, const std::map<Var, Rational>& y);

Integer count_from_signatures(const std::vector<SignatureResult>& sigs,
                              const std::vector<Rational>& coeffs);

}  // namespace paralmi
