#pragma once

#include <map>
#include <vector>

#include "paralmi/groebner.hpp"
#include "paralmi/linalg.hpp"
#include "paralmi/ratfunc.hpp"

namespace paralmi {

// Parametric Hermite matrix Herm(f, g^alpha) together with its validity
// locus (W_inf plus denominator squarefree parts).
struct HermiteMatrix {
    Matrix<RatFunc> entries;
    std::vector<uint32_t> alpha;
    PolyVec validity;
};

// Hermite machinery over a fixed zero-dimensional basis: multiplication
// matrices for the staircase and for each sign polynomial, the trace vector,
// and the matrices Herm(f, g^alpha) = (Tr(M_{g^alpha b_i b_j}))_{ij}.
class HermiteEngine {
  public:
    HermiteEngine(const GroebnerBasis& gb, const QuotientBasis& basis, PolyVec sign_polys);

    size_t delta() const { return delta_; }
    size_t num_sign_polys() const { return sign_polys_.size(); }
    const PolyVec& sign_polys() const { return sign_polys_; }

    // W_inf generators plus squarefree parts of every denominator met while
    // building the engine; specialization is guaranteed off this locus.
    const PolyVec& validity() const { return validity_; }

    Matrix<RatFunc> hermite(const std::vector<uint32_t>& alpha) const;

    HermiteMatrix hermite_matrix(const std::vector<uint32_t>& alpha) const {
        return HermiteMatrix{hermite(alpha), alpha, validity_};
    }

    // Signatures of every Herm(f, g^alpha)(y), alpha in lexicographic order
    // over {0,1,2}^s; the cheap path used for specialized counting.
    std::vector<SignatureResult> signatures_at(const std::map<Var, Rational>& y) const;

  private:
    Matrix<Rational> specialize_matrix(const Matrix<RatFunc>& m,
                                       const std::map<Var, Rational>& y) const;
    void absorb_denominators(const Matrix<RatFunc>& m);

    size_t delta_ = 0;
    PolyVec sign_polys_;
    std::vector<Matrix<RatFunc>> mb_;  // multiplication by each basis monomial
    std::vector<Matrix<RatFunc>> mg_;  // multiplication by each sign polynomial
    std::vector<RatFunc> trace_;       // Tr(M_{b_k})
    PolyVec validity_;
};

// Entrywise evaluation; throws InvalidSpecialization when y lies on the
// validity locus or zeroes a denominator.
Matrix<Rational> specialize_hermite(const HermiteMatrix& h, const std::map<Var, Rational>& y);

// TaQ(g, f) at a specialized parameter point (empty map when t = 0).
int tarski_query(const GroebnerBasis& gb, const QuotientBasis& basis, const MultiPoly& g,
                 const std::map<Var, Rational>& y = {});

// All alpha in {0,1,2}^s, lexicographic.
std::vector<std::vector<uint32_t>> alpha_lex(size_t s);

}  // namespace paralmi
