#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "paralmi/linalg.hpp"
#include "paralmi/ordering.hpp"
#include "paralmi/polynomial.hpp"
#include "paralmi/ratfunc.hpp"

namespace paralmi {

struct PolySystem {
    PolyVec generators;  // nonzero
    VarSpace space;
};

struct GBConfig {
    // Budget on processed S-pairs; ResourceLimit beyond. Overridable through
    // the PARALMI_PAIR_BUDGET environment variable (see default_gb_config).
    size_t pair_budget = 100000;
};

GBConfig default_gb_config();

// Staircase basis of the quotient over Q(y), sorted increasingly.
struct QuotientBasis {
    std::vector<Monomial> monomials;
    size_t delta = 0;
};

// Reduced Groebner basis in Q[y][eliminated vars] under the block order
// (eliminated grevlex above parameter grevlex). Each element is scaled so
// that its leading coefficient with respect to the eliminated variables is a
// primitive integer polynomial in y with positive leading coefficient.
class GroebnerBasis {
  public:
    GroebnerBasis(PolyVec elements, std::vector<Var> elim, std::vector<Var> params);

    const PolyVec& elements() const { return elements_; }
    const std::vector<Var>& elim_vars() const { return elim_; }
    const std::vector<Var>& param_vars() const { return params_; }
    const MonomialOrder& order() const { return order_; }

    bool contains_one() const;

    // Leading monomial in the eliminated variables of element k.
    const Monomial& leading_elim(size_t k) const { return lead_elim_[k]; }
    // Its coefficient, a polynomial in the parameters.
    const MultiPoly& leading_coeff(size_t k) const { return lead_coeff_[k]; }

    // Exclusion locus W_inf: squarefree parts of all leading coefficients,
    // constants dropped, deduplicated.
    PolyVec w_infty() const;

    // (true, delta) iff the staircase is finite over Q(y).
    std::pair<bool, size_t> is_zero_dimensional() const;

    QuotientBasis quotient_basis() const;  // throws NotZeroDimensional

    // Coordinates of p in the quotient basis; denominators divide products
    // of leading coefficients.
    std::vector<RatFunc> normal_form(const MultiPoly& p, const QuotientBasis& basis) const;

  private:
    friend GroebnerBasis buchberger(const PolySystem&, const std::vector<Var>&,
                                    const std::vector<Var>&, const GBConfig&);

    PolyVec elements_;
    std::vector<Var> elim_;    // sorted by id
    std::vector<Var> params_;  // sorted by id
    MonomialOrder order_;
    std::vector<Monomial> lead_elim_;
    std::vector<MultiPoly> lead_coeff_;
    // Elements grouped by eliminated monomial: (elim monomial, y-coefficient)
    // pairs in decreasing elim order.
    std::vector<std::vector<std::pair<Monomial, MultiPoly>>> grouped_;
};

// Buchberger's algorithm (sugar strategy, both criteria) under the block
// elimination order; deterministic for fixed input.
GroebnerBasis buchberger(const PolySystem& system, const std::vector<Var>& elim,
                         const std::vector<Var>& params, const GBConfig& cfg = default_gb_config());

// Column k holds the coordinates of g * b_k in the quotient basis.
Matrix<RatFunc> mult_matrix(const MultiPoly& g, const GroebnerBasis& gb,
                            const QuotientBasis& basis);

}  // namespace paralmi
