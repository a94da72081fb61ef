#pragma once

#include <optional>
#include <vector>

#include "paralmi/polynomial.hpp"

namespace paralmi {

// Exactly one real root of the squarefree defining polynomial in (lo, hi].
struct IsolatingInterval {
    MultiPoly poly;
    Rational lo, hi;
};

// One cell of the decomposition of the real line by a finite root set.
struct Cell1D {
    enum class Kind { LeftRay, Point, Interval, RightRay };
    Kind kind;
    // A rational representative: inside the cell for rays/intervals, inside
    // the isolating interval for point cells (the root itself when rational).
    Rational sample;
    std::optional<IsolatingInterval> root;  // set for Point cells
    bool sample_is_root = false;            // Point cells with a rational root
};

// Number of distinct real roots of squarefree p in the half-open (lo, hi].
int sturm_count(const MultiPoly& p, Var v, const Rational& lo, const Rational& hi);

// Distinct real roots of p (squarefree part taken first), disjoint dyadic
// intervals sorted increasingly.
std::vector<IsolatingInterval> isolate_roots(const MultiPoly& p, Var v);

// Halves the interval, keeping the root.
IsolatingInterval refine(const IsolatingInterval& iv, Var v);

// Exact sign of g at the algebraic root described by iv.
int sign_at_root(const MultiPoly& g, Var v, const IsolatingInterval& iv);

// Partition of the line induced by all roots of the given polynomials.
std::vector<Cell1D> cells_1d(const PolyVec& polys, Var v);

// At least one rational point in every open cell, plus outer points and the
// rational roots hit exactly; guarantees a point in every full-dimensional
// connected component of any set whose boundary lies in the roots.
std::vector<Rational> sample_points_1d(const PolyVec& polys, Var v);

// True iff some real x satisfies g_i(x) >= 0 for every i; decided exactly on
// the induced cell decomposition with algebraic sign evaluation at roots.
bool feasibility_oracle_1d(const PolyVec& gs, Var v);

}  // namespace paralmi
