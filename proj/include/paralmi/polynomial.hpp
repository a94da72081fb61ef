#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paralmi/ordering.hpp"
#include "paralmi/rational.hpp"

namespace paralmi {

// Sparse multivariate polynomial over Q. Terms are kept canonical: no zero
// coefficients, monomials unique, stored in increasing canonical grevlex
// order.
class MultiPoly {
  public:
    using TermMap = std::map<Monomial, Rational, CanonicalLess>;

    MultiPoly() = default;
    explicit MultiPoly(const Rational& c) {
        if (c != 0) terms_[Monomial()] = c;
    }
    explicit MultiPoly(long c) : MultiPoly(Rational(c)) {}

    static MultiPoly variable(Var v, uint32_t e = 1) {
        return term(Monomial::var(v, e), Rational(1));
    }
    static MultiPoly term(const Monomial& m, const Rational& c) {
        MultiPoly p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    // Constant value; zero polynomial gives 0. Caller checks is_constant().
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        return terms_.begin()->second;
    }

    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    int64_t total_degree() const {
        int64_t d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;  // -1 for the zero polynomial
    }
    int64_t degree_in(VarKind k) const {
        int64_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(k));
        return d;
    }
    int64_t degree_in(Var v) const {
        int64_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max<int64_t>(d, m.exponent(v));
        return d;
    }

    bool uses(Var v) const {
        for (const auto& [m, c] : terms_)
            if (m.exponent(v) > 0) return true;
        return false;
    }
    bool uses_kind(VarKind k) const {
        for (const auto& [m, c] : terms_)
            if (m.degree_in(k) > 0) return true;
        return false;
    }

    std::vector<Var> variables() const;

    const Rational& coefficient(const Monomial& m) const {
        static const Rational zero(0);
        auto it = terms_.find(m);
        return it == terms_.end() ? zero : it->second;
    }

    void add_term(const Monomial& m, const Rational& c);

    // Leading term with respect to the canonical order (largest monomial).
    const std::pair<const Monomial, Rational>& leading_canonical() const {
        return *terms_.rbegin();
    }
    // Leading monomial with respect to an arbitrary order (linear scan).
    TermMap::const_iterator leading(const MonomialOrder& order) const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const Rational& c);
    friend MultiPoly operator*(const Rational& c, const MultiPoly& a) { return a * c; }
    MultiPoly& operator+=(const MultiPoly& b);
    MultiPoly& operator-=(const MultiPoly& b);

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(uint32_t e) const;

    // p * monomial * coefficient, fused (the Groebner engine's inner loop).
    MultiPoly times_term(const Monomial& m, const Rational& c) const;

    MultiPoly derivative(Var v) const;

    // Ring homomorphism fixing unassigned variables.
    MultiPoly specialize(const std::map<Var, Rational>& assignment) const;

    // Substitutes polynomials for variables (used by change-of-variables and
    // projection prefixes).
    MultiPoly substitute(const std::map<Var, MultiPoly>& assignment) const;

    Rational evaluate(const std::map<Var, Rational>& point) const;

    // Coefficient of v^e viewed as a polynomial in v over the rest.
    MultiPoly coefficient_of(Var v, uint32_t e) const;

    // Collects the coefficient of each monomial in `kind`-variables; e.g. for
    // p in Q[y][x], group_by(X) maps each x-monomial to its y-coefficient.
    std::map<Monomial, MultiPoly, CanonicalLess> group_by(VarKind kind) const;

    // gcd of all coefficients times sign of the canonical leading one.
    Rational content() const;
    MultiPoly primitive_part() const;  // integer coefficients, gcd 1, positive lc

    friend MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);
    std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;
    MultiPoly squarefree_part() const;

  private:
    TermMap terms_;
};

using PolyVec = std::vector<MultiPoly>;

}  // namespace paralmi
