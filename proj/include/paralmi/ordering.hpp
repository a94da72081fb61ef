#pragma once

#include <memory>
#include <vector>

#include "paralmi/monomial.hpp"

namespace paralmi {

// Canonical total order on all monomials: graded reverse lexicographic with
// variable importance x1 > x2 > ... > y1 > ... > u > lambda > z > T (i.e.
// ascending packed id). Used for canonical storage and printing.
// Returns +1 when a comes later (is larger), -1 when smaller, 0 when equal.
inline int cmp_canonical(const Monomial& a, const Monomial& b) {
    int64_t da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    // Reverse lexicographic: scan from the least important variable (largest
    // id); the monomial with the smaller exponent there is the larger one.
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    auto ia = fa.rbegin(), ib = fb.rbegin();
    while (ia != fa.rend() && ib != fb.rend()) {
        if (ia->first > ib->first) {
            // a has a positive exponent on a less important var; a is smaller.
            return -1;
        }
        if (ib->first > ia->first) return 1;
        if (ia->second != ib->second) return ia->second < ib->second ? 1 : -1;
        ++ia, ++ib;
    }
    if (ia != fa.rend()) return -1;  // a still has extra (less important) factors
    if (ib != fb.rend()) return 1;
    return 0;
}

struct CanonicalLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return cmp_canonical(a, b) < 0;
    }
};

// Monomial order specification: grevlex / lex over an explicit variable list
// (importance-descending), or a block chain where earlier blocks dominate.
class MonomialOrder {
  public:
    enum class Kind { Grevlex, Lex, Block };

    static MonomialOrder grevlex(std::vector<Var> vars) {
        MonomialOrder o;
        o.kind_ = Kind::Grevlex;
        o.vars_ = std::move(vars);
        return o;
    }

    static MonomialOrder lex(std::vector<Var> vars) {
        MonomialOrder o;
        o.kind_ = Kind::Lex;
        o.vars_ = std::move(vars);
        return o;
    }

    static MonomialOrder block(std::vector<MonomialOrder> blocks) {
        MonomialOrder o;
        o.kind_ = Kind::Block;
        o.blocks_ = std::make_shared<std::vector<MonomialOrder>>(std::move(blocks));
        return o;
    }

    // The standard engine order: eliminated variables (grevlex) above the
    // parameters (grevlex).
    static MonomialOrder elimination(std::vector<Var> elim, std::vector<Var> params) {
        return block({grevlex(std::move(elim)), grevlex(std::move(params))});
    }

    Kind kind() const { return kind_; }
    const std::vector<Var>& vars() const { return vars_; }
    const std::vector<MonomialOrder>& blocks() const { return *blocks_; }

    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case Kind::Grevlex: {
                int64_t da = degree_of(a), db = degree_of(b);
                if (da != db) return da > db ? 1 : -1;
                for (auto it = vars_.rbegin(); it != vars_.rend(); ++it) {
                    uint32_t ea = a.exponent(*it), eb = b.exponent(*it);
                    if (ea != eb) return ea < eb ? 1 : -1;
                }
                return 0;
            }
            case Kind::Lex: {
                for (Var v : vars_) {
                    uint32_t ea = a.exponent(v), eb = b.exponent(v);
                    if (ea != eb) return ea > eb ? 1 : -1;
                }
                return 0;
            }
            case Kind::Block: {
                for (const auto& blk : *blocks_) {
                    int c = blk.compare(a, b);
                    if (c != 0) return c;
                }
                return 0;
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    // All variables this order mentions, in block sequence.
    std::vector<Var> all_vars() const {
        if (kind_ != Kind::Block) return vars_;
        std::vector<Var> out;
        for (const auto& blk : *blocks_) {
            auto v = blk.all_vars();
            out.insert(out.end(), v.begin(), v.end());
        }
        return out;
    }

  private:
    int64_t degree_of(const Monomial& m) const {
        int64_t d = 0;
        for (const auto& f : m.factors())
            for (Var v : vars_)
                if (f.first == v) {
                    d += f.second;
                    break;
                }
        return d;
    }

    Kind kind_ = Kind::Grevlex;
    std::vector<Var> vars_;
    std::shared_ptr<std::vector<MonomialOrder>> blocks_;
};

}  // namespace paralmi
