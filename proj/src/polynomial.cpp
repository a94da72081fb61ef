#include "paralmi/polynomial.hpp"

#include <algorithm>
#include <set>

namespace paralmi {

std::vector<Var> MultiPoly::variables() const {
    std::set<Var> seen;
    for (const auto& [m, c] : terms_)
        for (const auto& f : m.factors()) seen.insert(f.first);
    return {seen.begin(), seen.end()};
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly::TermMap::const_iterator MultiPoly::leading(const MonomialOrder& order) const {
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.compare(it->first, best->first) > 0) best = it;
    return best;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& b) {
    for (const auto& [m, c] : b.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& b) {
    for (const auto& [m, c] : b.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out = a;
    out += b;
    return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out = a;
    out -= b;
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    // Iterate over the smaller operand.
    const MultiPoly& small = a.term_count() <= b.term_count() ? a : b;
    const MultiPoly& large = a.term_count() <= b.term_count() ? b : a;
    for (const auto& [ms, cs] : small.terms_)
        for (const auto& [ml, cl] : large.terms_) out.add_term(ms * ml, cs * cl);
    return out;
}

MultiPoly operator*(const MultiPoly& a, const Rational& c) {
    MultiPoly out;
    if (c == 0) return out;
    for (const auto& [m, k] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), m, k * c);
    return out;
}

MultiPoly MultiPoly::pow(uint32_t e) const {
    MultiPoly out(Rational(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) out = out * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return out;
}

MultiPoly MultiPoly::times_term(const Monomial& m, const Rational& c) const {
    MultiPoly out;
    if (c == 0) return out;
    for (const auto& [mm, cc] : terms_) out.add_term(mm * m, cc * c);
    return out;
}

MultiPoly MultiPoly::derivative(Var v) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        uint32_t e = m.exponent(v);
        if (e == 0) continue;
        Monomial dm = m.quotient(Monomial::var(v, 1));
        out.add_term(dm, c * Rational(e));
    }
    return out;
}

MultiPoly MultiPoly::specialize(const std::map<Var, Rational>& assignment) const {
    if (assignment.empty()) return *this;
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        Rational coef = c;
        Monomial rest;
        std::vector<Monomial::Factor> kept;
        for (const auto& f : m.factors()) {
            auto it = assignment.find(f.first);
            if (it == assignment.end())
                kept.push_back(f);
            else
                coef *= paralmi::pow(it->second, f.second);
        }
        out.add_term(Monomial(std::move(kept)), coef);
    }
    return out;
}

MultiPoly MultiPoly::substitute(const std::map<Var, MultiPoly>& assignment) const {
    if (assignment.empty()) return *this;
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        MultiPoly prod = MultiPoly::term(Monomial(), c);
        std::vector<Monomial::Factor> kept;
        for (const auto& f : m.factors()) {
            auto it = assignment.find(f.first);
            if (it == assignment.end())
                kept.push_back(f);
            else
                prod = prod * it->second.pow(f.second);
        }
        out += prod.times_term(Monomial(std::move(kept)), Rational(1));
    }
    return out;
}

Rational MultiPoly::evaluate(const std::map<Var, Rational>& point) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (const auto& f : m.factors()) {
            auto it = point.find(f.first);
            if (it == point.end()) throw std::runtime_error("evaluate: unassigned variable");
            v *= paralmi::pow(it->second, f.second);
        }
        acc += v;
    }
    return acc;
}

MultiPoly MultiPoly::coefficient_of(Var v, uint32_t e) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        if (m.exponent(v) != e) continue;
        out.add_term(m.quotient(Monomial::var(v, e)), c);
    }
    return out;
}

std::map<Monomial, MultiPoly, CanonicalLess> MultiPoly::group_by(VarKind kind) const {
    std::map<Monomial, MultiPoly, CanonicalLess> out;
    for (const auto& [m, c] : terms_) {
        Monomial key = m.filter([&](Var v) { return v.kind() == kind; });
        Monomial rest = m.quotient(key);
        out[key].add_term(rest, c);
    }
    return out;
}

Rational MultiPoly::content() const {
    if (terms_.empty()) return Rational(0);
    Integer num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content = make_rational(num_gcd, den_lcm);
    if (sign(terms_.rbegin()->second) < 0) content = -content;
    return content;
}

MultiPoly MultiPoly::primitive_part() const {
    if (terms_.empty()) return *this;
    Rational c = content();
    MultiPoly out;
    for (const auto& [m, k] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), m, Rational(k / c));
    return out;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    MultiPoly rem = *this, quot;
    const auto& lt = *divisor.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& rlt = *rem.terms_.rbegin();
        if (!lt.first.divides(rlt.first)) return std::nullopt;
        Monomial qm = rlt.first.quotient(lt.first);
        Rational qc = rlt.second / lt.second;
        quot.add_term(qm, qc);
        rem -= divisor.times_term(qm, qc);
    }
    return quot;
}

namespace {

// Leading coefficient (a polynomial in the remaining variables) and degree
// with respect to one variable.
MultiPoly lead_coeff_in(const MultiPoly& p, Var v, int64_t deg) {
    return p.coefficient_of(v, static_cast<uint32_t>(deg));
}

// Content with respect to v: gcd of the coefficients of the powers of v.
MultiPoly content_in(const MultiPoly& p, Var v) {
    MultiPoly acc;
    int64_t d = p.degree_in(v);
    for (int64_t e = 0; e <= d; ++e) {
        MultiPoly c = p.coefficient_of(v, static_cast<uint32_t>(e));
        if (c.is_zero()) continue;
        acc = acc.is_zero() ? c : gcd(acc, c);
        if (acc.is_constant()) break;
    }
    return acc;
}

// Pseudo-remainder of a by b with respect to v.
MultiPoly prem(MultiPoly a, const MultiPoly& b, Var v) {
    int64_t db = b.degree_in(v);
    MultiPoly lb = lead_coeff_in(b, v, db);
    while (!a.is_zero()) {
        int64_t da = a.degree_in(v);
        if (da < db) break;
        MultiPoly la = lead_coeff_in(a, v, da);
        MultiPoly shift = MultiPoly::variable(v, static_cast<uint32_t>(da - db));
        a = a * lb - b * (la * shift);
    }
    return a;
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.is_constant() || b.is_constant()) return MultiPoly(Rational(1));

    // Main variable: the most important one present in either operand.
    Var v = a.variables().front();
    {
        Var vb = b.variables().front();
        if (vb < v) v = vb;
    }
    if (!a.uses(v)) {
        // b uses v, a does not: gcd divides the v-content of b.
        return gcd(a, content_in(b, v));
    }
    if (!b.uses(v)) return gcd(b, content_in(a, v));

    MultiPoly ca = content_in(a, v), cb = content_in(b, v);
    MultiPoly pa = *a.divide_exact(ca), pb = *b.divide_exact(cb);
    MultiPoly cg = gcd(ca, cb);

    // Primitive pseudo-remainder sequence.
    MultiPoly f = pa, g = pb;
    if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);
    while (!g.is_zero()) {
        MultiPoly r = prem(f, g, v);
        f = g;
        if (r.is_zero()) {
            g = r;
        } else {
            MultiPoly cr = content_in(r, v);
            g = *r.divide_exact(cr);
        }
    }
    MultiPoly cf = content_in(f, v);
    MultiPoly result = (*f.divide_exact(cf)) * cg;
    return result.primitive_part();
}

MultiPoly MultiPoly::squarefree_part() const {
    if (is_zero() || is_constant()) return primitive_part();
    MultiPoly d = *this;
    for (Var v : variables()) {
        MultiPoly dv = derivative(v);
        if (!dv.is_zero()) d = gcd(d, dv);
        if (d.is_constant()) break;
    }
    if (d.is_constant()) return primitive_part();
    return divide_exact(d)->primitive_part();
}

}  // namespace paralmi
