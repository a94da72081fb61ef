#include "paralmi/univariate.hpp"

#include <algorithm>

#include "paralmi/error.hpp"

namespace paralmi {

namespace {

// Dense coefficient vector, index = degree, trailing entry nonzero.
using UPoly = std::vector<Rational>;

UPoly to_upoly(const MultiPoly& p, Var v) {
    UPoly c(static_cast<size_t>(std::max<int64_t>(p.degree_in(v), 0)) + 1, Rational(0));
    for (const auto& [m, k] : p.terms()) {
        if (m.degree() != m.exponent(v))
            throw std::invalid_argument("polynomial is not univariate in " + var_name(v));
        c[m.exponent(v)] += k;
    }
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    return c;
}

bool is_zero(const UPoly& p) { return p.size() == 1 && p[0] == 0; }
size_t deg(const UPoly& p) { return p.size() - 1; }

Rational eval(const UPoly& p, const Rational& x) {
    Rational acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

UPoly derivative(const UPoly& p) {
    if (p.size() == 1) return {Rational(0)};
    UPoly d(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Rational(static_cast<long>(i));
    return d;
}

// Remainder of a by b over Q.
UPoly rem(UPoly a, const UPoly& b) {
    while (!is_zero(a) && deg(a) >= deg(b)) {
        Rational f = a.back() / b.back();
        size_t shift = deg(a) - deg(b);
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        while (a.size() > 1 && a.back() == 0) a.pop_back();
    }
    return a;
}

UPoly monic(UPoly p) {
    if (is_zero(p)) return p;
    Rational lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
    while (!is_zero(b)) {
        UPoly r = rem(a, b);
        a = std::move(b);
        b = monic(std::move(r));
    }
    return monic(std::move(a));
}

UPoly divide(const UPoly& a, const UPoly& b) {
    UPoly r = a, q(a.size(), Rational(0));
    while (!is_zero(r) && deg(r) >= deg(b)) {
        Rational f = r.back() / b.back();
        size_t shift = deg(r) - deg(b);
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) r[i + shift] -= f * b[i];
        while (r.size() > 1 && r.back() == 0) r.pop_back();
    }
    while (q.size() > 1 && q.back() == 0) q.pop_back();
    return q;
}

UPoly squarefree(const UPoly& p) {
    if (p.size() <= 2) return monic(p);
    UPoly g = upoly_gcd(p, derivative(p));
    if (deg(g) == 0) return monic(p);
    return monic(divide(p, g));
}

struct SturmChain {
    std::vector<UPoly> seq;

    explicit SturmChain(const UPoly& p) {
        seq.push_back(p);
        UPoly d = derivative(p);
        if (!is_zero(d)) seq.push_back(d);
        while (seq.size() >= 2) {
            UPoly r = rem(seq[seq.size() - 2], seq.back());
            if (is_zero(r)) break;
            for (auto& c : r) c = -c;
            seq.push_back(std::move(r));
        }
    }

    int variations(const Rational& x) const {
        int var = 0, prev = 0;
        for (const auto& p : seq) {
            int s = sign(eval(p, x));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    }

    // Roots of the (squarefree) head polynomial in (lo, hi].
    int count(const Rational& lo, const Rational& hi) const {
        return variations(lo) - variations(hi);
    }
};

// Strict bound on the absolute value of every root.
Rational root_bound(const UPoly& p) {
    Rational maxq(0);
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        Rational q = abs(p[i] / p.back());
        if (q > maxq) maxq = q;
    }
    return maxq + 1;
}

std::vector<IsolatingInterval> isolate(const UPoly& sf, const MultiPoly& sf_poly) {
    std::vector<IsolatingInterval> out;
    if (deg(sf) == 0) return out;
    SturmChain chain(sf);
    Rational bound(ceil_rational(root_bound(sf)));
    struct Node {
        Rational lo, hi;
        int count;
    };
    std::vector<Node> stack = {{-bound, bound, chain.count(-bound, bound)}};
    while (!stack.empty()) {
        Node nd = stack.back();
        stack.pop_back();
        if (nd.count == 0) continue;
        if (nd.count == 1) {
            out.push_back({sf_poly, nd.lo, nd.hi});
            continue;
        }
        Rational mid = (nd.lo + nd.hi) / 2;
        int left = chain.count(nd.lo, mid);
        stack.push_back({nd.lo, mid, left});
        stack.push_back({mid, nd.hi, nd.count - left});
    }
    std::sort(out.begin(), out.end(),
              [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
    return out;
}

// All positive divisors, via trial division; incomplete beyond the budget
// (the unfactored cofactor is kept as a single block), so callers may miss a
// rational root with huge coefficients but never report a wrong one.
std::vector<Integer> divisors_bounded(Integer n) {
    std::vector<Integer> primes;
    std::vector<unsigned> mult;
    if (n < 0) n = -n;
    for (Integer p(2); p * p <= n && p < 100000; ++p) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        primes.push_back(p);
        mult.push_back(e);
    }
    if (n > 1) {
        primes.push_back(n);
        mult.push_back(1);
    }
    std::vector<Integer> out = {Integer(1)};
    for (size_t i = 0; i < primes.size(); ++i) {
        size_t base = out.size();
        Integer pk(1);
        for (unsigned e = 1; e <= mult[i]; ++e) {
            pk *= primes[i];
            for (size_t k = 0; k < base; ++k) {
                out.push_back(out[k] * pk);
                if (out.size() > 4096) return out;  // cap
            }
        }
    }
    return out;
}

// Rational roots of squarefree p by the rational root theorem; found roots
// are divided out of p.
std::vector<Rational> extract_rational_roots(UPoly& p) {
    std::vector<Rational> roots;
    if (deg(p) == 0) return roots;
    // Root zero first.
    if (p[0] == 0) {
        roots.push_back(Rational(0));
        p.erase(p.begin());
    }
    if (deg(p) == 0) return roots;
    // Integerize.
    Integer den_lcm(1);
    for (const auto& c : p) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> z(p.size());
    for (size_t i = 0; i < p.size(); ++i) z[i] = Integer(p[i] * Rational(den_lcm));
    auto nums = divisors_bounded(z[0]);
    auto dens = divisors_bounded(z.back());
    std::vector<Rational> found;
    for (const auto& nu : nums)
        for (const auto& de : dens) {
            Rational cand = make_rational(nu, de);
            for (int s = 0; s < 2; ++s) {
                Rational r = s ? Rational(-cand) : cand;
                if (eval(p, r) == 0 &&
                    std::find(found.begin(), found.end(), r) == found.end())
                    found.push_back(r);
            }
        }
    std::sort(found.begin(), found.end());
    for (const auto& r : found) {
        // Divide by (x - r) over Q.
        UPoly q(p.size() - 1);
        Rational carry(0);
        for (size_t i = p.size(); i-- > 1;) {
            carry = p[i] + carry * r;
            q[i - 1] = carry;
        }
        p = std::move(q);
        roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

int sturm_count(const MultiPoly& p, Var v, const Rational& lo, const Rational& hi) {
    UPoly u = to_upoly(p, v);
    if (is_zero(u)) throw std::invalid_argument("sturm_count: zero polynomial");
    SturmChain chain(u);
    return chain.count(lo, hi);
}

std::vector<IsolatingInterval> isolate_roots(const MultiPoly& p, Var v) {
    UPoly u = to_upoly(p, v);
    if (is_zero(u)) throw std::invalid_argument("isolate_roots: zero polynomial");
    UPoly sf = squarefree(u);
    MultiPoly sf_poly;
    for (size_t i = 0; i < sf.size(); ++i)
        sf_poly += MultiPoly::term(Monomial::var(v, static_cast<uint32_t>(i)), sf[i]);
    return isolate(sf, sf_poly);
}

IsolatingInterval refine(const IsolatingInterval& iv, Var v) {
    Rational mid = (iv.lo + iv.hi) / 2;
    if (sturm_count(iv.poly, v, iv.lo, mid) == 1) return {iv.poly, iv.lo, mid};
    return {iv.poly, mid, iv.hi};
}

int sign_at_root(const MultiPoly& g, Var v, const IsolatingInterval& iv) {
    UPoly gu = to_upoly(g, v);
    if (is_zero(gu)) return 0;
    UPoly pu = to_upoly(iv.poly, v);
    // Zero test first: the roots of gcd(p, g) are roots of p, and the only
    // root of p in the interval is the described one.
    UPoly common = upoly_gcd(pu, gu);
    if (deg(common) > 0) {
        SturmChain cchain(common);
        if (cchain.count(iv.lo, iv.hi) > 0) return 0;
    }
    // g has no root at the point: refine until g has none in the interval,
    // where its sign is then constant and readable at the right endpoint.
    IsolatingInterval cur = iv;
    SturmChain gchain(squarefree(gu));
    while (gchain.count(cur.lo, cur.hi) > 0) cur = refine(cur, v);
    return sign(eval(gu, cur.hi));
}

std::vector<Cell1D> cells_1d(const PolyVec& polys, Var v) {
    std::vector<Cell1D> out;
    MultiPoly prod(Rational(1));
    for (const auto& p : polys) {
        if (p.is_zero()) throw std::invalid_argument("cells_1d: zero polynomial");
        prod = prod * p;
    }
    if (prod.is_constant()) {
        out.push_back({Cell1D::Kind::LeftRay, Rational(0), std::nullopt, false});
        return out;
    }

    UPoly u = squarefree(to_upoly(prod, v));
    std::vector<Rational> rats = extract_rational_roots(u);
    MultiPoly rem_poly;
    for (size_t i = 0; i < u.size(); ++i)
        rem_poly += MultiPoly::term(Monomial::var(v, static_cast<uint32_t>(i)), u[i]);
    auto ivs = isolate(u, rem_poly);

    // One event per root: (bracket_lo, bracket_hi] containing it, with
    // bracket_lo = bracket_hi for an exact rational root. Refine until the
    // brackets are strictly separated, which also pushes intervals off the
    // rational roots (their own roots are irrational-or-missed).
    struct Event {
        Rational lo, hi;
        std::optional<IsolatingInterval> iv;
        Rational value;  // exact root when iv is empty
    };
    std::vector<Event> events;
    for (const auto& r : rats) events.push_back({r, r, std::nullopt, r});
    for (const auto& iv : ivs) events.push_back({iv.lo, iv.hi, iv, Rational(0)});
    if (events.empty()) {
        // No real roots: the whole line is one cell.
        out.push_back({Cell1D::Kind::LeftRay, Rational(0), std::nullopt, false});
        return out;
    }

    bool moved = true;
    while (moved) {
        moved = false;
        for (auto& e : events) {
            if (!e.iv) continue;
            for (const auto& r : rats)
                if (e.lo < r && r <= e.hi) {
                    e.iv = refine(*e.iv, v);
                    e.lo = e.iv->lo;
                    e.hi = e.iv->hi;
                    moved = true;
                }
        }
        std::sort(events.begin(), events.end(),
                  [](const Event& a, const Event& b) { return a.hi < b.hi; });
        for (size_t k = 0; k + 1 < events.size(); ++k) {
            if (events[k].hi < events[k + 1].lo) continue;
            for (size_t j : {k, k + 1})
                if (events[j].iv) {
                    events[j].iv = refine(*events[j].iv, v);
                    events[j].lo = events[j].iv->lo;
                    events[j].hi = events[j].iv->hi;
                    moved = true;
                }
        }
    }

    out.push_back({Cell1D::Kind::LeftRay, events.front().lo - 1, std::nullopt, false});
    for (size_t k = 0; k < events.size(); ++k) {
        const Event& e = events[k];
        if (e.iv)
            out.push_back({Cell1D::Kind::Point, e.hi, e.iv, false});
        else
            out.push_back({Cell1D::Kind::Point, e.value, std::nullopt, true});
        if (k + 1 < events.size()) {
            // root_k <= hi_k < lo_{k+1} <= root_{k+1}, with root_k = hi_k
            // only in the exact case, so the gap midpoint separates them.
            Rational w = (e.hi + events[k + 1].lo) / 2;
            out.push_back({Cell1D::Kind::Interval, w, std::nullopt, false});
        }
    }
    out.push_back({Cell1D::Kind::RightRay, events.back().hi + 1, std::nullopt, false});
    return out;
}

std::vector<Rational> sample_points_1d(const PolyVec& polys, Var v) {
    std::vector<Rational> out;
    for (const auto& cell : cells_1d(polys, v)) {
        if (cell.kind == Cell1D::Kind::Point && !cell.sample_is_root) continue;
        out.push_back(cell.sample);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool feasibility_oracle_1d(const PolyVec& gs, Var v) {
    if (gs.empty()) return true;
    for (const auto& g : gs)
        if (g.is_zero()) throw std::invalid_argument("feasibility_oracle_1d: zero polynomial");
    auto cells = cells_1d(gs, v);
    for (const auto& cell : cells) {
        bool ok = true;
        for (const auto& g : gs) {
            int s;
            if (cell.kind == Cell1D::Kind::Point && !cell.sample_is_root)
                s = sign_at_root(g, v, *cell.root);
            else
                s = sign(g.evaluate({{v, cell.sample}}));
            if (s < 0) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace paralmi
