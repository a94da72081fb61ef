#include "paralmi/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>

#include "paralmi/error.hpp"

namespace paralmi {

GBConfig default_gb_config() {
    GBConfig cfg;
    if (const char* env = std::getenv("PARALMI_PAIR_BUDGET")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) cfg.pair_budget = v;
    }
    return cfg;
}

namespace {

// Engine polynomials: term map ordered decreasingly under the block order.
struct OrderGreater {
    const MonomialOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return order->compare(a, b) > 0;
    }
};

using EPoly = std::map<Monomial, Rational, OrderGreater>;

EPoly to_epoly(const MultiPoly& p, const MonomialOrder& order) {
    EPoly out(OrderGreater{&order});
    for (const auto& [m, c] : p.terms()) out.emplace(m, c);
    return out;
}

MultiPoly to_multipoly(const EPoly& p) {
    MultiPoly out;
    for (const auto& [m, c] : p) out.add_term(m, c);
    return out;
}

void add_scaled(EPoly& p, const EPoly& g, const Monomial& shift, const Rational& c) {
    for (const auto& [m, k] : g) {
        Monomial target = m * shift;
        auto [it, inserted] = p.emplace(target, k * c);
        if (!inserted) {
            it->second += k * c;
            if (it->second == 0) p.erase(it);
        }
    }
}

void make_primitive(EPoly& p) {
    if (p.empty()) return;
    Integer num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : p) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content = make_rational(num_gcd, den_lcm);
    if (sign(p.begin()->second) < 0) content = -content;
    if (content == 1) return;
    for (auto& [m, c] : p) c /= content;
}

// Fully reduces p modulo the basis; deterministic (first divisor wins).
EPoly reduce_full(EPoly p, const std::vector<EPoly>& basis, const MonomialOrder& order,
                  const std::vector<char>* alive = nullptr, size_t skip = SIZE_MAX) {
    EPoly out(OrderGreater{&order});
    while (!p.empty()) {
        auto head = p.begin();
        bool reduced = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (k == skip || basis[k].empty()) continue;
            if (alive && !(*alive)[k]) continue;
            const auto& glt = *basis[k].begin();
            if (!glt.first.divides(head->first)) continue;
            Monomial shift = head->first.quotient(glt.first);
            Rational c = -head->second / glt.second;
            add_scaled(p, basis[k], shift, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            out.emplace(head->first, head->second);
            p.erase(head);
        }
    }
    return out;
}

struct SPair {
    int64_t sugar;
    Monomial lcm;
    size_t i, j;
};

}  // namespace

GroebnerBasis buchberger(const PolySystem& system, const std::vector<Var>& elim,
                         const std::vector<Var>& params, const GBConfig& cfg) {
    if (system.generators.empty()) throw std::invalid_argument("buchberger: empty system");

    MonomialOrder order = MonomialOrder::elimination(elim, params);

    std::vector<EPoly> basis;
    std::vector<int64_t> sugar;
    for (const auto& g : system.generators) {
        if (g.is_zero()) continue;
        EPoly e = to_epoly(g, order);
        make_primitive(e);
        basis.push_back(std::move(e));
        sugar.push_back(g.total_degree());
    }
    if (basis.empty()) throw std::invalid_argument("buchberger: all generators are zero");

    auto pair_before = [&](const SPair& a, const SPair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = order.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    // Max-heap on "later", so the top is the earliest pair.
    auto heap_cmp = [&](const SPair& a, const SPair& b) { return pair_before(b, a); };

    std::vector<SPair> queue;
    std::set<std::pair<size_t, size_t>> pending;
    auto push_pair = [&](size_t i, size_t j) {
        const Monomial &mi = basis[i].begin()->first, &mj = basis[j].begin()->first;
        Monomial l = lcm(mi, mj);
        int64_t s =
            std::max(sugar[i] + l.quotient(mi).degree(), sugar[j] + l.quotient(mj).degree());
        queue.push_back(SPair{s, l, i, j});
        std::push_heap(queue.begin(), queue.end(), heap_cmp);
        pending.insert({i, j});
    };

    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

    size_t budget = cfg.pair_budget;
    while (!queue.empty()) {
        std::pop_heap(queue.begin(), queue.end(), heap_cmp);
        SPair pr = queue.back();
        queue.pop_back();
        pending.erase({pr.i, pr.j});

        const Monomial &mi = basis[pr.i].begin()->first, &mj = basis[pr.j].begin()->first;
        // Product criterion.
        if (coprime(mi, mj)) continue;
        // Chain criterion: some k with LM_k | lcm and both companion pairs
        // already treated.
        {
            bool skip = false;
            for (size_t k = 0; k < basis.size() && !skip; ++k) {
                if (k == pr.i || k == pr.j || basis[k].empty()) continue;
                if (!basis[k].begin()->first.divides(pr.lcm)) continue;
                auto ik = std::minmax(pr.i, k);
                auto jk = std::minmax(pr.j, k);
                if (!pending.count(ik) && !pending.count(jk)) skip = true;
            }
            if (skip) continue;
        }

        if (budget == 0)
            throw ResourceLimit("buchberger: pair budget exhausted (" +
                                std::to_string(cfg.pair_budget) + ")");
        --budget;

        // S-polynomial.
        EPoly s(OrderGreater{&order});
        {
            Monomial shift_i = pr.lcm.quotient(mi), shift_j = pr.lcm.quotient(mj);
            add_scaled(s, basis[pr.i], shift_i, Rational(1) / basis[pr.i].begin()->second);
            add_scaled(s, basis[pr.j], shift_j, Rational(-1) / basis[pr.j].begin()->second);
        }
        EPoly red = reduce_full(std::move(s), basis, order);
        if (red.empty()) continue;
        make_primitive(red);
        int64_t red_sugar = 0;
        for (const auto& [m, c] : red) red_sugar = std::max(red_sugar, m.degree());
        basis.push_back(std::move(red));
        sugar.push_back(red_sugar);
        size_t idx = basis.size() - 1;
        for (size_t i = 0; i < idx; ++i)
            if (!basis[i].empty()) push_pair(i, idx);
    }

    // Minimalize: drop elements whose leading monomial is divisible by the
    // leading monomial of another survivor.
    std::vector<char> alive(basis.size(), 1);
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = 0; j < basis.size() && alive[i]; ++j) {
            if (i == j || !alive[j]) continue;
            const Monomial &mi = basis[i].begin()->first, &mj = basis[j].begin()->first;
            if (mj.divides(mi) && !(mi == mj && j > i)) alive[i] = 0;
        }
    }
    // Tail-reduce survivors against each other.
    PolyVec reduced;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (!alive[i]) continue;
        EPoly r = reduce_full(basis[i], basis, order, &alive, i);
        make_primitive(r);
        if (!r.empty()) reduced.push_back(to_multipoly(r));
    }

    return GroebnerBasis(std::move(reduced), elim, params);
}

namespace {

Monomial elim_part(const Monomial& m) {
    return m.filter([](Var v) { return v.kind() != VarKind::Y; });
}

}  // namespace

GroebnerBasis::GroebnerBasis(PolyVec elements, std::vector<Var> elim, std::vector<Var> params)
    : elim_(std::move(elim)),
      params_(std::move(params)),
      order_(MonomialOrder::elimination(elim_, params_)) {
    std::sort(elim_.begin(), elim_.end());
    std::sort(params_.begin(), params_.end());
    MonomialOrder elim_order = MonomialOrder::grevlex(elim_);

    // Deterministic element order: by full leading monomial, increasing.
    std::sort(elements.begin(), elements.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return order_.compare(a.leading(order_)->first, b.leading(order_)->first) < 0;
    });

    for (MultiPoly& e : elements) {
        std::map<Monomial, MultiPoly, CanonicalLess> by_elim;
        for (const auto& [m, c] : e.terms()) {
            Monomial xm = elim_part(m);
            by_elim[xm].add_term(m.quotient(xm), c);
        }
        std::vector<std::pair<Monomial, MultiPoly>> grouped(by_elim.begin(), by_elim.end());
        std::sort(grouped.begin(), grouped.end(), [&](const auto& a, const auto& b) {
            return elim_order.compare(a.first, b.first) > 0;
        });
        // Scale: leading elim coefficient primitive integer, positive lead.
        Rational scale = grouped.front().second.content();
        if (scale != 1) {
            e = e * Rational(1 / scale);
            for (auto& [m, c] : grouped) c = c * Rational(1 / scale);
        }
        lead_elim_.push_back(grouped.front().first);
        lead_coeff_.push_back(grouped.front().second);
        grouped_.push_back(std::move(grouped));
        elements_.push_back(std::move(e));
    }
}

bool GroebnerBasis::contains_one() const {
    for (const auto& e : elements_)
        if (!e.is_zero() && e.is_constant()) return true;
    return false;
}

PolyVec GroebnerBasis::w_infty() const {
    PolyVec out;
    for (const auto& lc : lead_coeff_) {
        if (lc.is_constant()) continue;
        MultiPoly sf = lc.squarefree_part();
        if (std::find(out.begin(), out.end(), sf) == out.end()) out.push_back(sf);
    }
    return out;
}

std::pair<bool, size_t> GroebnerBasis::is_zero_dimensional() const {
    if (contains_one()) return {true, 0};
    // A pure-parameter element is a unit over Q(y): generically empty fiber.
    for (const auto& le : lead_elim_)
        if (le.is_one()) return {true, 0};
    for (Var v : elim_) {
        bool has_pure_power = false;
        for (const auto& le : lead_elim_) {
            uint32_t e = le.exponent(v);
            if (e > 0 && le.degree() == e) {
                has_pure_power = true;
                break;
            }
        }
        if (!has_pure_power) return {false, 0};
    }
    return {true, quotient_basis().delta};
}

QuotientBasis GroebnerBasis::quotient_basis() const {
    QuotientBasis out;
    if (contains_one()) return out;
    for (const auto& le : lead_elim_)
        if (le.is_one()) return out;  // unit over Q(y)

    // Bound the exponent of each variable by its pure-power leading monomial.
    std::vector<uint32_t> bound(elim_.size(), 0);
    for (size_t vi = 0; vi < elim_.size(); ++vi) {
        for (const auto& le : lead_elim_) {
            uint32_t e = le.exponent(elim_[vi]);
            if (e > 0 && le.degree() == e) {
                if (bound[vi] == 0 || e < bound[vi]) bound[vi] = e;
            }
        }
        if (bound[vi] == 0)
            throw NotZeroDimensional("no pure power of " + var_name(elim_[vi]) +
                                     " among the leading monomials");
    }

    std::vector<Monomial> staircase;
    auto reducible = [&](const Monomial& m) {
        for (const auto& le : lead_elim_)
            if (le.divides(m)) return true;
        return false;
    };
    std::function<void(size_t, const Monomial&)> walk = [&](size_t vi, const Monomial& acc) {
        if (vi == elim_.size()) {
            staircase.push_back(acc);
            return;
        }
        for (uint32_t e = 0; e < bound[vi]; ++e) {
            Monomial m = acc * Monomial::var(elim_[vi], e);
            if (reducible(m)) break;  // larger powers stay reducible
            walk(vi + 1, m);
        }
    };
    walk(0, Monomial());

    MonomialOrder elim_order = MonomialOrder::grevlex(elim_);
    std::sort(staircase.begin(), staircase.end(),
              [&](const Monomial& a, const Monomial& b) { return elim_order.compare(a, b) < 0; });
    out.monomials = std::move(staircase);
    out.delta = out.monomials.size();
    return out;
}

std::vector<RatFunc> GroebnerBasis::normal_form(const MultiPoly& p,
                                                const QuotientBasis& basis) const {
    // Trivial quotient (a constant or pure-parameter element): everything
    // reduces to zero.
    for (const auto& le : lead_elim_)
        if (le.is_one()) return std::vector<RatFunc>(basis.delta);

    MonomialOrder elim_order = MonomialOrder::grevlex(elim_);
    OrderGreater cmp{&elim_order};
    std::map<Monomial, RatFunc, OrderGreater> work(cmp);

    for (const auto& [m, c] : p.terms()) {
        Monomial xm = elim_part(m);
        RatFunc add{MultiPoly::term(m.quotient(xm), c)};
        auto [it, inserted] = work.emplace(xm, add);
        if (!inserted) it->second += add;
    }

    std::map<Monomial, RatFunc, CanonicalLess> result;
    while (!work.empty()) {
        auto head = work.begin();
        if (head->second.is_zero()) {
            work.erase(head);
            continue;
        }
        bool reduced = false;
        for (size_t k = 0; k < elements_.size(); ++k) {
            if (!lead_elim_[k].divides(head->first)) continue;
            Monomial shift = head->first.quotient(lead_elim_[k]);
            RatFunc q = head->second / RatFunc(lead_coeff_[k]);
            for (const auto& [gm, gc] : grouped_[k]) {
                Monomial target = gm * shift;
                RatFunc delta = q * RatFunc(gc);
                auto [it, inserted] = work.emplace(target, -delta);
                if (!inserted) it->second -= delta;
            }
            auto it = work.find(head->first);
            if (it != work.end() && it->second.is_zero()) work.erase(it);
            reduced = true;
            break;
        }
        if (!reduced) {
            result.emplace(head->first, head->second);
            work.erase(head);
        }
    }

    std::vector<RatFunc> coords(basis.delta, RatFunc());
    for (const auto& [m, c] : result) {
        if (c.is_zero()) continue;
        auto it = std::find(basis.monomials.begin(), basis.monomials.end(), m);
        if (it == basis.monomials.end())
            throw std::logic_error("normal form fell outside the quotient basis");
        coords[static_cast<size_t>(it - basis.monomials.begin())] = c;
    }
    return coords;
}

Matrix<RatFunc> mult_matrix(const MultiPoly& g, const GroebnerBasis& gb,
                            const QuotientBasis& basis) {
    Matrix<RatFunc> out(basis.delta, basis.delta);
    for (size_t k = 0; k < basis.delta; ++k) {
        MultiPoly gbk = g.times_term(basis.monomials[k], Rational(1));
        auto col = gb.normal_form(gbk, basis);
        for (size_t i = 0; i < basis.delta; ++i) out(i, k) = col[i];
    }
    return out;
}

}  // namespace paralmi
