#include "paralmi/hermite.hpp"

#include <algorithm>

#include "paralmi/error.hpp"

namespace paralmi {

std::vector<std::vector<uint32_t>> alpha_lex(size_t s) {
    std::vector<std::vector<uint32_t>> out;
    std::vector<uint32_t> cur(s, 0);
    for (;;) {
        out.push_back(cur);
        size_t k = s;
        while (k > 0) {
            if (cur[k - 1] < 2) {
                ++cur[k - 1];
                std::fill(cur.begin() + static_cast<long>(k), cur.end(), 0);
                break;
            }
            --k;
        }
        if (k == 0) break;
    }
    return out;
}

void HermiteEngine::absorb_denominators(const Matrix<RatFunc>& m) {
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            const MultiPoly& den = m(i, j).den();
            if (den.is_constant()) continue;
            MultiPoly sf = den.squarefree_part();
            if (std::find(validity_.begin(), validity_.end(), sf) == validity_.end())
                validity_.push_back(sf);
        }
}

HermiteEngine::HermiteEngine(const GroebnerBasis& gb, const QuotientBasis& basis,
                             PolyVec sign_polys)
    : delta_(basis.delta), sign_polys_(std::move(sign_polys)) {
    validity_ = gb.w_infty();

    mb_.reserve(delta_);
    for (size_t k = 0; k < delta_; ++k) {
        mb_.push_back(mult_matrix(MultiPoly::term(basis.monomials[k], Rational(1)), gb, basis));
        absorb_denominators(mb_.back());
    }
    for (const auto& g : sign_polys_) {
        mg_.push_back(mult_matrix(g, gb, basis));
        absorb_denominators(mg_.back());
    }
    trace_.reserve(delta_);
    for (size_t k = 0; k < delta_; ++k) trace_.push_back(mb_[k].trace());
}

Matrix<RatFunc> HermiteEngine::hermite(const std::vector<uint32_t>& alpha) const {
    if (alpha.size() != mg_.size()) throw std::invalid_argument("hermite: bad alpha length");
    // M_{g^alpha}
    Matrix<RatFunc> m = Matrix<RatFunc>::identity(delta_, RatFunc(Rational(1)), RatFunc());
    for (size_t i = 0; i < alpha.size(); ++i)
        for (uint32_t e = 0; e < alpha[i]; ++e) m = m * mg_[i];
    // T_k = Tr(M_{g^alpha} M_{b_k}); entries h_ij = sum_k (M_{b_j})_{k,i} T_k.
    std::vector<RatFunc> t(delta_);
    for (size_t k = 0; k < delta_; ++k) {
        RatFunc acc;
        for (size_t a = 0; a < delta_; ++a)
            for (size_t b = 0; b < delta_; ++b) {
                if (m(a, b).is_zero() || mb_[k](b, a).is_zero()) continue;
                acc += m(a, b) * mb_[k](b, a);
            }
        t[k] = acc;
    }
    Matrix<RatFunc> h(delta_, delta_);
    for (size_t i = 0; i < delta_; ++i)
        for (size_t j = i; j < delta_; ++j) {
            RatFunc acc;
            for (size_t k = 0; k < delta_; ++k) {
                const RatFunc& c = mb_[j](k, i);
                if (c.is_zero() || t[k].is_zero()) continue;
                acc += c * t[k];
            }
            h(i, j) = acc;
            h(j, i) = acc;
        }
    return h;
}

Matrix<Rational> HermiteEngine::specialize_matrix(const Matrix<RatFunc>& m,
                                                  const std::map<Var, Rational>& y) const {
    Matrix<Rational> out(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            try {
                out(i, j) = m(i, j).evaluate(y);
            } catch (const DivisionByZero&) {
                throw InvalidSpecialization("parameter lies on a denominator locus");
            }
        }
    return out;
}

std::vector<SignatureResult> HermiteEngine::signatures_at(
    const std::map<Var, Rational>& y) const {
    for (const auto& w : validity_)
        if (w.evaluate(y) == 0)
            throw InvalidSpecialization("parameter lies on the validity locus");

    std::vector<Matrix<Rational>> mb, mg;
    mb.reserve(delta_);
    for (const auto& m : mb_) mb.push_back(specialize_matrix(m, y));
    for (const auto& m : mg_) mg.push_back(specialize_matrix(m, y));
    std::vector<Rational> tr(delta_);
    for (size_t k = 0; k < delta_; ++k) tr[k] = trace_[k].evaluate(y);

    std::vector<SignatureResult> out;
    auto alphas = alpha_lex(mg_.size());
    for (const auto& alpha : alphas) {
        Matrix<Rational> m = Matrix<Rational>::identity(delta_, Rational(1), Rational(0));
        for (size_t i = 0; i < alpha.size(); ++i)
            for (uint32_t e = 0; e < alpha[i]; ++e) m = m * mg[i];
        std::vector<Rational> t(delta_);
        for (size_t k = 0; k < delta_; ++k) {
            Rational acc(0);
            for (size_t a = 0; a < delta_; ++a)
                for (size_t b = 0; b < delta_; ++b) acc += m(a, b) * mb[k](b, a);
            t[k] = acc;
        }
        Matrix<Rational> h(delta_, delta_);
        for (size_t i = 0; i < delta_; ++i)
            for (size_t j = i; j < delta_; ++j) {
                Rational acc(0);
                for (size_t k = 0; k < delta_; ++k) acc += mb[j](k, i) * t[k];
                h(i, j) = acc;
                h(j, i) = acc;
            }
        out.push_back(signature(h));
    }
    return out;
}

Matrix<Rational> specialize_hermite(const HermiteMatrix& h, const std::map<Var, Rational>& y) {
    for (const auto& w : h.validity)
        if (w.evaluate(y) == 0)
            throw InvalidSpecialization("parameter lies on the validity locus");
    Matrix<Rational> out(h.entries.rows(), h.entries.cols());
    for (size_t i = 0; i < h.entries.rows(); ++i)
        for (size_t j = 0; j < h.entries.cols(); ++j) {
            try {
                out(i, j) = h.entries(i, j).evaluate(y);
            } catch (const DivisionByZero&) {
                throw InvalidSpecialization("parameter lies on a denominator locus");
            }
        }
    return out;
}

int tarski_query(const GroebnerBasis& gb, const QuotientBasis& basis, const MultiPoly& g,
                 const std::map<Var, Rational>& y) {
    HermiteEngine engine(gb, basis, {g});
    auto sigs = engine.signatures_at(y);
    // alpha = (1) is the second entry of the lexicographic enumeration.
    return sigs[1].signature;
}

}  // namespace paralmi
