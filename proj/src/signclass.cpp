#include "paralmi/signclass.hpp"

#include <stdexcept>

namespace paralmi {

Matrix<long> sign_matrix(size_t s) {
    Matrix<long> m(1, 1);
    m(0, 0) = 1;
    const long base[3][3] = {{1, 1, 1}, {0, 1, -1}, {0, 1, 1}};
    for (size_t step = 0; step < s; ++step) {
        size_t dim = m.rows();
        Matrix<long> next(dim * 3, dim * 3);
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < dim; ++j)
                for (size_t a = 0; a < 3; ++a)
                    for (size_t b = 0; b < 3; ++b)
                        next(i * 3 + a, j * 3 + b) = m(i, j) * base[a][b];
        m = next;
    }
    return m;
}

std::vector<Rational> count_coefficients(size_t s) {
    std::vector<Rational> out = {Rational(1)};
    const Rational base[3] = {Rational(1), make_rational(1, 2), make_rational(-1, 2)};
    for (size_t step = 0; step < s; ++step) {
        std::vector<Rational> next(out.size() * 3);
        for (size_t i = 0; i < out.size(); ++i)
            for (size_t a = 0; a < 3; ++a) next[i * 3 + a] = out[i] * base[a];
        out = next;
    }
    return out;
}

Integer count_from_signatures(const std::vector<SignatureResult>& sigs,
                              const std::vector<Rational>& coeffs) {
    if (sigs.size() != coeffs.size())
        throw std::invalid_argument("count_from_signatures: size mismatch");
    Rational acc(0);
    for (size_t i = 0; i < sigs.size(); ++i) acc += coeffs[i] * Rational(sigs[i].signature);
    if (acc.get_den() != 1 || acc < 0)
        throw std::logic_error("sign determination produced a non-integer count");
    return acc.get_num();
}

Integer count_nonneg_solutions(const HermiteEngine& engine, const std::map<Var, Rational>& y) {
    auto sigs = engine.signatures_at(y);
    auto coeffs = count_coefficients(engine.num_sign_polys());
    return count_from_signatures(sigs, coeffs);
}

}  // namespace paralmi
