#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "paralmi/variables.hpp"

namespace paralmi {

// Power product. Factors are kept sorted by variable id with no zero
// exponents, so equal monomials have equal representations.
class Monomial {
  public:
    using Factor = std::pair<Var, uint32_t>;

    Monomial() = default;

    explicit Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
        std::sort(factors_.begin(), factors_.end(),
                  [](const Factor& a, const Factor& b) { return a.first < b.first; });
        factors_.erase(std::remove_if(factors_.begin(), factors_.end(),
                                      [](const Factor& f) { return f.second == 0; }),
                       factors_.end());
    }

    static Monomial var(Var v, uint32_t e = 1) {
        Monomial m;
        if (e > 0) m.factors_.push_back({v, e});
        return m;
    }

    bool is_one() const { return factors_.empty(); }

    uint32_t exponent(Var v) const {
        for (const auto& f : factors_)
            if (f.first == v) return f.second;
        return 0;
    }

    int64_t degree() const {
        int64_t d = 0;
        for (const auto& f : factors_) d += f.second;
        return d;
    }

    int64_t degree_in(VarKind k) const {
        int64_t d = 0;
        for (const auto& f : factors_)
            if (f.first.kind() == k) d += f.second;
        return d;
    }

    // Degree restricted to a sorted-by-id variable list.
    int64_t degree_in(const std::vector<Var>& vars) const {
        int64_t d = 0;
        for (const auto& f : factors_)
            if (std::binary_search(vars.begin(), vars.end(), f.first)) d += f.second;
        return d;
    }

    const std::vector<Factor>& factors() const { return factors_; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial out;
        out.factors_.reserve(a.factors_.size() + b.factors_.size());
        auto ia = a.factors_.begin(), ib = b.factors_.begin();
        while (ia != a.factors_.end() && ib != b.factors_.end()) {
            if (ia->first < ib->first)
                out.factors_.push_back(*ia++);
            else if (ib->first < ia->first)
                out.factors_.push_back(*ib++);
            else {
                out.factors_.push_back({ia->first, ia->second + ib->second});
                ++ia, ++ib;
            }
        }
        out.factors_.insert(out.factors_.end(), ia, a.factors_.end());
        out.factors_.insert(out.factors_.end(), ib, b.factors_.end());
        return out;
    }

    bool divides(const Monomial& other) const {
        auto it = other.factors_.begin();
        for (const auto& f : factors_) {
            while (it != other.factors_.end() && it->first < f.first) ++it;
            if (it == other.factors_.end() || it->first != f.first || it->second < f.second)
                return false;
        }
        return true;
    }

    // this / other; requires other.divides(*this).
    Monomial quotient(const Monomial& other) const {
        Monomial out;
        auto ib = other.factors_.begin();
        for (const auto& f : factors_) {
            uint32_t e = f.second;
            while (ib != other.factors_.end() && ib->first < f.first) ++ib;
            if (ib != other.factors_.end() && ib->first == f.first) e -= ib->second;
            if (e > 0) out.factors_.push_back({f.first, e});
        }
        return out;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial out;
        auto ia = a.factors_.begin(), ib = b.factors_.begin();
        while (ia != a.factors_.end() && ib != b.factors_.end()) {
            if (ia->first < ib->first)
                out.factors_.push_back(*ia++);
            else if (ib->first < ia->first)
                out.factors_.push_back(*ib++);
            else {
                out.factors_.push_back({ia->first, std::max(ia->second, ib->second)});
                ++ia, ++ib;
            }
        }
        out.factors_.insert(out.factors_.end(), ia, a.factors_.end());
        out.factors_.insert(out.factors_.end(), ib, b.factors_.end());
        return out;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        auto ia = a.factors_.begin(), ib = b.factors_.begin();
        while (ia != a.factors_.end() && ib != b.factors_.end()) {
            if (ia->first < ib->first)
                ++ia;
            else if (ib->first < ia->first)
                ++ib;
            else
                return false;
        }
        return true;
    }

    // Keeps only factors whose variable satisfies pred.
    template <typename Pred>
    Monomial filter(Pred pred) const {
        Monomial out;
        for (const auto& f : factors_)
            if (pred(f.first)) out.factors_.push_back(f);
        return out;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    size_t hash() const {
        size_t h = 1469598103934665603ull;
        for (const auto& f : factors_) {
            h = (h ^ f.first.id) * 1099511628211ull;
            h = (h ^ f.second) * 1099511628211ull;
        }
        return h;
    }

  private:
    std::vector<Factor> factors_;
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace paralmi
