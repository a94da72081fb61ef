#pragma once

#include "paralmi/polynomial.hpp"

namespace paralmi {

// Rational function in the parameters. Canonical form: gcd(num, den)
// constant, den a primitive integer polynomial with positive leading
// coefficient (so equal functions have identical representations).
class RatFunc {
  public:
    RatFunc() : num_(), den_(Rational(1)) {}
    /* implicit */ RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
    /* implicit */ RatFunc(const MultiPoly& p) : num_(p), den_(Rational(1)) {}
    RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DivisionByZero("rational function division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    Rational evaluate(const std::map<Var, Rational>& point) const {
        Rational d = den_.evaluate(point);
        if (d == 0) throw DivisionByZero("rational function denominator vanishes");
        return num_.evaluate(point) / d;
    }

  private:
    void normalize() {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = MultiPoly(Rational(1));
            return;
        }
        if (!den_.is_constant()) {
            MultiPoly g = gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = *num_.divide_exact(g);
                den_ = *den_.divide_exact(g);
            }
        }
        Rational dc = den_.content();
        num_ = num_ * Rational(1 / dc);
        den_ = den_ * Rational(1 / dc);
    }

    MultiPoly num_;
    MultiPoly den_;
};

}  // namespace paralmi
