#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "atkin/rational.hpp"

namespace atkin {

/// Element a + b*sqrt(D) of a real quadratic field. D=0 tags plain Q (b
/// forced to 0). Elements whose D tags differ cannot be combined, except
/// that D=0 promotes to the other side's field.
class QuadElem {
public:
    QuadElem() : a_(), b_(), d_(0) {}
    QuadElem(Rational a) : a_(std::move(a)), b_(), d_(0) {}
    QuadElem(long long a) : a_(a), b_(), d_(0) {}
    QuadElem(Rational a, Rational b, unsigned D) : a_(std::move(a)), b_(std::move(b)), d_(D) {
        if (d_ == 0 && !b_.is_zero()) throw math_error("sqrt component requires D > 0");
        normalize();
    }

    /// alpha-basis input [u,v] = u + v*(1+sqrt(D))/2, converted to (a,b).
    static QuadElem from_alpha(const Rational& u, const Rational& v, unsigned D) {
        Rational half(1, 2);
        return QuadElem(u + v * half, v * half, D);
    }
    /// (u, v) with x = u + v*(1+sqrt(D))/2.
    std::pair<Rational, Rational> to_alpha() const {
        return {a_ - b_, b_ + b_};
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    unsigned D() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadElem zero() const { QuadElem z; z.d_ = d_; return z; }
    QuadElem one() const { QuadElem o(Rational(1)); o.d_ = d_; return o; }

    QuadElem conj() const { return QuadElem(a_, -b_, d_); }
    /// a^2 - D b^2, the field norm.
    Rational norm() const { return a_ * a_ - Rational((long long)d_) * b_ * b_; }

    QuadElem inv() const {
        if (is_zero()) throw math_error("division by zero");
        Rational n = norm();
        // D squarefree and nonsquare: norm vanishes only at zero
        return QuadElem(a_ / n, -b_ / n, d_);
    }

    friend QuadElem operator+(const QuadElem& x, const QuadElem& y) {
        unsigned d = joinD(x, y);
        return QuadElem(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend QuadElem operator-(const QuadElem& x, const QuadElem& y) {
        unsigned d = joinD(x, y);
        return QuadElem(x.a_ - y.a_, x.b_ - y.b_, d);
    }
    friend QuadElem operator*(const QuadElem& x, const QuadElem& y) {
        unsigned d = joinD(x, y);
        Rational dd((long long)d);
        return QuadElem(x.a_ * y.a_ + dd * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend QuadElem operator/(const QuadElem& x, const QuadElem& y) { return x * y.inv(); }
    QuadElem operator-() const { return QuadElem(-a_, -b_, d_); }
    QuadElem& operator+=(const QuadElem& o) { *this = *this + o; return *this; }
    QuadElem& operator-=(const QuadElem& o) { *this = *this - o; return *this; }
    QuadElem& operator*=(const QuadElem& o) { *this = *this * o; return *this; }
    QuadElem& operator/=(const QuadElem& o) { *this = *this / o; return *this; }

    friend bool operator==(const QuadElem& x, const QuadElem& y) {
        if (x.a_ != y.a_ || x.b_ != y.b_) return false;
        return x.b_.is_zero() || x.d_ == y.d_;
    }
    friend bool operator!=(const QuadElem& x, const QuadElem& y) { return !(x == y); }

    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string s;
        if (!a_.is_zero()) s = a_.str();
        if (b_.is_one()) s += s.empty() ? "" : "+";
        else if (b_ == Rational(-1)) s += "-";
        else {
            if (!s.empty() && !b_.is_negative()) s += "+";
            s += b_.str() + "*";
        }
        s += "sqrt(" + std::to_string(d_) + ")";
        return s;
    }

private:
    void normalize() {
        if (b_.is_zero() && d_ != 0) d_ = 0;
    }
    static unsigned joinD(const QuadElem& x, const QuadElem& y) {
        if (x.d_ == 0) return y.d_;
        if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
        throw math_error("mixing sqrt(" + std::to_string(x.d_) + ") with sqrt(" +
                         std::to_string(y.d_) + ")");
    }

    Rational a_, b_;
    unsigned d_;
};

inline QuadElem embed(const Rational& r) { return QuadElem(r); }

} // namespace atkin
