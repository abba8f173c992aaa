#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "atkin/errors.hpp"

namespace atkin {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number, canonical form gcd(|num|,den)=1, den>=1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw math_error("rational with zero denominator");
        if (den < 0)
            v_ = boost::multiprecision::cpp_rational(-num, -den);
        else
            v_ = boost::multiprecision::cpp_rational(num, den);
    }
    Rational(long long num, long long den) : Rational(Integer(num), Integer(den)) {}

    static Rational parse(std::string_view s) {
        auto bad = [&] { return data_error("cannot parse rational: \"" + std::string(s) + "\""); };
        if (s.empty()) throw bad();
        auto slash = s.find('/');
        try {
            if (slash == std::string_view::npos)
                return Rational(Integer(std::string(s)));
            Integer num{std::string(s.substr(0, slash))};
            Integer den{std::string(s.substr(slash + 1))};
            if (den == 0) throw bad();
            return Rational(num, den);
        } catch (const std::runtime_error& e) {
            if (dynamic_cast<const data_error*>(&e)) throw;
            throw bad();
        }
    }

    Integer numerator() const { return boost::multiprecision::numerator(v_); }
    Integer denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return v_ < 0; }
    bool is_integer() const { return denominator() == 1; }

    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1); }

    Rational inv() const {
        if (is_zero()) throw math_error("division by zero");
        Rational r;
        r.v_ = 1 / v_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw math_error("division by zero");
        return wrap(a.v_ / b.v_);
    }
    Rational operator-() const { return wrap(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Canonical text form "num" or "num/den".
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

private:
    static Rational wrap(boost::multiprecision::cpp_rational v) {
        Rational r;
        r.v_ = std::move(v);
        return r;
    }
    boost::multiprecision::cpp_rational v_;
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

} // namespace atkin
