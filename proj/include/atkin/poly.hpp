#pragma once

#include <string>
#include <utility>
#include <vector>

#include "atkin/finite_field.hpp"
#include "atkin/quadratic.hpp"
#include "atkin/rational.hpp"

namespace atkin {

inline std::uint64_t field_char(const Rational&) { return 0; }
inline std::uint64_t field_char(const QuadElem&) { return 0; }
inline std::uint64_t field_char(const FFElem& x) { return x.p(); }

/// Dense univariate polynomial over an exact field. Coefficients ascend by
/// degree with no trailing zeros; the zero polynomial has degree -1. Every
/// polynomial carries a sample unit of its coefficient domain so that values
/// can be fabricated for the zero polynomial too.
template <class K>
class Poly {
public:
    explicit Poly(K proto) : proto_(proto.one()) {}
    Poly(K proto, std::vector<K> coeffs) : proto_(proto.one()), c_(std::move(coeffs)) { trim(); }

    static Poly one(K proto) { return Poly(proto, {proto.one()}); }
    static Poly x(K proto) { return Poly(proto, {proto.zero(), proto.one()}); }
    static Poly monomial(K proto, std::size_t deg, K coeff) {
        std::vector<K> c(deg + 1, proto.zero());
        c[deg] = coeff;
        return Poly(proto, std::move(c));
    }

    const K& proto() const { return proto_; }
    long degree() const { return (long)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    std::size_t size() const { return c_.size(); }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : proto_.zero(); }
    const K& lead() const {
        if (c_.empty()) throw math_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    template <class F>
    auto map(F&& f) const -> Poly<decltype(f(std::declval<const K&>()))> {
        using K2 = decltype(f(std::declval<const K&>()));
        std::vector<K2> out;
        out.reserve(c_.size());
        for (const auto& x : c_) out.push_back(f(x));
        return Poly<K2>(f(proto_).one(), std::move(out));
    }

    K eval(const K& x) const {
        K acc = proto_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly monic() const {
        if (is_zero() || lead().is_one()) return *this;
        K li = lead().inv();
        std::vector<K> out = c_;
        for (auto& x : out) x = x * li;
        return Poly(proto_, std::move(out));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly(proto_);
        std::vector<K> out;
        out.reserve(c_.size() - 1);
        K n = proto_.zero();
        for (std::size_t i = 1; i < c_.size(); ++i) {
            n = n + proto_.one();
            out.push_back(c_[i] * n);
        }
        return Poly(proto_, std::move(out));
    }

    /// Raw coefficient reversal (x^deg * f(1/x)).
    Poly reciprocal() const {
        std::vector<K> out(c_.rbegin(), c_.rend());
        return Poly(proto_, std::move(out));
    }

    /// x^d * f(1/x) for a stated formal degree d >= deg(f).
    Poly reciprocal_to_degree(std::size_t d) const {
        if ((long)d < degree()) throw math_error("formal degree below actual degree");
        std::vector<K> out(d + 1, proto_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i) out[d - i] = c_[i];
        return Poly(proto_, std::move(out));
    }

    friend Poly operator+(const Poly& f, const Poly& g) {
        std::vector<K> out(std::max(f.c_.size(), g.c_.size()), f.proto_.zero());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.coeff(i) + g.coeff(i);
        return Poly(f.proto_, std::move(out));
    }
    friend Poly operator-(const Poly& f, const Poly& g) {
        std::vector<K> out(std::max(f.c_.size(), g.c_.size()), f.proto_.zero());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.coeff(i) - g.coeff(i);
        return Poly(f.proto_, std::move(out));
    }
    Poly operator-() const {
        std::vector<K> out = c_;
        for (auto& x : out) x = -x;
        return Poly(proto_, std::move(out));
    }
    friend Poly operator*(const Poly& f, const Poly& g) {
        if (f.is_zero() || g.is_zero()) return Poly(f.proto_);
        std::vector<K> out(f.c_.size() + g.c_.size() - 1, f.proto_.zero());
        for (std::size_t i = 0; i < f.c_.size(); ++i) {
            if (f.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < g.c_.size(); ++j)
                out[i + j] = out[i + j] + f.c_[i] * g.c_[j];
        }
        return Poly(f.proto_, std::move(out));
    }
    friend Poly operator*(const Poly& f, const K& s) {
        std::vector<K> out = f.c_;
        for (auto& x : out) x = x * s;
        return Poly(f.proto_, std::move(out));
    }

    friend bool operator==(const Poly& f, const Poly& g) {
        if (f.c_.size() != g.c_.size()) return false;
        for (std::size_t i = 0; i < f.c_.size(); ++i)
            if (!(f.c_[i] == g.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

    std::string str(const std::string& var = "J") const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            std::string cs = c_[i].str();
            bool neg = !cs.empty() && cs[0] == '-';
            bool compound = cs.find_first_of("+-", 1) != std::string::npos ||
                            cs.find("sqrt") != std::string::npos || cs.find('w') != std::string::npos;
            if (s.empty()) {
                if (neg && !compound) { s = "-"; cs = cs.substr(1); neg = false; }
            } else {
                s += (neg && !compound) ? " - " : " + ";
                if (neg && !compound) cs = cs.substr(1);
            }
            std::string term;
            if (i == 0) term = compound ? "(" + cs + ")" : cs;
            else {
                std::string xs = i == 1 ? var : var + "^" + std::to_string(i);
                if (c_[i].is_one()) term = xs;
                else term = (compound ? "(" + cs + ")" : cs) + "*" + xs;
            }
            s += term;
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    K proto_;
    std::vector<K> c_;
};

/// Quotient and remainder over a field; divisor must be nonzero.
template <class K>
std::pair<Poly<K>, Poly<K>> divrem(const Poly<K>& f, const Poly<K>& g) {
    if (g.is_zero()) throw math_error("polynomial division by zero");
    if (f.degree() < g.degree()) return {Poly<K>(f.proto()), f};
    std::vector<K> rem(f.coeffs());
    std::vector<K> quo(f.degree() - g.degree() + 1, f.proto().zero());
    K gi = g.lead().inv();
    for (long i = f.degree(); i >= g.degree(); --i) {
        K q = rem[i] * gi;
        if (q.is_zero()) continue;
        quo[i - g.degree()] = q;
        for (long j = 0; j <= g.degree(); ++j)
            rem[i - g.degree() + j] = rem[i - g.degree() + j] - q * g.coeff(j);
    }
    return {Poly<K>(f.proto(), std::move(quo)), Poly<K>(f.proto(), std::move(rem))};
}

/// Monic gcd by Euclid with monic remainder sequence; gcd(f, 0) = monic(f).
template <class K>
Poly<K> poly_gcd(Poly<K> f, Poly<K> g) {
    f = f.monic();
    g = g.monic();
    while (!g.is_zero()) {
        Poly<K> r = divrem(f, g).second;
        f = g;
        g = r.monic();
    }
    return f;
}

/// Monic lcm of a nonempty list, folded through f*g/gcd(f,g).
template <class K>
Poly<K> poly_lcm(const std::vector<Poly<K>>& fs) {
    if (fs.empty()) throw math_error("lcm of empty list");
    Poly<K> acc = fs[0].monic();
    for (std::size_t i = 1; i < fs.size(); ++i) {
        if (acc.is_zero() || fs[i].is_zero()) { acc = Poly<K>(acc.proto()); continue; }
        Poly<K> d = poly_gcd(acc, fs[i]);
        acc = divrem(acc * fs[i], d).first.monic();
    }
    return acc;
}

/// Monic f / gcd(f, f'). In characteristic p the guard deg f < p applies.
template <class K>
Poly<K> squarefree_part(const Poly<K>& f) {
    if (f.is_zero()) return f;
    std::uint64_t ch = field_char(f.proto());
    if (ch != 0 && (std::uint64_t)f.degree() >= ch)
        throw math_error("squarefree guard violated: deg " + std::to_string(f.degree()) +
                         " >= characteristic " + std::to_string(ch));
    Poly<K> d = poly_gcd(f, f.derivative());
    return divrem(f.monic(), d).first.monic();
}

/// True iff the coefficient list is its own reversal.
template <class K>
bool palindrome_check(const Poly<K>& f) {
    return f == f.reciprocal();
}

} // namespace atkin
