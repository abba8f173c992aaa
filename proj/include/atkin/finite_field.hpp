#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "atkin/quadratic.hpp"
#include "atkin/rational.hpp"

namespace atkin {

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline bool is_squarefree_u64(std::uint64_t n) {
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0) return false;
    return n >= 1;
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (std::uint64_t)((__uint128_t)a * b % p);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw math_error("division by zero");
    return powmod_u64(a, p - 2, p);
}

inline std::uint64_t mod_of_integer(const Integer& n, std::uint64_t p) {
    Integer m = n % Integer(p);
    if (m < 0) m += Integer(p);
    return m.convert_to<std::uint64_t>();
}

/// num/den mod p; refuses when p divides den.
inline std::uint64_t mod_of_rational(const Rational& r, std::uint64_t p) {
    std::uint64_t den = mod_of_integer(r.denominator(), p);
    if (den == 0)
        throw math_error("not p-integral: " + r.str() + " at p=" + std::to_string(p));
    return mulmod_u64(mod_of_integer(r.numerator(), p), invmod_u64(den, p), p);
}

enum class Splitting { split, inert, ramified };

inline std::string splitting_name(Splitting s) {
    switch (s) {
        case Splitting::split: return "split";
        case Splitting::inert: return "inert";
        default: return "ramified";
    }
}

/// Splitting of p in Q(sqrt(D)) by quadratic-residue test. For split p the
/// canonical root is the smaller representative r of the two with r^2 = D.
inline Splitting splitting_type(unsigned D, std::uint64_t p, std::uint64_t* root = nullptr) {
    if (p == 2) throw math_error("p=2 rejected (2 is always a bad prime)");
    if (!is_prime_u64(p)) throw math_error(std::to_string(p) + " is not prime");
    if (D == 0 || !is_squarefree_u64(D)) throw math_error("D must be a squarefree positive integer");
    if (D % p == 0) return Splitting::ramified;
    for (std::uint64_t r = 1; r <= p / 2; ++r)
        if (mulmod_u64(r, r, p) == D % p) {
            if (root) *root = r;
            return Splitting::split;
        }
    return Splitting::inert;
}

/// Element of F_p (quad tag off) or F_{p^2} = F_p[w]/(w^2 - d) (quad tag on).
class FFElem {
public:
    FFElem() : p_(0), d_(0), quad_(false), c0_(0), c1_(0) {}
    FFElem(std::uint64_t p, std::uint64_t c0)
        : p_(p), d_(0), quad_(false), c0_(c0 % p), c1_(0) {}
    FFElem(std::uint64_t p, std::uint64_t d, std::uint64_t c0, std::uint64_t c1)
        : p_(p), d_(d % p), quad_(true), c0_(c0 % p), c1_(c1 % p) {}

    std::uint64_t p() const { return p_; }
    std::uint64_t d() const { return d_; }
    bool quadratic() const { return quad_; }
    std::uint64_t c0() const { return c0_; }
    std::uint64_t c1() const { return c1_; }

    bool is_zero() const { return c0_ == 0 && c1_ == 0; }
    bool is_one() const { return c0_ == 1 && c1_ == 0; }

    FFElem zero() const { FFElem z = *this; z.c0_ = z.c1_ = 0; return z; }
    FFElem one() const { FFElem o = *this; o.c0_ = 1; o.c1_ = 0; return o; }

    /// Galois conjugate w -> -w (identity on the prime field).
    FFElem conj() const {
        FFElem r = *this;
        if (quad_) r.c1_ = (p_ - c1_) % p_;
        return r;
    }

    FFElem inv() const {
        if (is_zero()) throw math_error("division by zero");
        if (!quad_ || c1_ == 0) {
            FFElem r = *this;
            r.c0_ = invmod_u64(c0_, p_);
            r.c1_ = 0;
            return r;
        }
        // (c0 + c1 w)^-1 = conj / (c0^2 - d c1^2); nonzero since w^2-d irreducible
        std::uint64_t n = (mulmod_u64(c0_, c0_, p_) + p_ * p_ -
                           mulmod_u64(d_, mulmod_u64(c1_, c1_, p_), p_)) % p_;
        std::uint64_t ni = invmod_u64(n, p_);
        FFElem r = *this;
        r.c0_ = mulmod_u64(c0_, ni, p_);
        r.c1_ = mulmod_u64((p_ - c1_) % p_, ni, p_);
        return r;
    }

    FFElem pow(std::uint64_t e) const {
        FFElem r = one(), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    friend FFElem operator+(const FFElem& x, const FFElem& y) {
        FFElem r = join(x, y);
        r.c0_ = (x.c0_ + y.c0_) % r.p_;
        r.c1_ = (x.c1_ + y.c1_) % r.p_;
        return r;
    }
    friend FFElem operator-(const FFElem& x, const FFElem& y) {
        FFElem r = join(x, y);
        r.c0_ = (x.c0_ + r.p_ - y.c0_) % r.p_;
        r.c1_ = (x.c1_ + r.p_ - y.c1_) % r.p_;
        return r;
    }
    friend FFElem operator*(const FFElem& x, const FFElem& y) {
        FFElem r = join(x, y);
        std::uint64_t p = r.p_;
        r.c0_ = (mulmod_u64(x.c0_, y.c0_, p) +
                 mulmod_u64(r.d_, mulmod_u64(x.c1_, y.c1_, p), p)) % p;
        r.c1_ = (mulmod_u64(x.c0_, y.c1_, p) + mulmod_u64(x.c1_, y.c0_, p)) % p;
        return r;
    }
    friend FFElem operator/(const FFElem& x, const FFElem& y) { return x * y.inv(); }
    FFElem operator-() const {
        FFElem r = *this;
        r.c0_ = (p_ - c0_) % p_;
        r.c1_ = (p_ - c1_) % p_;
        return r;
    }

    friend bool operator==(const FFElem& x, const FFElem& y) {
        return x.p_ == y.p_ && x.c0_ == y.c0_ && x.c1_ == y.c1_;
    }
    friend bool operator!=(const FFElem& x, const FFElem& y) { return !(x == y); }

    std::string str() const {
        if (c1_ == 0) return std::to_string(c0_);
        std::string s;
        if (c0_ != 0) s = std::to_string(c0_) + "+";
        if (c1_ != 1) s += std::to_string(c1_) + "*";
        return s + "w";
    }

private:
    static FFElem join(const FFElem& x, const FFElem& y) {
        if (x.p_ != y.p_) throw math_error("mixing different characteristics");
        if (x.quad_ && y.quad_ && x.d_ != y.d_)
            throw math_error("mixing different quadratic extensions");
        FFElem r = x.quad_ ? x : y;
        return r;
    }

    std::uint64_t p_, d_;
    bool quad_;
    std::uint64_t c0_, c1_;
};

/// A rational prime p together with its splitting in Q(sqrt(D)) and the
/// reduction maps. D=0 models plain Q: residue field F_p, no branch choice.
class PrimeContext {
public:
    PrimeContext(unsigned D, std::uint64_t p) : D_(D), p_(p), root_(0) {
        if (p == 2) throw math_error("p=2 rejected (2 is always a bad prime)");
        if (!is_prime_u64(p)) throw math_error(std::to_string(p) + " is not prime");
        split_ = D == 0 ? Splitting::split : splitting_type(D, p, &root_);
    }

    unsigned D() const { return D_; }
    std::uint64_t p() const { return p_; }
    Splitting splitting() const { return split_; }
    std::uint64_t root() const { return root_; }
    /// Number of reduction branches: 2 for split quadratic, else 1.
    int branches() const { return (D_ != 0 && split_ == Splitting::split) ? 2 : 1; }
    /// True when the residue field is F_{p^2}.
    bool residue_quadratic() const { return D_ != 0 && split_ == Splitting::inert; }

    FFElem reduce(const Rational& r) const {
        std::uint64_t c = mod_of_rational(r, p_);
        return residue_quadratic() ? FFElem(p_, D_, c, 0) : FFElem(p_, c);
    }

    /// Ring-homomorphic image; branch selects sqrt(D) -> root / p-root for
    /// split p, and is ignored for inert p (sqrt(D) -> w).
    FFElem reduce(const QuadElem& x, int branch = 0) const {
        if (x.D() != 0 && D_ == 0)
            throw math_error("reducing sqrt(" + std::to_string(x.D()) + ") in a rational context");
        if (x.D() != 0 && x.D() != D_)
            throw math_error("element field Q(sqrt(" + std::to_string(x.D()) +
                             ")) does not match context D=" + std::to_string(D_));
        if (x.D() != 0 && split_ == Splitting::ramified)
            throw math_error("p=" + std::to_string(p_) + " is ramified in Q(sqrt(" +
                             std::to_string(D_) + ")); reduction refused");
        std::uint64_t a = mod_of_rational(x.a(), p_);
        if (x.b().is_zero()) return residue_quadratic() ? FFElem(p_, D_, a, 0) : FFElem(p_, a);
        std::uint64_t b = mod_of_rational(x.b(), p_);
        if (split_ == Splitting::inert) return FFElem(p_, D_, a, b);
        std::uint64_t r = branch == 0 ? root_ : p_ - root_;
        return FFElem(p_, (a + mulmod_u64(b, r, p_)) % p_);
    }

private:
    unsigned D_;
    std::uint64_t p_;
    Splitting split_;
    std::uint64_t root_;
};

} // namespace atkin
