#pragma once

#include <array>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "atkin/poly.hpp"

namespace atkin {
namespace oracle {

/// Lightweight F_p element for the fiber-enumeration loops.
struct Fp {
    std::uint64_t p = 0, v = 0;
    Fp() = default;
    Fp(std::uint64_t p_, std::uint64_t v_) : p(p_), v(v_ % p_) {}
    bool is_zero() const { return v == 0; }
    Fp zero() const { return Fp(p, 0); }
    Fp one() const { return Fp(p, 1); }
    Fp inv() const { return Fp(p, invmod_u64(v, p)); }
    Fp frob() const { return *this; }
    friend Fp operator+(Fp a, Fp b) { return Fp(a.p, a.v + b.v); }
    friend Fp operator-(Fp a, Fp b) { return Fp(a.p, a.v + a.p - b.v); }
    friend Fp operator*(Fp a, Fp b) { return Fp(a.p, mulmod_u64(a.v, b.v, a.p)); }
    Fp operator-() const { return Fp(p, p - v); }
    friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
    friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }
    friend bool operator<(Fp a, Fp b) { return a.v < b.v; }
};

/// Quadratic extension F[s]/(s^2 - nr) of a base field F; towers give
/// F_{p^2} and F_{p^4}.
template <class F>
struct Ext2 {
    F c0, c1, nr;
    Ext2() = default;
    Ext2(F c0_, F c1_, F nr_) : c0(c0_), c1(c1_), nr(nr_) {}
    static Ext2 scalar(F x, F nr_) { return Ext2(x, x.zero(), nr_); }
    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    Ext2 zero() const { return Ext2(c0.zero(), c0.zero(), nr); }
    Ext2 one() const { return Ext2(c0.one(), c0.zero(), nr); }
    Ext2 inv() const {
        F n = c0 * c0 - nr * c1 * c1;
        F ni = n.inv();
        return Ext2(c0 * ni, -(c1 * ni), nr);
    }
    friend Ext2 operator+(const Ext2& a, const Ext2& b) { return Ext2(a.c0 + b.c0, a.c1 + b.c1, a.nr); }
    friend Ext2 operator-(const Ext2& a, const Ext2& b) { return Ext2(a.c0 - b.c0, a.c1 - b.c1, a.nr); }
    friend Ext2 operator*(const Ext2& a, const Ext2& b) {
        return Ext2(a.c0 * b.c0 + a.nr * (a.c1 * b.c1), a.c0 * b.c1 + a.c1 * b.c0, a.nr);
    }
    Ext2 operator-() const { return Ext2(-c0, -c1, nr); }
    friend bool operator==(const Ext2& a, const Ext2& b) { return a.c0 == b.c0 && a.c1 == b.c1; }
    friend bool operator!=(const Ext2& a, const Ext2& b) { return !(a == b); }
    Ext2 pow(std::uint64_t e) const {
        Ext2 r = one(), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
};

inline std::uint64_t smallest_nonresidue(std::uint64_t p) {
    for (std::uint64_t n = 2; n < p; ++n)
        if (powmod_u64(n, (p - 1) / 2, p) == p - 1) return n;
    throw math_error("no quadratic nonresidue mod " + std::to_string(p));
}

using Fp2 = Ext2<Fp>;

inline Fp2 fp2_make(std::uint64_t p, std::uint64_t nr, std::uint64_t a, std::uint64_t b) {
    return Fp2(Fp(p, a), Fp(p, b), Fp(p, nr));
}

/// x -> x^p on F_{p^2} represented over w with w^2 = nr: w^p = -w.
inline Fp2 fp2_frob(const Fp2& x) { return Fp2(x.c0, -x.c1, x.nr); }

namespace detail {

template <class F>
std::vector<F> polymul_capped(const std::vector<F>& f, const std::vector<F>& g, std::size_t cap,
                              const F& zero) {
    std::size_t n = std::min(f.size() + g.size() - 1, cap + 1);
    std::vector<F> out(n, zero);
    for (std::size_t i = 0; i < f.size() && i <= cap; ++i) {
        if (f[i].is_zero()) continue;
        for (std::size_t j = 0; j < g.size() && i + j <= cap; ++j)
            out[i + j] = out[i + j] + f[i] * g[j];
    }
    return out;
}

/// f^e with coefficients above x^cap discarded; binary exponentiation.
template <class F>
std::vector<F> polypow_capped(std::vector<F> f, std::uint64_t e, std::size_t cap, const F& zero,
                              const F& one) {
    std::vector<F> r{one};
    while (e) {
        if (e & 1) r = polymul_capped(r, f, cap, zero);
        e >>= 1;
        if (e) f = polymul_capped(f, f, cap, zero);
    }
    return r;
}

} // namespace detail

/// Cartier-Manin matrix A = (c_{i p - j})_{i,j in {1,2}} of y^2 = f(x),
/// deg f in {5, 6}, where f^{(p-1)/2} = sum c_k x^k. f must be squarefree.
template <class F>
std::array<std::array<F, 2>, 2> cartier_manin(const std::vector<F>& f, std::uint64_t p,
                                              const F& zero, const F& one) {
    std::size_t deg = f.size() - 1;
    if (deg != 5 && deg != 6) throw math_error("cartier_manin expects deg f in {5, 6}");
    {
        // singular fiber check: gcd(f, f') must be constant
        Poly<F> fp(one, f);
        std::vector<F> dc;
        for (std::size_t i = 1; i < f.size(); ++i) {
            F n = zero;
            for (std::size_t k = 0; k < i; ++k) n = n + one;
            dc.push_back(f[i] * n);
        }
        Poly<F> fd(one, dc);
        if (poly_gcd(fp, fd).degree() > 0) throw math_error("singular fiber");
    }
    std::vector<F> h = detail::polypow_capped(f, (p - 1) / 2, 2 * p, zero, one);
    auto c = [&](std::size_t k) { return k < h.size() ? h[k] : zero; };
    return {{{c(p - 1), c(p - 2)}, {c(2 * p - 1), c(2 * p - 2)}}};
}

template <class F, class FrobFn>
F semilinear_det(std::array<std::array<F, 2>, 2> A, int e, FrobFn frob) {
    // M = A^{(p^{e-1})} ... A^{(p)} A
    std::array<std::array<F, 2>, 2> M = A;
    for (int k = 1; k < e; ++k) {
        for (auto& row : A)
            for (auto& x : row) x = frob(x);
        std::array<std::array<F, 2>, 2> R;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) R[i][j] = A[i][0] * M[0][j] + A[i][1] * M[1][j];
        M = R;
    }
    return M[0][0] * M[1][1] - M[0][1] * M[1][0];
}

/// Supersingular j-invariants over F_{p^2}, found by the x^{p-1}-coefficient
/// criterion on standard short models. Elements are (a, b) with j = a + b w,
/// w^2 = smallest nonresidue mod p.
inline std::set<std::pair<std::uint64_t, std::uint64_t>> ss_elliptic_j(std::uint64_t p) {
    if (p < 5) throw math_error("ss_elliptic_j needs p >= 5");
    std::uint64_t nr = smallest_nonresidue(p);
    Fp2 zero = fp2_make(p, nr, 0, 0), one = fp2_make(p, nr, 1, 0);
    std::set<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b) {
            Fp2 j = fp2_make(p, nr, a, b);
            std::vector<Fp2> f;
            if (j.is_zero())
                f = {one, zero, zero, one}; // x^3 + 1
            else if (j == fp2_make(p, nr, 1728 % p, 0))
                f = {zero, one, zero, one}; // x^3 + x
            else {
                Fp2 k = j * (Ext2<Fp>::scalar(Fp(p, 1728 % p), Fp(p, nr)) - j).inv();
                Fp2 three = fp2_make(p, nr, 3, 0), two = fp2_make(p, nr, 2, 0);
                f = {two * k, three * k, zero, one}; // x^3 + 3k x + 2k
            }
            std::vector<Fp2> h = detail::polypow_capped(f, (p - 1) / 2, p - 1, zero, one);
            if (h.size() < p || h[p - 1].is_zero()) out.insert({a, b});
        }
    return out;
}

/// Igusa's Hasse polynomial for the Legendre family:
/// H_p(l) = sum_{i<=m} C(m,i)^2 l^i, m = (p-1)/2, over F_p.
inline Poly<FFElem> legendre_hasse(std::uint64_t p) {
    if (p < 3 || !is_prime_u64(p)) throw math_error("legendre_hasse needs an odd prime");
    std::uint64_t m = (p - 1) / 2;
    std::vector<FFElem> c;
    c.reserve(m + 1);
    std::uint64_t binom = 1;
    for (std::uint64_t i = 0; i <= m; ++i) {
        c.emplace_back(p, mulmod_u64(binom, binom, p));
        if (i < m)
            binom = mulmod_u64(mulmod_u64(binom, (m - i) % p, p), invmod_u64(i + 1, p), p);
    }
    return Poly<FFElem>(FFElem(p, 1), std::move(c));
}

/// Non-ordinary fibers of the genus-two family
///   y^2 = x^5 - 5x^3 + 5x - 2 eta   (eta != infinity),   y^2 = x^5 - 1 (eta = infinity)
/// with Hauptmodul J = (1 - eta^2)^{-1}, enumerated over J in F_{p^2}.
/// When eta falls in a quadratic extension of F_{p^2}, the Cartier-Manin
/// product is evaluated over that extension (x -> eta x descends the data;
/// quadratic twists have the same geometric p-rank, so either root works).
inline std::set<std::pair<std::uint64_t, std::uint64_t>> nonordinary_fibers_delta25(std::uint64_t p) {
    if (p == 2 || p == 5 || !is_prime_u64(p))
        throw math_error("delta25 oracle needs a prime p not in {2, 5}");
    std::uint64_t nr = smallest_nonresidue(p);
    Fp2 zero = fp2_make(p, nr, 0, 0), one = fp2_make(p, nr, 1, 0);
    Fp2 five = fp2_make(p, nr, 5 % p, 0), two = fp2_make(p, nr, 2, 0);
    auto nonord_fp2 = [&](const std::vector<Fp2>& f) {
        auto A = cartier_manin(f, p, zero, one);
        return semilinear_det(A, 2, [](const Fp2& x) { return fp2_frob(x); }).is_zero();
    };
    std::map<std::pair<std::uint64_t, std::uint64_t>, Fp2> squares;
    for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b) {
            Fp2 r = fp2_make(p, nr, a, b);
            Fp2 r2 = r * r;
            squares.emplace(std::make_pair(r2.c0.v, r2.c1.v), r);
        }
    auto sqrt_fp2 = [&](const Fp2& s) -> std::pair<bool, Fp2> {
        auto it = squares.find({s.c0.v, s.c1.v});
        if (it == squares.end()) return {false, zero};
        return {true, it->second};
    };
    std::set<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b) {
            Fp2 J0 = fp2_make(p, nr, a, b);
            bool bad;
            if (J0.is_zero()) {
                bad = nonord_fp2({-one, zero, zero, zero, zero, one}); // x^5 - 1
            } else {
                Fp2 s = one - J0.inv(); // eta^2
                if (s.is_zero()) {
                    bad = nonord_fp2({zero, five, zero, -five, zero, one}); // eta = 0
                } else if (auto [ok, eta] = sqrt_fp2(s); ok) {
                    bad = nonord_fp2({-(two * eta), five, zero, -five, zero, one});
                } else {
                    // eta lives in F_{p^4} = F_{p^2}[tau]/(tau^2 - s); eta = tau
                    using Fp4 = Ext2<Fp2>;
                    Fp4 z4 = Fp4(zero, zero, s), o4 = Fp4(one, zero, s);
                    Fp4 eta = Fp4(zero, one, s);
                    auto lift = [&](const Fp2& x) { return Fp4(x, zero, s); };
                    std::vector<Fp4> f = {-(lift(two) * eta), lift(five), z4, -lift(five), z4, o4};
                    auto A = cartier_manin(f, p, z4, o4);
                    auto frob4 = [&](const Fp4& x) { return x.pow(p); };
                    bad = semilinear_det(A, 4, frob4).is_zero();
                }
            }
            if (bad) out.insert({a, b});
        }
    return out;
}

/// Roots over F_{p^2} of a polynomial with F_p coefficients, in the same
/// (a, b) encoding as the oracles.
inline std::set<std::pair<std::uint64_t, std::uint64_t>> roots_in_fp2(const Poly<FFElem>& f) {
    if (f.is_zero()) throw math_error("roots of the zero polynomial");
    std::uint64_t p = f.proto().p();
    std::uint64_t nr = smallest_nonresidue(p);
    std::set<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b) {
            Fp2 x = fp2_make(p, nr, a, b);
            Fp2 acc = fp2_make(p, nr, 0, 0);
            for (std::size_t i = f.size(); i-- > 0;) {
                if (f.coeff(i).c1() != 0)
                    throw math_error("roots_in_fp2 expects F_p coefficients");
                acc = acc * x + fp2_make(p, nr, f.coeff(i).c0(), 0);
            }
            if (acc.is_zero()) out.insert({a, b});
        }
    return out;
}

} // namespace oracle
} // namespace atkin
