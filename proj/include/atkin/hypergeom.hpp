#pragma once

#include <numeric>

#include "atkin/moments.hpp"
#include "atkin/orthogonal.hpp"
#include "atkin/series.hpp"

namespace atkin {

/// Parameters of 2F1(a, b; c; t); c must not be a nonpositive integer.
struct HGParams {
    Rational a, b, c;
};

/// Exact 2F1 expansion via the term ratio (a+i)(b+i)/((c+i)(1+i)).
inline Series<Rational> f21_series(const HGParams& p, std::size_t order) {
    if (order < 1) throw math_error("series order must be >= 1");
    std::vector<Rational> c;
    c.reserve(order);
    c.push_back(Rational(1));
    for (std::size_t i = 0; i + 1 < order; ++i) {
        Rational den = (p.c + Rational((long long)i)) * Rational((long long)(i + 1));
        if (den.is_zero())
            throw math_error("2F1 undefined: c + " + std::to_string(i) + " = 0");
        c.push_back(c.back() * (p.a + Rational((long long)i)) * (p.b + Rational((long long)i)) / den);
    }
    return Series<Rational>(Rational(1), std::move(c));
}

/// Gauss's continued fraction for 2F1(a+1,b;c;z)/2F1(a,b;c;z):
/// l_1 = b/c, l_{2k} = (a+k)(c-b+k-1)/((c+2k-2)(c+2k-1)),
/// l_{2k+1} = (b+k)(c-a-1+k)/((c+2k-1)(c+2k)).
inline CFCoeffs<Rational> gauss_cf(const HGParams& p, std::size_t count) {
    CFCoeffs<Rational> out;
    for (std::size_t n = 1; n <= count; ++n) {
        Rational lam;
        if (n == 1) {
            if (p.c.is_zero()) throw math_error("gauss_cf: c = 0");
            lam = p.b / p.c;
        } else if (n % 2 == 0) {
            Rational k((long long)(n / 2));
            Rational den = (p.c + k + k - Rational(2)) * (p.c + k + k - Rational(1));
            if (den.is_zero()) throw math_error("gauss_cf: zero denominator at n=" + std::to_string(n));
            lam = (p.a + k) * (p.c - p.b + k - Rational(1)) / den;
        } else {
            Rational k((long long)(n / 2));
            Rational den = (p.c + k + k - Rational(1)) * (p.c + k + k);
            if (den.is_zero()) throw math_error("gauss_cf: zero denominator at n=" + std::to_string(n));
            lam = (p.b + k) * (p.c - p.a - Rational(1) + k) / den;
        }
        if (lam.is_zero())
            throw math_error("gauss_cf: lambda_" + std::to_string(n) +
                             " = 0 (continued fraction degenerates)");
        out.lambda.push_back(lam);
    }
    return out;
}

/// Triangle-curve family datum for a cusped group with vertex orders (n, m):
/// embedding index j with integers k_j <= n, r_j <= m determines
/// N_j = nm - n r_j - m k_j and the hypergeometric solution parameters
/// a = N_j/(2nm), b = (N_j + 2n r_j)/(2nm).
struct TriangleDatum {
    int n, m, j;
    int kj, rj;
    int Nj;
    Rational a, b;

    TriangleDatum(int n_, int m_, int j_, int kj_, int rj_) : n(n_), m(m_), j(j_), kj(kj_), rj(rj_) {
        if (n < 2 || m < 2) throw math_error("triangle datum needs n, m >= 2");
        if (n * m <= n + m) throw math_error("triangle datum violates hyperbolicity 1/n + 1/m < 1");
        if (kj == 0 || rj == 0 || kj > n || rj > m) throw math_error("invalid (k_j, r_j)");
        Nj = n * m - n * rj - m * kj;
        if (Nj <= 0) throw math_error("N_j must be positive");
        long long nm2 = 2LL * n * m;
        a = Rational(Nj, nm2);
        b = Rational(Nj + 2LL * n * rj, nm2);
    }

    /// Hecke case (n=2): k_j = 1, r_j = j, so N_j = m - 2j.
    static TriangleDatum hecke(int m, int j) { return TriangleDatum(2, m, j, 1, j); }
};

/// Moments of Phi_j(t) = t * 2F1(a+1,b;1;t) / 2F1(a,b;1;t): g_n is the
/// coefficient of t^{n+1}, computed by exact series division; g_0 = 1.
inline MomentStream<Rational> triangle_moments(const TriangleDatum& d) {
    HGParams lo{d.a, d.b, Rational(1)};
    HGParams hi{d.a + Rational(1), d.b, Rational(1)};
    return MomentStream<Rational>(
        Rational(1),
        [lo, hi](std::size_t count) {
            std::size_t ord = count + 1;
            Series<Rational> q = f21_series(hi, ord) / f21_series(lo, ord);
            return std::vector<Rational>(q.coeffs().begin(), q.coeffs().begin() + count);
        },
        "hypergeometric");
}

/// The y_j(t) solution itself, 2F1(a, b; 1; t).
inline Series<Rational> triangle_solution(const TriangleDatum& d, std::size_t order) {
    return f21_series({d.a, d.b, Rational(1)}, order);
}

/// Closed-form three-term recursion in the Hecke case n=2 (N_j = m-2j):
/// a_k = (m^2(16k^2-1) - 8jm + 4j^2) / (8m^2(4k^2-1)) for k >= 1,
/// b_k = (4mk-3m+2j)(4mk-5m+2j)((4mk-2j)^2-m^2) / (4^5 m^4 k(k-1)(2k-1)^2)
/// for k >= 2; the seed is a0 = b = (m+2j)/(4m). These must agree with the
/// continued-fraction route wherever both are defined.
inline ThreeTerm<Rational> triangle_recurrence_closed_form(const TriangleDatum& d, std::size_t count) {
    if (d.n != 2 || d.kj != 1 || d.rj != d.j)
        throw math_error("closed-form recursion implemented for the Hecke case n=2 only");
    long long m = d.m, j = d.j;
    ThreeTerm<Rational> r{d.b, {}, {}};
    for (std::size_t kk = 1; kk <= count; ++kk) {
        long long k = (long long)kk;
        r.a.push_back(Rational(m * m * (16 * k * k - 1) - 8 * j * m + 4 * j * j,
                               8 * m * m * (4 * k * k - 1)));
        if (k >= 2) {
            Integer num = Integer(4 * m * k - 3 * m + 2 * j) * Integer(4 * m * k - 5 * m + 2 * j) *
                          (Integer(4 * m * k - 2 * j) * Integer(4 * m * k - 2 * j) - Integer(m * m));
            Integer den = Integer(1024) * Integer(m) * Integer(m) * Integer(m) * Integer(m) *
                          Integer(k) * Integer(k - 1) * Integer(2 * k - 1) * Integer(2 * k - 1);
            r.b.push_back(Rational(num, den));
        } else {
            // the closed form has k(k-1) in the denominator; b_1 comes from
            // the continued fraction, b_1 = l_1 l_2
            CFCoeffs<Rational> cf = gauss_cf({d.a, d.b, Rational(1)}, 2);
            r.b.push_back(cf.at(1) * cf.at(2));
        }
    }
    return r;
}

/// The general displayed recursion for arbitrary (n, m). Known to contradict
/// both the Hecke specialization and the continued-fraction route; kept only
/// for documenting the discrepancy and gated accordingly.
inline Rational triangle_recurrence_general_display_a(const TriangleDatum& d, long long k,
                                                      bool accept_suspect) {
    if (!accept_suspect)
        throw math_error("the general (n,m) recursion display is flagged as suspect; "
                         "pass the suspect flag to evaluate it");
    Rational N((long long)d.Nj);
    Rational rm(d.rj, d.m);
    Rational num = Rational(2 * k * k) - (Rational(2) * N * N - Rational(2) * N * rm - rm);
    return num / Rational(4 * k * k - 1);
}

/// Phi-normalization constant: lambda_j = -2a/(chi * N) with
/// chi = -(1 - 1/n - 1/m) and N = lcm(n, m). Only ratios of these enter the
/// weighted-combination pipeline.
inline Rational triangle_lyapunov(const TriangleDatum& d) {
    Rational chi = -(Rational(1) - Rational(1, d.n) - Rational(1, d.m));
    long long N = std::lcm((long long)d.n, (long long)d.m);
    Rational lam = -(Rational(2) * d.a) / (chi * Rational(N));
    if (!(lam > Rational(0)) || lam > Rational(1))
        throw math_error("lambda_j = " + lam.str() + " outside (0,1]");
    return lam;
}

} // namespace atkin
