#pragma once

#include <vector>

#include "atkin/moments.hpp"
#include "atkin/poly.hpp"

namespace atkin {

/// Continued-fraction coefficients of g_0 + g_1 X + ... =
/// g_0 / (1 - l_1 X / (1 - l_2 X / ...)); all l_n nonzero where defined.
template <class K>
struct CFCoeffs {
    std::vector<K> lambda; // lambda[i] = l_{i+1}
    const K& at(std::size_t n) const { // 1-based
        if (n == 0 || n > lambda.size()) throw math_error("lambda index out of range");
        return lambda[n - 1];
    }
};

/// Three-term recursion data: P_{n+1} = (x - a_n) P_n - b_n P_{n-1} for
/// n >= 1, P_1 = x - a0.
template <class K>
struct ThreeTerm {
    K a0;
    std::vector<K> a; // a[i] = a_{i+1}
    std::vector<K> b; // b[i] = b_{i+1}
};

/// Monic orthogonal polynomials P_0..P_n by Gram-Schmidt on 1, x, x^2, ...
/// under the moment functional; errors name the stage whose norm vanishes.
template <class K>
std::vector<Poly<K>> gram_schmidt(const MomentStream<K>& g, std::size_t n) {
    K proto = g.proto();
    std::vector<Poly<K>> P;
    std::vector<K> norms;
    P.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Poly<K> xk = Poly<K>::monomial(proto, k, proto.one());
        Poly<K> q = xk;
        for (std::size_t m = 0; m < k; ++m) {
            if (norms.size() <= m) {
                K nm = moment_inner(g, P[m], P[m]);
                if (nm.is_zero())
                    throw math_error("Gram-Schmidt: vanishing norm <P_m,P_m> at stage m=" +
                                     std::to_string(m));
                norms.push_back(nm);
            }
            K c = moment_inner(g, xk, P[m]) / norms[m];
            q = q - P[m] * c;
        }
        P.push_back(q);
    }
    return P;
}

/// l_1..l_k by iterated series transformation h -> (1 - g_0/f)/(l X).
template <class K>
CFCoeffs<K> cf_coefficients(const MomentStream<K>& g, std::size_t k) {
    K proto = g.proto();
    std::vector<K> mom = g.prefix(k + 1);
    if (mom[0].is_zero()) throw math_error("continued fraction requires g_0 != 0");
    Series<K> f(proto, std::move(mom));
    CFCoeffs<K> out;
    for (std::size_t i = 1; i <= k; ++i) {
        // u = 1 - f(0)/f  has zero constant term; lambda_i = [X] u
        Series<K> u = Series<K>::constant(f.coeff(0), f.order()) / f;
        K lam = -u.coeff(1);
        if (lam.is_zero())
            throw math_error("continued fraction coefficient lambda_" + std::to_string(i) +
                             " vanishes");
        out.lambda.push_back(lam);
        // next stage: w with u = 1 - lambda X w ... shift and rescale
        std::vector<K> w(f.order() - 1, proto.zero());
        K li = lam.inv();
        for (std::size_t j = 0; j + 1 < f.order(); ++j) w[j] = -u.coeff(j + 1) * li;
        f = Series<K>(proto, std::move(w));
    }
    return out;
}

/// a_n = l_{2n} + l_{2n+1}, b_n = l_{2n-1} l_{2n} for n >= 1; a0 = l_1.
/// Produces as many (a_n, b_n) pairs as the lambda list supports.
template <class K>
ThreeTerm<K> recurrence_from_cf(const CFCoeffs<K>& cf) {
    if (cf.lambda.empty()) throw math_error("empty continued fraction");
    ThreeTerm<K> r{cf.at(1), {}, {}};
    for (std::size_t n = 1; 2 * n + 1 <= cf.lambda.size(); ++n) {
        r.a.push_back(cf.at(2 * n) + cf.at(2 * n + 1));
        r.b.push_back(cf.at(2 * n - 1) * cf.at(2 * n));
    }
    return r;
}

/// Monic P_0..P_n from the three-term recursion.
template <class K>
std::vector<Poly<K>> polys_from_recurrence(const ThreeTerm<K>& r, std::size_t n) {
    K proto = r.a0.one();
    std::vector<Poly<K>> P;
    P.push_back(Poly<K>::one(proto));
    if (n == 0) return P;
    Poly<K> x = Poly<K>::x(proto);
    P.push_back(x - Poly<K>(proto, {r.a0}));
    for (std::size_t k = 1; k < n; ++k) {
        if (k > r.a.size() || k > r.b.size())
            throw math_error("three-term recursion data exhausted at n=" + std::to_string(k));
        Poly<K> next = (x - Poly<K>(proto, {r.a[k - 1]})) * P[k] - P[k - 1] * r.b[k - 1];
        P.push_back(next);
    }
    return P;
}

} // namespace atkin
