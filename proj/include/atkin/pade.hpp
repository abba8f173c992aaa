#pragma once

#include <vector>

#include "atkin/moments.hpp"
#include "atkin/poly.hpp"

namespace atkin {

namespace detail {

/// Fraction-free (Bareiss) elimination with row pivoting on the augmented
/// system, then back substitution. Returns false when the matrix is singular.
template <class K>
bool bareiss_solve(std::vector<std::vector<K>>& m, std::vector<K>& x, const K& proto) {
    const std::size_t n = m.size();
    K prev = proto.one();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return false;
        if (piv != k) std::swap(m[piv], m[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            m[i][k] = proto.zero();
        }
        prev = m[k][k];
    }
    x.assign(n, proto.zero());
    for (std::size_t i = n; i-- > 0;) {
        K acc = m[i][n];
        for (std::size_t j = i + 1; j < n; ++j) acc = acc - m[i][j] * x[j];
        x[i] = acc / m[i][i];
    }
    return true;
}

} // namespace detail

/// Monic denominator T_m of the [m-1,m]-Pade approximant of
/// Phi(x) = sum g_n x^{-n-1}: solves sum_{k<m} beta_k g_{n+k} = -g_{n+m}
/// for n = 0..m-1 on the Hankel matrix (g_{i+j}). m=0 returns 1.
template <class K>
Poly<K> pade_denominator(const MomentStream<K>& g, std::size_t m) {
    K proto = g.proto();
    if (m == 0) return Poly<K>::one(proto);
    std::vector<K> mom = g.prefix(2 * m);
    std::vector<std::vector<K>> mat(m, std::vector<K>(m + 1, proto.zero()));
    for (std::size_t n = 0; n < m; ++n) {
        for (std::size_t k = 0; k < m; ++k) mat[n][k] = mom[n + k];
        mat[n][m] = -mom[n + m];
    }
    std::vector<K> beta;
    if (!detail::bareiss_solve(mat, beta, proto))
        throw math_error("Pade approximant does not exist at order " + std::to_string(m) +
                         " (singular Hankel system)");
    beta.push_back(proto.one());
    return Poly<K>(proto, std::move(beta));
}

/// Cross-check backend: extended Euclid on (x^{2m}, sum g_n x^{2m-1-n}).
/// The first remainder of degree < m has cofactor equal to T_m up to scale.
template <class K>
Poly<K> pade_denominator_euclid(const MomentStream<K>& g, std::size_t m) {
    K proto = g.proto();
    if (m == 0) return Poly<K>::one(proto);
    std::vector<K> mom = g.prefix(2 * m);
    Poly<K> r0 = Poly<K>::monomial(proto, 2 * m, proto.one());
    std::vector<K> mc(2 * m, proto.zero());
    for (std::size_t n = 0; n < 2 * m; ++n) mc[2 * m - 1 - n] = mom[n];
    Poly<K> r1(proto, std::move(mc));
    Poly<K> v0(proto), v1 = Poly<K>::one(proto);
    while (!r1.is_zero() && r1.degree() >= (long)m) {
        auto [q, r] = divrem(r0, r1);
        Poly<K> v = v0 - q * v1;
        r0 = r1; r1 = r;
        v0 = v1; v1 = v;
    }
    if (r1.is_zero() || v1.degree() != (long)m)
        throw math_error("Pade approximant does not exist at order " + std::to_string(m) +
                         " (Euclidean backend)");
    return v1.monic();
}

/// Numerator S_m with S_m/T_m - Phi = O(x^{-2m-1}): the polynomial part of
/// T_m(x) * Phi(x), i.e. S_d = sum_{i>d} T_i g_{i-1-d}.
template <class K>
Poly<K> pade_numerator(const MomentStream<K>& g, const Poly<K>& T) {
    K proto = g.proto();
    long m = T.degree();
    if (m <= 0) return Poly<K>(proto);
    std::vector<K> mom = g.prefix(m);
    std::vector<K> s(m, proto.zero());
    for (long d = 0; d < m; ++d)
        for (long i = d + 1; i <= m; ++i) s[d] = s[d] + T.coeff(i) * mom[i - 1 - d];
    return Poly<K>(proto, std::move(s));
}

} // namespace atkin
