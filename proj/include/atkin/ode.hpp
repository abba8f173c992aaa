#pragma once

#include <cstdint>
#include <vector>

#include "atkin/poly.hpp"
#include "atkin/series.hpp"

namespace atkin {

/// Second-order operator L = p2 d^2/dt^2 + p1 d/dt + p0 over Q(sqrt(D)),
/// with declared bad-prime set S. t=0 must be a regular singular point of
/// maximal unipotent monodromy: t | p2, p2'(0) != 0 and the indicial
/// polynomial s(s-1) p2'(0) + s p1(0) has a double root at 0, i.e.
/// p1(0) = p2'(0). Checked at construction; transcription errors fail loudly.
struct ODESpec {
    Poly<QuadElem> p2, p1, p0;
    unsigned D = 0;
    std::vector<std::uint64_t> S;

    ODESpec(Poly<QuadElem> p2_, Poly<QuadElem> p1_, Poly<QuadElem> p0_, unsigned D_,
            std::vector<std::uint64_t> S_)
        : p2(std::move(p2_)), p1(std::move(p1_)), p0(std::move(p0_)), D(D_), S(std::move(S_)) {
        if (p2.is_zero()) throw math_error("malformed operator: p2 = 0");
        if (!p2.coeff(0).is_zero())
            throw math_error("malformed operator: t = 0 is not a singular point (p2(0) != 0)");
        if (p2.coeff(1).is_zero())
            throw math_error("malformed operator: t = 0 is not regular singular (t^2 | p2)");
        if (!(p1.coeff(0) == p2.coeff(1)))
            throw math_error("malformed operator: indicial polynomial lacks a double root at 0 "
                             "(p1(0) != p2'(0))");
    }
};

/// Normalized solution y = 1 + O(t) of L y = 0 as an exact series. Under the
/// MUM condition the recursion coefficient (N+1)^2 p2'(0) never vanishes.
inline Series<QuadElem> solve_series(const ODESpec& ode, std::size_t order) {
    if (order < 1) throw math_error("series order must be >= 1");
    QuadElem proto = ode.p2.coeff(1).one();
    std::vector<QuadElem> c;
    c.reserve(order);
    c.push_back(proto.one());
    // coefficient of t^N in L y:
    //   sum_i p2_i (N+2-i)(N+1-i) c_{N+2-i} + sum_i p1_i (N+1-i) c_{N+1-i}
    //   + sum_i p0_i c_{N-i} = 0, solved for c_{N+1}.
    for (std::size_t N = 0; N + 1 < order; ++N) {
        QuadElem acc = proto.zero();
        auto q = [&](std::size_t idx) { return idx < c.size() ? c[idx] : proto.zero(); };
        for (long i = 0; i <= ode.p2.degree(); ++i) {
            long k = (long)N + 2 - i;
            if (k < 1 || (std::size_t)k >= c.size() + 2) continue;
            if ((std::size_t)k == N + 1) continue; // unknown, handled below
            if ((std::size_t)k > N + 1) continue;
            acc += ode.p2.coeff(i) * QuadElem(Rational((long long)k * (k - 1))) * q(k);
        }
        for (long i = 0; i <= ode.p1.degree(); ++i) {
            long k = (long)N + 1 - i;
            if (k < 1) continue;
            if ((std::size_t)k == N + 1) continue;
            acc += ode.p1.coeff(i) * QuadElem(Rational((long long)k)) * q(k);
        }
        for (long i = 0; i <= ode.p0.degree(); ++i) {
            long k = (long)N - i;
            if (k < 0) continue;
            acc += ode.p0.coeff(i) * q(k);
        }
        // unknown c_{N+1} multiplied by (N+1) N p2_1 + (N+1) p1_0 = (N+1)^2 p2_1
        QuadElem lead = QuadElem(Rational((long long)(N + 1) * (long long)(N + 1))) * ode.p2.coeff(1);
        if (lead.is_zero()) throw math_error("malformed operator: indicial obstruction at t^" +
                                             std::to_string(N));
        c.push_back(-(acc / lead));
    }
    return Series<QuadElem>(proto, std::move(c));
}

/// Residual L y to the provable order, for verification: applying L to a
/// series of order n yields trustworthy coefficients of t^0..t^{n-2}.
inline std::vector<QuadElem> ode_residual(const ODESpec& ode, const Series<QuadElem>& y) {
    QuadElem proto = y.proto();
    std::size_t n = y.order();
    if (n < 2) throw math_error("residual needs order >= 2");
    auto apply = [&](const Poly<QuadElem>& p, const std::vector<QuadElem>& v) {
        std::vector<QuadElem> out(n, proto.zero());
        for (long i = 0; i <= p.degree(); ++i) {
            if (p.coeff(i).is_zero()) continue;
            for (std::size_t k = 0; k + i < n && k < v.size(); ++k)
                out[k + i] += p.coeff(i) * v[k];
        }
        return out;
    };
    std::vector<QuadElem> y0 = y.coeffs();
    std::vector<QuadElem> y1, y2;
    for (std::size_t k = 1; k < n; ++k) y1.push_back(y0[k] * QuadElem(Rational((long long)k)));
    for (std::size_t k = 2; k < n; ++k)
        y2.push_back(y0[k] * QuadElem(Rational((long long)k * (long long)(k - 1))));
    std::vector<QuadElem> r2 = apply(ode.p2, y2), r1 = apply(ode.p1, y1), r0 = apply(ode.p0, y0);
    std::vector<QuadElem> res(n - 1, proto.zero());
    for (std::size_t k = 0; k + 1 < n; ++k) res[k] = r2[k] + r1[k] + r0[k];
    return res;
}

/// The hypergeometric operator t(1-t) y'' + (c - (a+b+1) t) y' - ab y as an
/// ODESpec over plain Q.
inline ODESpec hypergeometric_ode(const Rational& a, const Rational& b, const Rational& c,
                                  std::vector<std::uint64_t> S) {
    QuadElem one{Rational(1)};
    Poly<QuadElem> p2(one, {QuadElem(Rational(0)), QuadElem(Rational(1)), QuadElem(Rational(-1))});
    Poly<QuadElem> p1(one, {QuadElem(c), QuadElem(-(a + b + Rational(1)))});
    Poly<QuadElem> p0(one, {QuadElem(-(a * b))});
    return ODESpec(std::move(p2), std::move(p1), std::move(p0), 0, std::move(S));
}

} // namespace atkin
