#include <doctest.h>

#include <random>

#include "atkin/hypergeom.hpp"
#include "atkin/poly.hpp"
#include "atkin/series.hpp"

using namespace atkin;

namespace {

Poly<Rational> qpoly(std::vector<long long> cs) {
    std::vector<Rational> v(cs.begin(), cs.end());
    return Poly<Rational>(Rational(1), std::move(v));
}

Poly<FFElem> fpoly(std::uint64_t p, std::vector<std::uint64_t> cs) {
    std::vector<FFElem> v;
    for (auto c : cs) v.emplace_back(p, c);
    return Poly<FFElem>(FFElem(p, 1), std::move(v));
}

} // namespace

TEST_CASE("poly basics") {
    Poly<Rational> z(Rational(1));
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK_THROWS_AS(z.lead(), math_error);
    Poly<Rational> f = qpoly({0, 3, 1}); // J^2 + 3J
    CHECK(f.degree() == 2);
    CHECK(f.str() == "J^2 + 3*J");
    CHECK(f.eval(Rational(2)) == Rational(10));
    CHECK((f * qpoly({1, 1})).str() == "J^3 + 4*J^2 + 3*J");
    CHECK(qpoly({-1, 0, 1}).str() == "J^2 - 1");
    // trailing zeros trimmed
    CHECK(Poly<Rational>(Rational(1), {Rational(1), Rational(0)}).degree() == 0);
}

TEST_CASE("divrem over a field") {
    Poly<Rational> f = qpoly({8, -9, 1}); // J^2 - 9J + 8
    Poly<Rational> g = qpoly({-1, 1});
    auto [q, r] = divrem(f, g);
    CHECK(r.is_zero());
    CHECK(q == qpoly({-8, 1}));
    CHECK_THROWS_AS(divrem(f, Poly<Rational>(Rational(1))), math_error);
    // f = q g + r reconstruction on random data
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long long> u(-9, 9);
    for (int i = 0; i < 100; ++i) {
        std::vector<long long> fc(6), gc(3);
        for (auto& x : fc) x = u(rng);
        for (auto& x : gc) x = u(rng);
        Poly<Rational> F = qpoly(fc), G = qpoly(gc);
        if (G.is_zero()) continue;
        auto [Q, R] = divrem(F, G);
        CHECK(Q * G + R == F);
        CHECK(R.degree() < G.degree());
    }
}

TEST_CASE("poly_gcd examples") {
    // gcd(J^2 - 9J + 8, J - 1) over F_11 -> J - 1
    CHECK(poly_gcd(fpoly(11, {8, 2, 1}), fpoly(11, {10, 1})) == fpoly(11, {10, 1}));
    // gcd(f, 0) = monic f
    Poly<Rational> f = qpoly({2, 4});
    CHECK(poly_gcd(f, Poly<Rational>(Rational(1))) == qpoly({1, 2}) * Rational(1, 2));
    // gcd((J-1)^2 (J-2), (J-1)(J-3)) over Q -> J - 1
    Poly<Rational> a = qpoly({-1, 1}) * qpoly({-1, 1}) * qpoly({-2, 1});
    Poly<Rational> b = qpoly({-1, 1}) * qpoly({-3, 1});
    CHECK(poly_gcd(a, b) == qpoly({-1, 1}));
}

TEST_CASE("squarefree_part examples") {
    Poly<Rational> f = qpoly({-1, 1}) * qpoly({-1, 1}) * qpoly({1, 1});
    CHECK(squarefree_part(f) == qpoly({-1, 1}) * qpoly({1, 1}));
    // J^4 over F_7 -> J
    CHECK(squarefree_part(fpoly(7, {0, 0, 0, 0, 1})) == fpoly(7, {0, 1}));
    // guard: deg >= p in characteristic p
    CHECK_THROWS_WITH_AS(squarefree_part(fpoly(5, {1, 0, 0, 0, 0, 1})),
                         doctest::Contains("guard"), math_error);
}

TEST_CASE("poly_lcm examples") {
    CHECK(poly_lcm<FFElem>({fpoly(7, {0, 1}), fpoly(7, {2, 1})}) == fpoly(7, {0, 2, 1}));
    // lcm(J-1, J(J-1)(J-9)) over F_13 = J(J-1)(J-9)
    Poly<FFElem> big = fpoly(13, {0, 1}) * fpoly(13, {12, 1}) * fpoly(13, {4, 1});
    CHECK(poly_lcm<FFElem>({fpoly(13, {12, 1}), big}) == big.monic());
    CHECK(poly_lcm<Rational>({qpoly({2, 4})}) == qpoly({1, 2}) * Rational(1, 2));
}

TEST_CASE("gcd and lcm properties over F_p, randomized") {
    std::mt19937_64 rng(5);
    for (std::uint64_t p : {5ull, 13ull}) {
        std::uniform_int_distribution<std::uint64_t> u(0, p - 1);
        for (int i = 0; i < 120; ++i) {
            std::vector<std::uint64_t> fc(4), gc(3);
            for (auto& x : fc) x = u(rng);
            for (auto& x : gc) x = u(rng);
            Poly<FFElem> f = fpoly(p, fc), g = fpoly(p, gc);
            if (f.is_zero() || g.is_zero()) continue;
            Poly<FFElem> d = poly_gcd(f, g);
            CHECK(d.degree() <= std::min(f.degree(), g.degree()));
            CHECK(divrem(f, d).second.is_zero());
            CHECK(divrem(g, d).second.is_zero());
            Poly<FFElem> l = poly_lcm<FFElem>({f, g});
            CHECK(l * d == (f * g).monic());
            Poly<FFElem> sf = squarefree_part(f);
            CHECK(divrem(f, sf).second.is_zero());
        }
    }
}

TEST_CASE("squarefree part in characteristic zero has trivial repeated factors") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long long> u(-6, 6);
    for (int i = 0; i < 60; ++i) {
        std::vector<long long> fc(5);
        for (auto& x : fc) x = u(rng);
        Poly<Rational> f = qpoly(fc);
        if (f.degree() < 1) continue;
        Poly<Rational> s = squarefree_part(f);
        CHECK(poly_gcd(s, s.derivative()).is_one());
    }
}

TEST_CASE("reciprocal_poly") {
    // palindrome fixed point
    CHECK(qpoly({1, 3, 1}).reciprocal() == qpoly({1, 3, 1}));
    // raw reversal of [0, 3, 1] is [1, 3]
    CHECK(qpoly({0, 3, 1}).reciprocal() == qpoly({1, 3}));
    CHECK(palindrome_check(qpoly({1, 3, 1})));
    CHECK(!palindrome_check(qpoly({8, -9, 1})));
    // involution on polynomials with nonzero constant term
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long long> u(-9, 9);
    for (int i = 0; i < 80; ++i) {
        std::vector<long long> fc(5);
        for (auto& x : fc) x = u(rng);
        Poly<Rational> f = qpoly(fc);
        if (f.is_zero() || f.coeff(0).is_zero()) continue;
        CHECK(f.reciprocal().reciprocal() == f);
    }
    // reversal with a stated formal degree
    CHECK(qpoly({1, 6}).reciprocal_to_degree(3) == qpoly({0, 0, 6, 1}));
    CHECK_THROWS_AS(qpoly({1, 2, 3}).reciprocal_to_degree(1), math_error);
}

TEST_CASE("series arithmetic respects stated order") {
    Series<Rational> one = Series<Rational>::constant(Rational(1), 4);
    Series<Rational> y(Rational(1), {Rational(1), Rational(1), Rational(0), Rational(0)});
    Series<Rational> q = one / y; // geometric series 1 - t + t^2 - t^3
    CHECK(q.coeff(0) == Rational(1));
    CHECK(q.coeff(1) == Rational(-1));
    CHECK(q.coeff(2) == Rational(1));
    CHECK(q.coeff(3) == Rational(-1));
    CHECK_THROWS_AS(q.coeff(4), math_error);
    CHECK((y * q).coeff(0) == Rational(1));
    CHECK((y * q).coeff(3) == Rational(0));
    CHECK_THROWS_AS(y.truncate(9), math_error);
    CHECK_THROWS_AS(one / Series<Rational>(Rational(1), {Rational(0), Rational(1)}), math_error);
}

TEST_CASE("series_logderiv_ratio") {
    // y = 1 + t: y'/y = 1 - t + t^2 - ...
    Series<Rational> y(Rational(1), {Rational(1), Rational(1), Rational(0), Rational(0), Rational(0)});
    Series<Rational> q = series_logderiv_ratio(y);
    CHECK(q.coeff(0) == Rational(1));
    CHECK(q.coeff(1) == Rational(-1));
    CHECK(q.coeff(2) == Rational(1));
    // y = 1 -> 0
    Series<Rational> c = Series<Rational>::constant(Rational(1), 3);
    Series<Rational> zq = series_logderiv_ratio(c);
    CHECK(zq.coeff(0).is_zero());
    CHECK(zq.coeff(1).is_zero());
    // non-unit constant term
    Series<Rational> bad(Rational(1), {Rational(0), Rational(1), Rational(0)});
    CHECK_THROWS_AS(series_logderiv_ratio(bad), math_error);
}

TEST_CASE("logarithmic derivative of 2F1(1/12, 5/12; 1; t), exact-division oracle") {
    Series<Rational> y = f21_series({Rational(1, 12), Rational(5, 12), Rational(1)}, 6);
    Series<Rational> q = series_logderiv_ratio(y);
    CHECK(q.coeff(0) == Rational(5, 144));
    // independent check: q * y must reproduce y' exactly, term by term
    Series<Rational> back = q * y.truncate(5);
    Series<Rational> yp = y.derivative();
    for (std::size_t i = 0; i < 5; ++i) CHECK(back.coeff(i) == yp.coeff(i));
}

TEST_CASE("series multiplication then division is the identity up to order") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<long long> u(-9, 9), d(1, 9);
    for (int i = 0; i < 60; ++i) {
        std::vector<Rational> fc, gc;
        for (int k = 0; k < 6; ++k) fc.emplace_back(u(rng), d(rng));
        for (int k = 0; k < 6; ++k) gc.emplace_back(u(rng), d(rng));
        gc[0] = Rational(1); // unit
        Series<Rational> f(Rational(1), fc), g(Rational(1), gc);
        CHECK((f * g) / g == f);
    }
}
