#include <doctest.h>

#include <random>

#include "atkin/finite_field.hpp"
#include "atkin/quadratic.hpp"
#include "atkin/rational.hpp"

using namespace atkin;

TEST_CASE("rational normalization and parsing") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, 7).is_zero());
    CHECK(Rational(3, 2).str() == "3/2");
    CHECK(Rational(-5).str() == "-5");
    CHECK(Rational::parse("22/7") == Rational(22, 7));
    CHECK(Rational::parse("-9") == Rational(-9));
    CHECK_THROWS_AS(Rational::parse("x/2"), data_error);
    CHECK_THROWS_AS(Rational::parse(""), data_error);
    CHECK_THROWS_AS(Rational(1, 0), math_error);
    CHECK_THROWS_AS(Rational(1, 2).zero().inv(), math_error);
}

TEST_CASE("rational field laws under random inputs") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long long> num(-50, 50), den(1, 30);
    auto r = [&] { return Rational(num(rng), den(rng)); };
    for (int i = 0; i < 300; ++i) {
        Rational a = r(), b = r(), c = r();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inv() == Rational(1));
        // canonical form is idempotent
        CHECK(Rational(a.numerator(), a.denominator()) == a);
        CHECK(boost::multiprecision::gcd(a.numerator() < 0 ? Integer(-a.numerator()) : a.numerator(),
                                         a.denominator()) == (a.is_zero() ? a.denominator() : 1));
    }
}

TEST_CASE("quadratic field arithmetic") {
    QuadElem x(Rational(27, 8), Rational(-5, 8), 17);
    CHECK(x + x.conj() == QuadElem(Rational(27, 4)));
    CHECK(x * x.conj() == QuadElem(x.norm()));
    CHECK(x * x.inv() == x.one());
    CHECK_THROWS_AS(QuadElem(Rational(1), Rational(1), 17) + QuadElem(Rational(1), Rational(1), 5),
                    math_error);
    // D=0 promotes
    CHECK(QuadElem(Rational(2)) * x == QuadElem(Rational(27, 4), Rational(-5, 4), 17));
    CHECK_THROWS_AS(QuadElem(Rational(1), Rational(1), 0), math_error);
}

TEST_CASE("alpha basis conversion round-trips") {
    // [a,b] = a + b*(1+sqrt(17))/2; [-16,5]/4 = (-27 + 5 sqrt(17))/8
    QuadElem q = QuadElem::from_alpha(Rational(-4), Rational(5, 4), 17);
    CHECK(q == QuadElem(Rational(-27, 8), Rational(5, 8), 17));
    auto [u, v] = q.to_alpha();
    CHECK(u == Rational(-4));
    CHECK(v == Rational(5, 4));
}

TEST_CASE("splitting_type classification") {
    std::uint64_t r = 0;
    CHECK(splitting_type(5, 7) == Splitting::inert);
    CHECK(splitting_type(5, 11, &r) == Splitting::split);
    CHECK(r == 4); // canonical root: 4^2 = 16 = 5 mod 11, and 4 < 7
    CHECK(splitting_type(17, 3) == Splitting::inert);
    CHECK(splitting_type(5, 5) == Splitting::ramified);
    CHECK_THROWS_AS(splitting_type(5, 2), math_error);
    CHECK_THROWS_AS(splitting_type(5, 9), math_error);
    CHECK_THROWS_AS(splitting_type(12, 7), math_error); // 12 not squarefree
}

TEST_CASE("splitting matches exhaustive square search for p < 200") {
    for (std::uint64_t p = 3; p < 200; ++p) {
        if (!is_prime_u64(p)) continue;
        for (unsigned D : {5u, 17u}) {
            bool has_root = false;
            for (std::uint64_t x = 1; x < p; ++x)
                if (mulmod_u64(x, x, p) == D % p) { has_root = true; break; }
            Splitting s = splitting_type(D, p);
            if (p == D)
                CHECK(s == Splitting::ramified);
            else
                CHECK(s == (has_root ? Splitting::split : Splitting::inert));
        }
    }
}

TEST_CASE("reduction examples") {
    // (27 - 5 sqrt(17))/8 mod 5, inert: the sqrt(17) term vanishes? no:
    // b = -5/8 = 0 mod 5, and 27/8 = 2 * 2 = 4
    PrimeContext ctx5(17, 5);
    CHECK(ctx5.splitting() == Splitting::inert);
    FFElem r = ctx5.reduce(QuadElem(Rational(27, 8), Rational(-5, 8), 17));
    CHECK(r.c0() == 4);
    CHECK(r.c1() == 0);
    CHECK(r.str() == "4");

    PrimeContext ctx7(0, 7);
    CHECK(ctx7.reduce(Rational(7, 20)).c0() == 0);
    CHECK(ctx7.reduce(Rational(0)).is_zero());

    CHECK_THROWS_WITH_AS(ctx7.reduce(Rational(1, 7)), doctest::Contains("not p-integral"),
                         math_error);
    CHECK_THROWS_WITH_AS(ctx7.reduce(Rational(3, 14)), doctest::Contains("3/14"), math_error);

    // ramified reduction refused with a dedicated error
    PrimeContext ctx_ram(5, 5);
    CHECK_THROWS_WITH_AS(ctx_ram.reduce(QuadElem(Rational(1), Rational(1), 5)),
                         doctest::Contains("ramified"), math_error);

    // alpha-basis inputs go through 2^{-1} mod p
    PrimeContext ctx3(17, 3);
    FFElem a = ctx3.reduce(QuadElem::from_alpha(Rational(1), Rational(1), 17));
    // 1 + (1 + w)/2 = 1 + 2(1 + w) = 3 + 2w = 2w mod 3
    CHECK(a.c0() == 0);
    CHECK(a.c1() == 2);
}

TEST_CASE("finite field arithmetic examples") {
    // w * w in F_{3^2} with D = 17: 17 = 2 mod 3
    FFElem w(3, 17, 0, 1);
    CHECK((w * w) == FFElem(3, 17, 2, 0));
    // 6^{-1} = 2 in F_11
    CHECK(FFElem(11, 6).inv() == FFElem(11, 2));
    // (1 + 2w)(1 - 2w) = 1 - 4*17 = 1 - 4*2 = -7 = 2 in F_{3^2}
    FFElem x(3, 17, 1, 2), y(3, 17, 1, 1); // 1 - 2w = 1 + w mod 3
    CHECK(x * y == FFElem(3, 17, 2, 0));
    CHECK_THROWS_AS(FFElem(7, 3).zero().inv(), math_error);
    CHECK_THROWS_AS(FFElem(7, 3) + FFElem(11, 3), math_error);
    CHECK(FFElem(5, 17, 2, 3).str() == "2+3*w");
    CHECK(FFElem(5, 17, 0, 1).str() == "w");
}

TEST_CASE("finite field laws under random inputs") {
    std::mt19937_64 rng(7);
    for (std::uint64_t p : {3ull, 11ull, 31ull}) {
        std::uniform_int_distribution<std::uint64_t> u(0, p - 1);
        unsigned D = splitting_type(17, p) == Splitting::inert ? 17 : 2;
        for (int i = 0; i < 200; ++i) {
            FFElem a(p, D, u(rng), u(rng)), b(p, D, u(rng), u(rng)), c(p, D, u(rng), u(rng));
            CHECK(a + b == b + a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK(a * a.inv() == a.one());
        }
    }
}

TEST_CASE("reduction is a ring homomorphism on random p-integral inputs") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> num(-40, 40);
    std::uniform_int_distribution<int> denpick(0, 3);
    const long long dens[] = {1, 2, 4, 8};
    for (std::uint64_t p : {3ull, 7ull, 13ull, 19ull}) {
        PrimeContext ctx(17, p);
        int nb = ctx.branches();
        auto rq = [&] {
            return QuadElem(Rational(num(rng), dens[denpick(rng)]),
                            Rational(num(rng), dens[denpick(rng)]), 17);
        };
        for (int i = 0; i < 100; ++i) {
            QuadElem x = rq(), y = rq();
            for (int br = 0; br < nb; ++br) {
                CHECK(ctx.reduce(x * y, br) == ctx.reduce(x, br) * ctx.reduce(y, br));
                CHECK(ctx.reduce(x + y, br) == ctx.reduce(x, br) + ctx.reduce(y, br));
            }
        }
    }
}

TEST_CASE("split branches are exchanged by the field automorphism") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long long> num(-40, 40);
    for (std::uint64_t p : {13ull, 19ull, 43ull}) { // split in Q(sqrt(17))
        PrimeContext ctx(17, p);
        REQUIRE(ctx.splitting() == Splitting::split);
        REQUIRE(ctx.branches() == 2);
        for (int i = 0; i < 50; ++i) {
            QuadElem x(Rational(num(rng)), Rational(num(rng)), 17);
            CHECK(ctx.reduce(x, 1) == ctx.reduce(x.conj(), 0));
        }
    }
}

TEST_CASE("inert context ignores the branch and maps sqrt(D) to w") {
    PrimeContext ctx(17, 3);
    QuadElem x(Rational(1), Rational(1), 17);
    CHECK(ctx.reduce(x, 0) == ctx.reduce(x, 1));
    CHECK(ctx.reduce(x, 0) == FFElem(3, 17, 1, 1));
}
