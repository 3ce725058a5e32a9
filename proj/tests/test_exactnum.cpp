#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "geodom/exactnum.hpp"
#include "mpfr_oracle.hpp"

#include <random>

using namespace geodom;
using geodom::exactnum::cmp_quadratic;
using geodom::exactnum::parse_quad;
using geodom::exactnum::ratio_is_rational;

namespace {

QuadNum q(long a, long b, long d = 2) { return QuadNum(Rational(a), Rational(b), Integer(d)); }

Rational random_rational(std::mt19937_64& rng, int range = 20, int den = 7) {
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> dd(1, den);
    Rational r(num(rng), dd(rng));
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("conjugate product and basic arithmetic") {
    CHECK(q(1, 1) * q(1, -1) == QuadNum(-1));
    CHECK(q(0, 1) * q(0, 1) == QuadNum(2));
    QuadNum half(Rational(1, 2));
    CHECK(half + QuadNum(Rational(1, 2), 1, 2) == q(1, 1));
    CHECK((q(0, 1) * q(0, 1)).is_rational());
    CHECK((q(0, 1) * q(0, 1)).field() == 1);
}

TEST_CASE("sign without floating point") {
    CHECK(q(1, -1).sign() == -1);
    CHECK(QuadNum().sign() == 0);
    CHECK(q(3, -2).sign() == 1);
    CHECK(q(-3, 2).sign() == -1);
    CHECK(q(0, -5).sign() == -1);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(q(1, 1) / QuadNum(0), ArithmeticError);
    CHECK_THROWS_AS(q(1, 1) + q(1, 1, 3), ArithmeticError);
    CHECK_THROWS_AS(q(1, 1, 4), ArithmeticError);
    CHECK_THROWS_AS(ratio_is_rational(q(1, 1), QuadNum(0)), ArithmeticError);
    CHECK_THROWS_AS(parse_quad("1/0"), ParseError);
    CHECK_THROWS_AS(parse_quad("1/2+"), ParseError);
    CHECK_THROWS_AS(parse_quad("abc"), ParseError);
}

TEST_CASE("cmp_quadratic examples") {
    SqrtExpr r2{0, 1, 1, 2}, r3{0, 1, 1, 3}, r6{0, 1, 1, 6};
    SqrtExpr one_r2{1, 1, 1, 2};
    CHECK(cmp_quadratic(r2, r3) == std::strong_ordering::less);
    CHECK(cmp_quadratic(one_r2, r6) == std::strong_ordering::less);
    CHECK(oracle::compare(one_r2, r6) < 0);
    CHECK(cmp_quadratic(SqrtExpr{3, 0, 1, 2}, SqrtExpr{0, 1, 1, 9}) == std::strong_ordering::equal);
}

TEST_CASE("ratio_is_rational examples") {
    CHECK(ratio_is_rational(q(2, 2), q(1, 1)));
    CHECK_FALSE(ratio_is_rational(q(0, 1), q(1, 0)));
    CHECK_FALSE(ratio_is_rational(q(1, 1), q(1, -1)));
    // numeric cross-check: (1+sqrt2)/(1-sqrt2) = -(3+2 sqrt2) is far from any small-denominator rational
    double v = (1 + std::sqrt(2.0)) / (1 - std::sqrt(2.0));
    CHECK(v == doctest::Approx(-3 - 2 * std::sqrt(2.0)));
}

TEST_CASE("literal round trip") {
    for (const char* lit : {"1/2+3/1*sqrt(2)", "0/1", "-7/3", "5/1-1/2*sqrt(3)", "0/1+1/1*sqrt(2)"}) {
        QuadNum x = parse_quad(lit);
        CHECK(parse_quad(exactnum::to_literal(x)) == x);
    }
    CHECK(exactnum::to_literal(parse_quad("1/2+3*sqrt(2)")) == "1/2+3/1*sqrt(2)");
    CHECK(exactnum::to_literal(parse_quad("3")) == "3/1");
    CHECK(parse_quad("sqrt(8)") == q(0, 2));
    CHECK(parse_quad("1+sqrt(9)") == QuadNum(4));
    CHECK(exactnum::to_pretty(parse_quad("0/1+1/1*sqrt(2)")) == "sqrt(2)");
    CHECK(exactnum::to_pretty(parse_quad("1/2-2/1*sqrt(2)")) == "1/2-2*sqrt(2)");
}

TEST_CASE("floor") {
    CHECK(q(0, 1).floor() == 1);
    CHECK(q(0, -1).floor() == -2);
    CHECK(q(3, -2).floor() == 0);
    CHECK(QuadNum(Rational(-1, 2)).floor() == -1);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        QuadNum x(random_rational(rng, 200), random_rational(rng, 50), 2);
        Integer f = x.floor();
        CHECK(QuadNum(Rational(f)) <= x);
        CHECK(QuadNum(Rational(f + 1)) > x);
    }
}

TEST_CASE("sign agrees with interval approximation") {
    std::mt19937_64 rng(1);
    const long fields[] = {2, 3, 5, 6, 7, 10};
    int decided = 0;
    for (int i = 0; i < 10000; ++i) {
        long d = fields[i % 6];
        QuadNum x(random_rational(rng), random_rational(rng), d);
        int expect = oracle::sign(x, 64);
        if (expect == 2) continue;  // interval straddles zero
        ++decided;
        CHECK(x.sign() == expect);
    }
    CHECK(decided > 9000);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 1000; ++i) {
        QuadNum a(random_rational(rng), random_rational(rng), 3);
        QuadNum b(random_rational(rng), random_rational(rng), 3);
        QuadNum c(random_rational(rng), random_rational(rng), 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        if (a.sign() != 0) CHECK(a * (QuadNum(1) / a) == QuadNum(1));
        CHECK(a - a == QuadNum(0));
    }
}

TEST_CASE("cmp_quadratic is a total order agreeing with high precision") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> rad(1, 30);
    auto random_expr = [&]() {
        SqrtExpr e;
        e.p = random_rational(rng, 10, 3);
        e.q = random_rational(rng, 5, 3);
        e.r = random_rational(rng, 5, 2);
        if (e.r == 0) e.r = 1;
        e.s = exactnum::make_rational(rad(rng), std::uniform_int_distribution<int>(1, 3)(rng));
        e.s.canonicalize();
        return e;
    };
    for (int i = 0; i < 2000; ++i) {
        SqrtExpr a = random_expr(), b = random_expr(), c = random_expr();
        auto ab = cmp_quadratic(a, b);
        auto ba = cmp_quadratic(b, a);
        CHECK((ab < 0) == (ba > 0));
        CHECK((ab == 0) == (ba == 0));
        auto bc = cmp_quadratic(b, c);
        if (ab <= 0 && bc <= 0) CHECK(cmp_quadratic(a, c) <= 0);
        int num = oracle::compare(a, b);
        if (num != 2) CHECK((ab < 0 ? -1 : (ab > 0 ? 1 : 0)) == num);
        // exact agreement with the single-field path when both radicands match
        SqrtExpr a2 = a;
        a2.s = b.s;
        auto exact = a2.to_quad() <=> b.to_quad();
        CHECK((cmp_quadratic(a2, b) < 0) == (exact < 0));
        CHECK((cmp_quadratic(a2, b) == 0) == (exact == 0));
    }
}

TEST_CASE("rational_between lies strictly inside") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 300; ++i) {
        SqrtExpr a{random_rational(rng), random_rational(rng), 1, 2};
        SqrtExpr b{random_rational(rng), random_rational(rng), 1, 5};
        auto c = cmp_quadratic(a, b);
        if (c == 0) continue;
        if (c > 0) std::swap(a, b);
        Rational m = exactnum::rational_between(a, b);
        CHECK(cmp_quadratic(a, SqrtExpr::from_rational(m)) < 0);
        CHECK(cmp_quadratic(SqrtExpr::from_rational(m), b) < 0);
    }
}
