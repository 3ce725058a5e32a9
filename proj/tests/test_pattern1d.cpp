#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "geodom/pattern1d.hpp"

#include <random>
#include <sstream>

using namespace geodom;
using namespace geodom::pattern1d;

namespace {

QuadNum qn(const char* lit) { return exactnum::parse_quad(lit); }
QuadNum r(long a, long b = 1) { return QuadNum(exactnum::make_rational(a, b)); }
Interval iv(QuadNum a, QuadNum b) { return {std::move(a), std::move(b)}; }

// Independent membership-based oracle: does some coordinate of x + Q lie in y + Q?
// Checks all candidate meeting points (shifted points and interval ends).
bool oracle_intersect(const Pattern1D& q, const QuadNum& x, const QuadNum& y) {
    std::vector<QuadNum> cand;
    for (const auto& p : q.points()) {
        cand.push_back(x + p);
        cand.push_back(y + p);
    }
    for (const auto& i : q.intervals()) {
        cand.push_back(x + i.lo);
        cand.push_back(x + i.hi);
        cand.push_back(y + i.lo);
        cand.push_back(y + i.hi);
    }
    for (const auto& c : cand)
        if (q.contains(c - x) && q.contains(c - y)) return true;
    return false;
}

}  // namespace

TEST_CASE("construction merges and validates") {
    Pattern1D q({r(5), r(3), r(3)}, {iv(r(10), r(12)), iv(r(11), r(14)), iv(r(20), r(21))});
    CHECK(q.points() == std::vector<QuadNum>{r(3), r(5)});
    REQUIRE(q.intervals().size() == 2);
    CHECK(q.intervals()[0] == iv(r(10), r(14)));
    Pattern1D touching({}, {iv(r(0), r(1)), iv(r(1), r(2))});
    CHECK(touching.intervals().size() == 1);
    CHECK_THROWS(Pattern1D({}, {}));
    CHECK_THROWS(Pattern1D({qn("sqrt(2)"), qn("sqrt(3)")}));
}

TEST_CASE("normalize") {
    CHECK(normalize(Pattern1D({r(3), r(5)})) == Pattern1D({r(0), r(2)}));
    CHECK(normalize(Pattern1D({}, {iv(r(2), r(6))}), true) == Pattern1D({}, {iv(r(0), r(1))}));
    // 1 + sqrt(2) lies inside [2, 4], so it is absorbed by the interval.
    Pattern1D absorbed({qn("1+sqrt(2)")}, {iv(r(2), r(4))});
    CHECK(absorbed.points().empty());
    CHECK(normalize(absorbed) == Pattern1D({}, {iv(r(0), r(2))}));
    CHECK(normalize(absorbed, true) == Pattern1D({}, {iv(r(0), r(1))}));
    // A point left of the interval: shift by -(1 + sqrt 2), then halve.
    Pattern1D q({qn("1+sqrt(2)")}, {iv(r(3), r(5))});
    Pattern1D n = normalize(q);
    CHECK(n.points() == std::vector<QuadNum>{r(0)});
    CHECK(n.intervals()[0] == iv(qn("2-sqrt(2)"), qn("4-sqrt(2)")));
    Pattern1D s = normalize(q, true);
    CHECK(s.intervals()[0] == iv(qn("1-1/2*sqrt(2)"), qn("2-1/2*sqrt(2)")));
    // independent evaluation in doubles
    CHECK(s.intervals()[0].lo.to_double() == doctest::Approx((3 - (1 + std::sqrt(2.0))) / 2));
}

TEST_CASE("span and w") {
    Pattern1D unit({}, {iv(r(0), r(1))});
    CHECK(span(unit) == r(1));
    CHECK(w_ratio(unit) == r(1));
    Pattern1D a({r(0)}, {iv(r(1), r(2))});
    CHECK(span(a) == r(2));
    CHECK(w_ratio(a) == r(2));
    Pattern1D b({r(3)}, {iv(r(0), r(1))});
    CHECK(span(b) == r(3));
    CHECK(w_ratio(b) == r(3));
    CHECK_THROWS(w_ratio(Pattern1D({r(0), r(1)})));
}

TEST_CASE("translates_intersect examples") {
    CHECK(translates_intersect(Pattern1D({r(0), r(1)}), r(0), r(1)));
    CHECK(translates_intersect(Pattern1D({}, {iv(r(0), r(1))}), r(0), r(1)));
    Pattern1D irr({r(0), r(1), qn("sqrt(2)")});
    CHECK(translates_intersect(irr, r(0), qn("-1+sqrt(2)")));
    CHECK(oracle_intersect(irr, r(0), qn("-1+sqrt(2)")));
    CHECK_FALSE(translates_intersect(Pattern1D({}, {iv(r(0), r(1))}), r(0), r(5, 4)));
}

TEST_CASE("classify") {
    CHECK(classify(Pattern1D({}, {iv(r(0), r(1))})) == PatternClass::HasInterval);
    CHECK(classify(Pattern1D({r(0), r(2), r(3)})) == PatternClass::RationalPoints);
    Pattern1D irr({r(0), r(1), qn("sqrt(2)")});
    CHECK(classify(irr) == PatternClass::IrrationalPoints);
    CHECK(exactnum::to_pretty(*irrational_ratio(irr)) == "sqrt(2)");
    CHECK(classify(Pattern1D({qn("sqrt(2)")})) == PatternClass::RationalPoints);
    CHECK(classify(Pattern1D({r(0), qn("sqrt(2)"), qn("2*sqrt(2)")})) == PatternClass::RationalPoints);
}

TEST_CASE("properties: translation invariance, reflexivity, oracle agreement") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> small(-6, 6);
    auto rq = [&]() { return QuadNum(exactnum::make_rational(small(rng), 2), exactnum::make_rational(small(rng) / 3, 2), 2); };
    for (int iter = 0; iter < 300; ++iter) {
        std::vector<QuadNum> pts{rq(), rq(), rq()};
        std::vector<Interval> ivs;
        if (iter % 2) {
            QuadNum a = rq();
            ivs.push_back(iv(a, a + r(1 + iter % 3)));
        }
        Pattern1D q(pts, ivs);
        QuadNum x = rq(), y = rq(), t = rq();
        bool base = translates_intersect(q, x, y);
        CHECK(base == translates_intersect(q, x + t, y + t));
        CHECK(base == translates_intersect(q, y, x));
        CHECK(base == oracle_intersect(q, x, y));
        CHECK(translates_intersect(q, x, x));
        PatternClass c = classify(q);
        CHECK(classify(transform(q, r(3, 2), t)) == c);
    }
}

TEST_CASE("pattern file parsing") {
    std::istringstream in("# sample\npoint 0/1\ninterval 1/1 2/1\ntranslate 1/2+1/1*sqrt(2)\n");
    auto text = parse_pattern(io::read_lines(in), true);
    CHECK(text.pattern() == Pattern1D({r(0)}, {iv(r(1), r(2))}));
    CHECK(text.translates.size() == 1);
    std::istringstream unb("interval 0/1 inf\n");
    auto u = parse_pattern(io::read_lines(unb), false);
    CHECK(u.unbounded);
    CHECK_THROWS_AS(u.pattern(), ParseError);
    std::istringstream bad("point 0/1\npoint 1/x\n");
    try {
        parse_pattern(io::read_lines(bad), false);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() >= 7);
    }
    std::istringstream round(format_pattern(Pattern1D({qn("sqrt(2)")}, {iv(r(3), r(4))})));
    CHECK(parse_pattern(io::read_lines(round), false).pattern() == Pattern1D({qn("sqrt(2)")}, {iv(r(3), r(4))}));
}
