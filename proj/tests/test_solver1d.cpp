#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "geodom/solver1d.hpp"

#include <random>

using namespace geodom;
using namespace geodom::solver1d;
using pattern1d::Interval;

namespace {

QuadNum qn(const char* lit) { return exactnum::parse_quad(lit); }
QuadNum r(long a, long b = 1) { return QuadNum(exactnum::make_rational(a, b)); }

int oracle(const Pattern1D& q, const std::vector<QuadNum>& xs) {
    return graphcore::brute_force_min_dominating(translate_graph(q, xs)).size;
}

void check_solution(const Pattern1D& q, const std::vector<QuadNum>& xs, const Solution& s) {
    CHECK(s.size == static_cast<int>(s.witness.size()));
    CHECK(graphcore::is_dominating(translate_graph(q, xs), s.witness));
    CHECK(s.size == oracle(q, xs));
}

}  // namespace

TEST_CASE("interval pattern examples") {
    Pattern1D unit({}, {Interval{r(0), r(1)}});
    std::vector<QuadNum> p5{0, 1, 2, 3, 4};
    CHECK(solve_interval_pattern(unit, p5).size == 2);
    check_solution(unit, p5, solve_interval_pattern(unit, p5));
    CHECK(solve_interval_pattern(unit, {r(0)}).size == 1);
    Pattern1D two({r(0)}, {Interval{r(1), r(2)}});
    std::vector<QuadNum> xs{r(0), r(1, 2), r(1), r(3, 2), r(4)};
    check_solution(two, xs, solve_interval_pattern(two, xs));
    CHECK(solve_interval_pattern(unit, {}).size == 0);
    CHECK_THROWS(solve_interval_pattern(Pattern1D({r(0)}), {r(0)}));
}

TEST_CASE("duplicates and unbounded") {
    Pattern1D unit({}, {Interval{r(0), r(1)}});
    std::vector<QuadNum> xs{r(0), r(0), r(5), r(5), r(5)};
    Solution s = solve_interval_pattern(unit, xs);
    CHECK(s.size == 2);
    CHECK(s.witness == std::vector<int>{0, 2});
    CHECK(solve_unbounded({r(1), r(7)}).size == 1);
}

TEST_CASE("rational points") {
    Pattern1D a({r(0), r(2), r(3)});
    CHECK(solve_rational_points(a, {r(0), r(1)}).size == 1);
    Pattern1D b({r(0), r(1)});
    CHECK(solve_rational_points(b, {r(0), r(1), r(2)}).size == 1);
    Pattern1D c({r(0)});
    CHECK(solve_rational_points(c, {r(0), r(0), r(7)}).size == 2);
    CHECK_THROWS(solve_rational_points(Pattern1D({r(0), r(1), qn("sqrt(2)")}), {r(0)}));
    // non-integer offsets split into residue classes
    std::vector<QuadNum> xs{r(0), r(1, 2), r(1), r(3, 2), r(2)};
    check_solution(b, xs, solve_rational_points(b, xs));
    CHECK(reduction_preserves_graph(b, xs));
    // rational ratios but irrational coordinates
    Pattern1D d({r(0), qn("sqrt(2)"), qn("3*sqrt(2)")});
    std::vector<QuadNum> ys{r(0), qn("sqrt(2)"), qn("2*sqrt(2)"), qn("1/2")};
    check_solution(d, ys, solve_rational_points(d, ys));
    CHECK(reduction_preserves_graph(d, ys));
}

TEST_CASE("fpt branching") {
    Pattern1D irr({r(0), r(1), qn("sqrt(2)")});
    auto w = solve_fpt_branching(irr, {r(0), qn("-1+sqrt(2)")}, 1);
    REQUIRE(w);
    CHECK(w->size() == 1);
    CHECK_FALSE(solve_fpt_branching(irr, {r(0)}, 0));
    Pattern1D b({r(0), r(1)});
    auto w2 = solve_fpt_branching(b, {r(0), r(1), r(2)}, 1);
    REQUIRE(w2);
    CHECK(*w2 == std::vector<int>{1});
    CHECK_THROWS_AS(solve_fpt_branching(b, {r(0)}, -1), std::invalid_argument);
}

TEST_CASE("dispatcher picks each branch") {
    CHECK(solve(Pattern1D({}, {Interval{r(0), r(1)}}), {0, 1, 2, 3, 4}).size == 2);
    CHECK(solve(Pattern1D({r(0), r(2), r(3)}), {r(0), r(1)}).size == 1);
    CHECK(solve(Pattern1D({r(0), r(1), qn("sqrt(2)")}), {r(0), qn("-1+sqrt(2)")}).size == 1);
}

TEST_CASE("randomized oracle equivalence") {
    std::mt19937_64 rng(9);
    std::vector<Pattern1D> interval_patterns{
        Pattern1D({}, {Interval{r(0), r(1)}}),
        Pattern1D({r(0)}, {Interval{r(1), r(2)}}),
        Pattern1D({r(3)}, {Interval{r(0), r(1)}}),
        Pattern1D({r(0), r(5, 2)}, {Interval{r(1), r(3, 2)}}),
    };
    for (const auto& q : interval_patterns) {
        QuadNum window = QuadNum(3) * pattern1d::span(q);
        int cap = window_cap(q);
        for (int iter = 0; iter < 60; ++iter) {
            int n = 1 + iter % 12;
            std::vector<QuadNum> xs;
            std::uniform_int_distribution<int> pos(0, 24);
            for (int i = 0; i < n; ++i) xs.push_back(window * QuadNum(exactnum::make_rational(pos(rng), 24)));
            Solution s = solve_interval_pattern(q, xs);
            check_solution(q, xs, s);
            CHECK(max_window_load(q, xs, s.witness) <= cap);
        }
    }
    std::vector<Pattern1D> rational{Pattern1D({r(0), r(2), r(3)}), Pattern1D({r(0), r(1)}),
                                    Pattern1D({r(0), r(3), r(7)})};
    for (const auto& q : rational) {
        for (int iter = 0; iter < 60; ++iter) {
            int n = 1 + iter % 12;
            std::vector<QuadNum> xs;
            std::uniform_int_distribution<int> pos(0, 14);
            for (int i = 0; i < n; ++i) xs.push_back(r(pos(rng)));
            check_solution(q, xs, solve_rational_points(q, xs));
            CHECK(reduction_preserves_graph(q, xs));
        }
    }
    std::vector<Pattern1D> irrational{Pattern1D({r(0), r(1), qn("sqrt(2)")}),
                                      Pattern1D({r(0), qn("sqrt(2)"), r(2)})};
    for (const auto& q : irrational) {
        for (int iter = 0; iter < 60; ++iter) {
            int n = 1 + iter % 12;
            std::vector<QuadNum> xs;
            std::uniform_int_distribution<int> co(-2, 2);
            for (int i = 0; i < n; ++i) xs.push_back(QuadNum(co(rng), co(rng), 2));
            check_solution(q, xs, solve(q, xs));
            auto st = dedup_stats(q, xs);
            CHECK(st.max_degree <= st.degree_bound);
        }
    }
}
