#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "geodom/graphcore.hpp"
#include "geodom/pattern1d.hpp"

#include <random>
#include <sstream>

using namespace geodom;
using namespace geodom::graphcore;

namespace {

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

// 2^n mask enumeration, independent of the combination search.
int mask_oracle(const Graph& g) {
    int best = g.n();
    for (unsigned m = 0; m < (1u << g.n()); ++m) {
        std::vector<int> set;
        for (int v = 0; v < g.n(); ++v)
            if (m >> v & 1) set.push_back(v);
        if (static_cast<int>(set.size()) < best && is_dominating(g, set)) best = static_cast<int>(set.size());
    }
    return best;
}

}  // namespace

TEST_CASE("build from translates") {
    pattern1d::Pattern1D unit({}, {{QuadNum(0), QuadNum(1)}});
    std::vector<QuadNum> xs{0, 1, 2, 3, 4};
    auto pred = [&](const QuadNum& a, const QuadNum& b) { return pattern1d::translates_intersect(unit, a, b); };
    CHECK(adjacency_equals(build(xs, pred), path(5)));
    Graph two = build(std::vector<QuadNum>{0, 5}, pred);
    CHECK(two.edges().empty());
    CHECK(connected_components(two).size() == 2);
    CHECK(connected_components(path(5)).size() == 1);
}

TEST_CASE("is_dominating") {
    Graph p5 = path(5);
    CHECK(is_dominating(p5, {1, 3}));
    CHECK_FALSE(is_dominating(p5, {0}));
    CHECK(is_dominating(p5, {0, 1, 2, 3, 4}));
    CHECK_THROWS_AS(is_dominating(p5, {7}), std::out_of_range);
}

TEST_CASE("brute force examples") {
    auto r = brute_force_min_dominating(path(5));
    CHECK(r.size == 2);
    CHECK(r.witness == std::vector<int>{0, 3});
    Graph k4(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
    CHECK(brute_force_min_dominating(k4).size == 1);
    CHECK(brute_force_min_dominating(Graph(3)).size == 3);
    CHECK_THROWS_AS(brute_force_min_dominating(Graph(50)), SizeLimitError);
    CHECK_THROWS_AS(brute_force_min_dominating(Graph(10), 5), SizeLimitError);
}

TEST_CASE("brute force matches mask oracle and is minimal") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 1 + iter % 11;
        Graph g = random_graph(rng, n, 0.1 + 0.05 * (iter % 7));
        auto r = brute_force_min_dominating(g);
        CHECK(r.size == mask_oracle(g));
        CHECK(is_dominating(g, r.witness));
        CHECK(dominating_sets_of_size(g, r.size - 1).empty());
        auto all = dominating_sets_of_size(g, r.size);
        REQUIRE(!all.empty());
        CHECK(all.front() == r.witness);
    }
}

TEST_CASE("unit interval graphs have a non-overlapping minimum dominating set") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> pos(0, 24);
    pattern1d::Pattern1D unit({}, {{QuadNum(0), QuadNum(1)}});
    for (int iter = 0; iter < 100; ++iter) {
        int n = 2 + iter % 9;
        std::vector<QuadNum> xs;
        for (int i = 0; i < n; ++i) xs.push_back(QuadNum(exactnum::make_rational(pos(rng), 4)));
        Graph g = build(xs, [&](const QuadNum& a, const QuadNum& b) {
            return pattern1d::translates_intersect(unit, a, b);
        });
        auto r = brute_force_min_dominating(g);
        bool found = false;
        for (const auto& set : dominating_sets_of_size(g, r.size)) {
            bool disjoint = true;
            for (std::size_t a = 0; a < set.size(); ++a)
                for (std::size_t b = a + 1; b < set.size(); ++b)
                    if (g.adjacent(set[a], set[b])) disjoint = false;
            found = found || disjoint;
        }
        CHECK(found);
    }
}

TEST_CASE("dump and parse") {
    Graph g = path(4);
    CHECK(dump(g) == "n 4\ne 0 1\ne 1 2\ne 2 3\n");
    std::istringstream in(dump(g));
    CHECK(adjacency_equals(parse_graph(io::read_lines(in)), g));
    std::istringstream bad("n 3\ne 0 5\n");
    CHECK_THROWS_AS(parse_graph(io::read_lines(bad)), ParseError);
}
