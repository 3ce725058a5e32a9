#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "geodom/diskdom.hpp"

using namespace geodom;
using namespace geodom::diskdom;

namespace {

Point2 pt(long x, long y) { return Point2(x, y); }

DiskInstance random_instance(std::mt19937& rng, int n, int side, int den) {
    std::uniform_int_distribution<int> coord(0, side * den);
    std::set<Point2> seen;
    DiskInstance inst;
    while (static_cast<int>(inst.centers.size()) < n) {
        Point2 p(exactnum::make_rational(coord(rng), den), exactnum::make_rational(coord(rng), den));
        if (seen.insert(p).second) inst.centers.push_back(p);
    }
    return inst;
}

std::vector<int> random_subset(std::mt19937& rng, int n, int k) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(k);
    std::sort(all.begin(), all.end());
    return all;
}

int faces_containing(const Decomposition& dec, const Point2& p) {
    int hits = 0;
    for (const Face& f : dec.faces())
        if (dec.contains(f, p)) ++hits;
    return hits;
}

}  // namespace

TEST_CASE("pairwise domination uses the closed radius") {
    CHECK(dominates_pair(pt(0, 0), pt(2, 0)));
    CHECK_FALSE(dominates_pair(pt(0, 0), pt(3, 0)));
    CHECK(dominates_pair(pt(0, 0), Point2(Rational(6, 5), Rational(8, 5))));
}

TEST_CASE("single circle") {
    std::vector<Point2> c{pt(0, 0)};
    Decomposition dec(c, {0});
    bool found = false;
    for (const Face& f : dec.faces()) {
        if (f.kind != FaceKind::Cell || f.lower != arc_id(0, false) || f.upper != arc_id(0, true)) continue;
        found = true;
        CHECK(*f.left == QuadNum(-2));
        CHECK(*f.right == QuadNum(2));
        CHECK(dec.inside_union(f));
    }
    CHECK(found);
    CHECK(dec.event_lines() == 2);
}

TEST_CASE("two overlapping circles put walls at -2, 0, 1, 2, 4") {
    std::vector<Point2> c{pt(0, 0), pt(2, 0)};
    Decomposition dec(c, {0, 1});
    std::set<Rational> wall_x;
    for (const Face& f : dec.faces())
        if (f.kind == FaceKind::Wall) {
            REQUIRE(f.left->is_rational());
            wall_x.insert(f.left->rat());
        }
    CHECK(wall_x == std::set<Rational>{-2, 0, 1, 2, 4});
    // the intersection points (1, +-sqrt 3) are vertices
    int crossings = 0;
    for (const Face& f : dec.faces())
        if (f.kind == FaceKind::EventVertex && f.vx == QuadNum(1)) {
            ++crossings;
            CHECK(f.vy * f.vy == QuadNum(3));
        }
    CHECK(crossings == 2);
}

TEST_CASE("disjoint circles decompose independently") {
    std::vector<Point2> c{pt(0, 0), pt(5, 0)};
    Decomposition both(c, {0, 1});
    Decomposition a(c, {0}), b(c, {1});
    auto interiors = [](const Decomposition& d) {
        int n = 0;
        for (const Face& f : d.faces())
            if (f.kind == FaceKind::Cell && d.inside_union(f)) ++n;
        return n;
    };
    CHECK(interiors(both) == interiors(a) + interiors(b));
    CHECK(both.event_lines() == a.event_lines() + b.event_lines());
}

TEST_CASE("lookup counts for single-circle faces") {
    DiskLookup lk(DiskInstance{{pt(0, 0), pt(1, 1), pt(3, 0)}});
    Decomposition dec(lk.instance().centers, {0});
    for (const Face& f : dec.faces())
        if (f.kind == FaceKind::Cell && dec.inside_union(f)) CHECK(*lk.find(f.key) == 2);

    // a point on the boundary arc lands in the arc face, not the open interior
    DiskInstance rim{{pt(0, 0), Point2(Rational(6, 5), Rational(8, 5))}};
    DiskLookup lk2(rim);
    Decomposition d2(rim.centers, {0});
    for (const Face& f : d2.faces()) {
        if (f.kind == FaceKind::Cell && d2.inside_union(f)) {
            CHECK(*lk2.find(f.key) == 1);  // only the center itself
            CHECK(*lk2.find(credit_key(f.key)) == 1);
        }
        if (f.kind == FaceKind::Arc) CHECK(d2.contains(f, rim.centers[1]) == (f.lower == arc_id(0, true)));
    }
}

TEST_CASE("faces of one circle partition a random point set") {
    std::mt19937 rng(11);
    DiskInstance inst = random_instance(rng, 30, 8, 2);
    for (int id = 0; id < 30; ++id) {
        Decomposition dec(inst.centers, {id});
        long total = 0;
        for (const Face& f : dec.faces())
            for (const auto& p : inst.centers)
                if (dec.contains(f, p)) ++total;
        CHECK(total == 30);
    }
}

TEST_CASE("coverage examples") {
    DiskLookup lk(DiskInstance{{pt(0, 0), pt(2, 0), pt(3, 0)}});
    CHECK(lk.coverage_count({0}) == 2);
    CHECK(lk.coverage_count({0, 1, 2}) == 3);
}

TEST_CASE("coverage count equals the direct count") {
    std::mt19937 rng(5);
    // half-integer grid coordinates produce tangencies, shared event abscissae
    // and rational intersection points
    for (int den : {1, 2, 7}) {
        for (int trial = 0; trial < 2; ++trial) {
            DiskInstance inst = random_instance(rng, 40, 18, den);
            DiskLookup lk(inst);
            for (int rep = 0; rep < 15; ++rep) {
                int k = 1 + static_cast<int>(rng() % 5);
                auto D = random_subset(rng, 40, k);
                CHECK(lk.coverage_count(D) == direct_coverage(inst, D));
            }
            std::vector<int> all(40);
            for (int i = 0; i < 40; ++i) all[i] = i;
            CHECK(lk.coverage_count(all) == 40);
        }
    }
}

TEST_CASE("decomposition faces partition the plane") {
    std::mt19937 rng(17);
    for (int den : {1, 3}) {
        DiskInstance inst = random_instance(rng, 12, 6, den);
        for (int rep = 0; rep < 4; ++rep) {
            int k = 1 + static_cast<int>(rng() % 5);
            auto D = random_subset(rng, 12, k);
            Decomposition dec(inst.centers, D);
            std::vector<Point2> queries;
            std::uniform_int_distribution<int> q(-4 * 8, 10 * 8);
            for (int i = 0; i < 1000; ++i) {
                Point2 p(exactnum::make_rational(q(rng), 8), exactnum::make_rational(q(rng), 8));
                // snap some queries onto circles and walls
                const Point2& c = inst.centers[D[i % D.size()]];
                if (i % 5 == 1) p = c + Point2(Rational(6, 5), Rational(-8, 5));
                if (i % 5 == 2) p = Point2(c.x + 2, p.y);
                if (i % 5 == 3) p = c + Point2(0, 2);
                queries.push_back(p);
            }
            for (const auto& p : queries) {
                std::string ds;
                for (int d : D) ds += geom2d::to_string(inst.centers[d]) + "; ";
                INFO(geom2d::to_string(p), " D ", ds);
                CHECK(faces_containing(dec, p) == 1);
            }
        }
    }
}

TEST_CASE("faces are defined by few circles") {
    std::mt19937 rng(23);
    DiskInstance inst = random_instance(rng, 15, 5, 2);
    for (int rep = 0; rep < 10; ++rep) {
        auto D = random_subset(rng, 15, 1 + static_cast<int>(rng() % 5));
        Decomposition dec(inst.centers, D);
        for (const Face& f : dec.faces()) {
            if (f.kind == FaceKind::Arc) {
                CHECK(f.defining.size() <= 5);
            } else {
                CHECK(f.defining.size() <= 4);
            }
        }
    }
}

TEST_CASE("xp solver examples") {
    auto w = xp_solve(DiskInstance{{pt(0, 0), pt(2, 0), pt(4, 0)}}, 1);
    REQUIRE(w);
    CHECK(*w == std::vector<int>{1});
    CHECK_FALSE(xp_solve(DiskInstance{{pt(0, 0), pt(5, 0)}}, 1));
}

TEST_CASE("smallest xp solution matches the domination number") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 4 + static_cast<int>(rng() % 7);
        DiskInstance inst = random_instance(rng, n, 7, 2);
        auto best = graphcore::brute_force_min_dominating(disk_graph(inst));
        DiskLookup lk(inst);
        int k = 0;
        while (!xp_solve(lk, k)) ++k;
        CHECK(k == best.size);
    }
}
