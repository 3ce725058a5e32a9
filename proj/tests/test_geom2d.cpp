#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "geodom/geom2d.hpp"

#include <random>
#include <sstream>

using namespace geodom;
using namespace geodom::geom2d;

namespace {

Polygon square(long x0, long y0, long s = 1) {
    return Polygon({Point2(x0, y0), Point2(x0 + s, y0), Point2(x0 + s, y0 + s), Point2(x0, y0 + s)});
}

Rational q(long a, long b = 1) { return exactnum::make_rational(a, b); }

// Minimum squared distance between the boundaries (vertex to edge both ways).
Rational boundary_gap(const Polygon& a, const Polygon& b) {
    Rational best = -1;
    auto scan = [&](const Polygon& p, const Polygon& r) {
        for (const auto& v : p.vertices())
            for (std::size_t i = 0; i < r.size(); ++i) {
                Rational d = segment_dist2(v, r[i], r.next(i));
                if (best < 0 || d < best) best = d;
            }
    };
    scan(a, b);
    scan(b, a);
    return best;
}

// Sample-based oracle: a shared point exists among vertices, edge crossings
// found by parametric solve, or contained vertices.
bool oracle_intersect(const Polygon& a, const Polygon& b) {
    for (const auto& v : a.vertices())
        if (point_in_polygon(v, b) != Location::Outside) return true;
    for (const auto& v : b.vertices())
        if (point_in_polygon(v, a) != Location::Outside) return true;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            Vec2 r = a.next(i) - a[i], s = b.next(j) - b[j];
            Rational den = cross(r, s);
            if (den == 0) continue;
            Rational t = cross(b[j] - a[i], s) / den;
            Rational u = cross(b[j] - a[i], r) / den;
            if (t >= 0 && t <= 1 && u >= 0 && u <= 1) return true;
        }
    return false;
}

}  // namespace

TEST_CASE("polygon validation and orientation") {
    Polygon cw({Point2(0, 0), Point2(0, 1), Point2(1, 1), Point2(1, 0)});
    CHECK(cw.area2() == 2);
    CHECK(cw[1] == Point2(1, 1));
    CHECK_THROWS(Polygon({Point2(0, 0), Point2(1, 1), Point2(1, 0), Point2(0, 1)}));  // bow tie
    CHECK_THROWS(Polygon({Point2(0, 0), Point2(1, 0), Point2(2, 0)}));
    CHECK_THROWS(Polygon({Point2(0, 0), Point2(1, 0)}));
    CHECK_THROWS(Polygon({Point2(0, 0), Point2(2, 0), Point2(1, 0), Point2(1, 1)}));
}

TEST_CASE("polygons_intersect examples") {
    Polygon s = square(0, 0);
    CHECK_FALSE(polygons_intersect(s, translate(s, Vec2(2, 0))));
    CHECK(polygons_intersect(s, translate(s, Vec2(1, 0))));
    Polygon tri({Point2(0, 0), Point2(2, 0), Point2(0, 2)});
    CHECK(polygons_intersect(tri, square(1, 1)));
    CHECK(oracle_intersect(tri, square(1, 1)));
    CHECK(polygons_intersect(square(0, 0, 10), square(3, 3)));  // containment
    CHECK(polygons_intersect(s, s));
}

TEST_CASE("diameter") {
    auto d = diameter(square(0, 0));
    CHECK(d == std::pair<std::size_t, std::size_t>{0, 2});
    Polygon tri({Point2(0, 0), Point2(4, 0), Point2(0, 3)});
    auto t = diameter(tri);
    CHECK(tri[t.first] == Point2(4, 0));
    CHECK(tri[t.second] == Point2(0, 3));
    CHECK(dist2(tri[t.first], tri[t.second]) == 25);
    Polygon hex({Point2(2, 0), Point2(1, 2), Point2(-1, 2), Point2(-2, 0), Point2(-1, -2), Point2(1, -2)});
    auto h = diameter(hex);
    Rational best = 0;
    for (std::size_t i = 0; i < hex.size(); ++i)
        for (std::size_t j = 0; j < hex.size(); ++j) best = std::max(best, dist2(hex[i], hex[j]));
    CHECK(dist2(hex[h.first], hex[h.second]) == best);
    CHECK(hex[h.first] == -hex[h.second]);
}

TEST_CASE("point location, hull, translate") {
    Polygon s = square(0, 0);
    CHECK(point_in_polygon(Point2(q(1, 2), q(1, 2)), s) == Location::Inside);
    CHECK(point_in_polygon(Point2(0, 0), s) == Location::Boundary);
    CHECK(point_in_polygon(Point2(q(1, 2), 0), s) == Location::Boundary);
    CHECK(point_in_polygon(Point2(2, q(1, 2)), s) == Location::Outside);
    Polygon h = convex_hull({Point2(0, 0), Point2(1, 0), Point2(1, 1), Point2(0, 1), Point2(q(1, 2), q(1, 2))});
    CHECK(h.vertices() == s.vertices());
    CHECK_THROWS(convex_hull({Point2(0, 0), Point2(1, 1), Point2(2, 2)}));
    CHECK(translate(s, Vec2(3, 4))[2] == Point2(4, 5));
    Polygon notch({Point2(0, 0), Point2(4, 0), Point2(4, 4), Point2(2, 1), Point2(0, 4)});
    CHECK_FALSE(is_convex(notch));
    CHECK(point_in_polygon(Point2(2, 3), notch) == Location::Outside);
    CHECK(point_in_polygon(Point2(2, q(1, 2)), notch) == Location::Inside);
}

TEST_CASE("random pairs: symmetry, translation, gap consistency") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> c(-8, 8);
    auto random_triangle = [&]() {
        while (true) {
            Point2 a(c(rng), c(rng)), b(c(rng), c(rng)), d(c(rng), c(rng));
            if (orient(a, b, d) != 0) return Polygon({a, b, d});
        }
    };
    Polygon notch({Point2(0, 0), Point2(4, 0), Point2(4, 4), Point2(2, 1), Point2(0, 4)});
    for (int i = 0; i < 500; ++i) {
        Polygon a = i % 3 ? random_triangle() : notch;
        Polygon b = random_triangle();
        Vec2 v(exactnum::make_rational(c(rng), 3), exactnum::make_rational(c(rng), 5));
        bool hit = polygons_intersect(a, b);
        CHECK(hit == polygons_intersect(b, a));
        CHECK(hit == polygons_intersect(translate(a, v), translate(b, v)));
        CHECK(hit == polygons_intersect(a, translate(b, v), -v));
        CHECK(hit == oracle_intersect(a, b));
        if (!hit) CHECK(boundary_gap(a, b) > 0);
    }
}

TEST_CASE("polygon file round trip") {
    std::istringstream in(format_polygon(square(0, 0)) + format_polygon(square(2, 2)));
    auto polys = parse_polygons(io::read_lines(in));
    REQUIRE(polys.size() == 2);
    CHECK(polys[1].vertices() == square(2, 2).vertices());
    std::istringstream bad("poly 4\nv 0 0\nv 1 1\nv 1 0\nv 0 1\n");
    CHECK_THROWS_AS(parse_polygons(io::read_lines(bad)), ParseError);
}
