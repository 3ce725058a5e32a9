#pragma once

// Exact planar primitives over rational coordinates.

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "geodom/exactnum.hpp"
#include "geodom/io.hpp"

namespace geodom::geom2d {

struct Vec2 {
    Rational x{0};
    Rational y{0};

    Vec2() = default;
    Vec2(Rational a, Rational b) : x(std::move(a)), y(std::move(b)) {}
    Vec2(long a, long b) : x(a), y(b) {}

    Vec2& operator+=(const Vec2& o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    Vec2& operator-=(const Vec2& o) {
        x -= o.x;
        y -= o.y;
        return *this;
    }
    friend Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
    friend Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
    friend Vec2 operator-(const Vec2& a) { return Vec2(-a.x, -a.y); }
    friend Vec2 operator*(const Rational& s, const Vec2& v) { return Vec2(s * v.x, s * v.y); }
    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
    friend std::strong_ordering operator<=>(const Vec2& a, const Vec2& b) {
        if (a.x != b.x) return a.x < b.x ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.y != b.y) return a.y < b.y ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};
using Point2 = Vec2;

Rational cross(const Vec2& a, const Vec2& b);
Rational dot(const Vec2& a, const Vec2& b);
/// Sign of the turn a -> b -> c (+1 counter-clockwise).
int orient(const Point2& a, const Point2& b, const Point2& c);
Rational dist2(const Point2& a, const Point2& b);
/// p lies on the closed segment [a, b].
bool on_segment(const Point2& p, const Point2& a, const Point2& b);
/// Closed segments [a, b] and [c, d] share a point.
bool segments_intersect(const Point2& a, const Point2& b, const Point2& c, const Point2& d);
Rational segment_dist2(const Point2& p, const Point2& a, const Point2& b);

struct Box {
    Point2 lo, hi;
    bool overlaps(const Box& o) const {
        return lo.x <= o.hi.x && o.lo.x <= hi.x && lo.y <= o.hi.y && o.lo.y <= hi.y;
    }
};

/// Simple polygon with counter-clockwise vertices. The constructor validates
/// simplicity and reverses clockwise input.
class Polygon {
public:
    explicit Polygon(std::vector<Point2> vertices);

    const std::vector<Point2>& vertices() const { return v_; }
    std::size_t size() const { return v_.size(); }
    const Point2& operator[](std::size_t i) const { return v_[i]; }
    const Point2& next(std::size_t i) const { return v_[(i + 1) % v_.size()]; }
    const Box& box() const { return box_; }
    /// Twice the (positive) area.
    Rational area2() const;

private:
    Polygon() = default;
    friend Polygon translate(const Polygon& p, const Vec2& v);

    std::vector<Point2> v_;
    Box box_;
};

/// Throws std::invalid_argument with a reason when the vertex list is not a simple polygon.
void check_simple(const std::vector<Point2>& vertices);
bool is_convex(const Polygon& p);

enum class Location { Inside, Boundary, Outside };
Location point_in_polygon(const Point2& pt, const Polygon& p);

/// Closed regions share a point.
bool polygons_intersect(const Polygon& a, const Polygon& b);
/// Closed regions share a point after translating b by v (no copy made).
bool polygons_intersect(const Polygon& a, const Polygon& b, const Vec2& v);
Polygon translate(const Polygon& p, const Vec2& v);

/// Vertex index pair (i < j) of maximum distance; ties go to the
/// lexicographically smallest pair.
std::pair<std::size_t, std::size_t> diameter(const Polygon& p);
/// Convex hull of the points (collinear points dropped), counter-clockwise
/// from the lowest-leftmost point. Throws std::invalid_argument when fewer
/// than three extreme points exist.
Polygon convex_hull(std::vector<Point2> pts);

/// `poly <k>` then k `v <x> <y>` lines; several polygons may follow each other.
std::vector<Polygon> parse_polygons(const std::vector<io::Line>& lines);
std::string format_polygon(const Polygon& p);
std::string to_string(const Vec2& v);

}  // namespace geodom::geom2d
