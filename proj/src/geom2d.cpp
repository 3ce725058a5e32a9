#include "geodom/geom2d.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace geodom::geom2d {

Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

int orient(const Point2& a, const Point2& b, const Point2& c) {
    Rational v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sgn(v);
}

Rational dist2(const Point2& a, const Point2& b) {
    Rational dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

bool on_segment(const Point2& p, const Point2& a, const Point2& b) {
    if (orient(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && on_segment(c, a, b)) return true;
    if (o2 == 0 && on_segment(d, a, b)) return true;
    if (o3 == 0 && on_segment(a, c, d)) return true;
    if (o4 == 0 && on_segment(b, c, d)) return true;
    return false;
}

Rational segment_dist2(const Point2& p, const Point2& a, const Point2& b) {
    Vec2 ab = b - a;
    Rational len = dot(ab, ab);
    if (len == 0) return dist2(p, a);
    Rational t = dot(p - a, ab) / len;
    if (t <= 0) return dist2(p, a);
    if (t >= 1) return dist2(p, b);
    return dist2(p, a + t * ab);
}

namespace {

Rational signed_area2(const std::vector<Point2>& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += cross(v[i], v[(i + 1) % v.size()]);
    return s;
}

Box bounding_box(const std::vector<Point2>& v) {
    Box b{v.front(), v.front()};
    for (const auto& p : v) {
        b.lo.x = std::min(b.lo.x, p.x);
        b.lo.y = std::min(b.lo.y, p.y);
        b.hi.x = std::max(b.hi.x, p.x);
        b.hi.y = std::max(b.hi.y, p.y);
    }
    return b;
}

}  // namespace

void check_simple(const std::vector<Point2>& v) {
    std::size_t n = v.size();
    if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i)
        if (v[i] == v[(i + 1) % n]) throw std::invalid_argument("repeated consecutive vertex");
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = v[i];
        const Point2& b = v[(i + 1) % n];
        for (std::size_t j = i + 1; j < n; ++j) {
            const Point2& c = v[j];
            const Point2& d = v[(j + 1) % n];
            if (j == i + 1) {
                // consecutive edges a-b, b-d: they may only share b
                if (on_segment(d, a, b) || on_segment(a, b, d)) throw std::invalid_argument("edge folds back");
            } else if (i == 0 && j == n - 1) {
                // edges c-a and a-b share a
                if (on_segment(c, a, b) || on_segment(b, c, a)) throw std::invalid_argument("edge folds back");
            } else if (segments_intersect(a, b, c, d)) {
                throw std::invalid_argument("polygon edges intersect");
            }
        }
    }
    if (signed_area2(v) == 0) throw std::invalid_argument("degenerate polygon");
}

Polygon::Polygon(std::vector<Point2> vertices) : v_(std::move(vertices)) {
    check_simple(v_);
    if (signed_area2(v_) < 0) std::reverse(v_.begin(), v_.end());
    box_ = bounding_box(v_);
}

Rational Polygon::area2() const { return signed_area2(v_); }

bool is_convex(const Polygon& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (orient(p[i], p.next(i), p.next(i + 1)) < 0) return false;
    return true;
}

Location point_in_polygon(const Point2& pt, const Polygon& p) {
    bool inside = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Point2& a = p[i];
        const Point2& b = p.next(i);
        if (on_segment(pt, a, b)) return Location::Boundary;
        // half-open crossing rule on edges straddling the horizontal through pt
        if ((a.y > pt.y) != (b.y > pt.y)) {
            int o = orient(a, b, pt);
            if ((b.y > a.y) ? o > 0 : o < 0) inside = !inside;
        }
    }
    return inside ? Location::Inside : Location::Outside;
}

bool polygons_intersect(const Polygon& a, const Polygon& b, const Vec2& v) {
    Box bb{b.box().lo + v, b.box().hi + v};
    if (!a.box().overlaps(bb)) return false;
    std::vector<Point2> bv;
    bv.reserve(b.size());
    for (const auto& p : b.vertices()) bv.push_back(p + v);
    std::size_t m = bv.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Point2& p = a[i];
        const Point2& q = a.next(i);
        Box e{Point2(std::min(p.x, q.x), std::min(p.y, q.y)), Point2(std::max(p.x, q.x), std::max(p.y, q.y))};
        if (!e.overlaps(bb)) continue;
        for (std::size_t j = 0; j < m; ++j)
            if (segments_intersect(p, q, bv[j], bv[(j + 1) % m])) return true;
    }
    // No boundary contact: either one contains the other or they are disjoint.
    if (point_in_polygon(a[0] - v, b) != Location::Outside) return true;
    return point_in_polygon(bv[0], a) != Location::Outside;
}

bool polygons_intersect(const Polygon& a, const Polygon& b) { return polygons_intersect(a, b, Vec2()); }

Polygon translate(const Polygon& p, const Vec2& v) {
    Polygon out;
    out.v_.reserve(p.size());
    for (const auto& q : p.vertices()) out.v_.push_back(q + v);
    out.box_ = Box{p.box().lo + v, p.box().hi + v};
    return out;
}

std::pair<std::size_t, std::size_t> diameter(const Polygon& p) {
    std::pair<std::size_t, std::size_t> best{0, 1};
    Rational best_d = dist2(p[0], p[1]);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            Rational d = dist2(p[i], p[j]);
            if (d > best_d) {
                best_d = d;
                best = {i, j};
            }
        }
    return best;
}

Polygon convex_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) throw std::invalid_argument("convex hull needs three extreme points");
    std::vector<Point2> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
        while (k >= t && orient(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
        hull[k++] = pts[i - 1];
    }
    hull.resize(k - 1);
    if (hull.size() < 3) throw std::invalid_argument("convex hull needs three extreme points");
    return Polygon(hull);
}

std::vector<Polygon> parse_polygons(const std::vector<io::Line>& lines) {
    std::vector<Polygon> out;
    std::size_t i = 0;
    while (i < lines.size()) {
        const auto& head = lines[i];
        if (head.keyword() != "poly") io::fail(head, 0, "expected 'poly <k>'");
        io::expect_size(head, 2);
        long k = io::integer_at(head, 1);
        if (k < 3) io::fail(head, 1, "polygon needs at least 3 vertices");
        std::vector<Point2> pts;
        for (long j = 0; j < k; ++j) {
            ++i;
            if (i >= lines.size()) io::fail(head, 1, "file ends before all vertices were read");
            const auto& line = lines[i];
            if (line.keyword() != "v") io::fail(line, 0, "expected 'v <x> <y>'");
            io::expect_size(line, 3);
            pts.emplace_back(io::rational_at(line, 1), io::rational_at(line, 2));
        }
        try {
            out.emplace_back(pts);
        } catch (const std::invalid_argument& e) {
            io::fail(head, 0, std::string("invalid polygon: ") + e.what());
        }
        ++i;
    }
    return out;
}

std::string to_string(const Vec2& v) {
    return exactnum::to_literal(v.x) + " " + exactnum::to_literal(v.y);
}

std::string format_polygon(const Polygon& p) {
    std::ostringstream out;
    out << "poly " << p.size() << "\n";
    for (const auto& v : p.vertices()) out << "v " << to_string(v) << "\n";
    return out.str();
}

}  // namespace geodom::geom2d
