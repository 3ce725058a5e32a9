#include "geodom/squarelike.hpp"

#include <algorithm>
#include <sstream>

namespace geodom::squarelike {

using geom2d::cross;
using geom2d::dot;
using geom2d::polygons_intersect;

namespace {

Rational abs_r(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Scaled so that max(|x|, |y|) = 1; keeps coordinates rational.
Vec2 direction(const Vec2& v) {
    Rational m = std::max(abs_r(v.x), abs_r(v.y));
    return Rational(1 / m) * v;
}

Vec2 offset(const SquareLikeCert& c, long i, long j) {
    return Rational(i) * c.u1 + Rational(j) * c.u2;
}

std::string where(const char* what, long a, long b) {
    return std::string(what) + " (" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

// Lattice coordinates (alpha, beta) with z = alpha b1 + beta b2.
std::pair<Rational, Rational> lattice(const Vec2& z, const Vec2& b1, const Vec2& b2) {
    Rational det = cross(b1, b2);
    return {cross(z, b2) / det, cross(b1, z) / det};
}

VerifyResult fail(int prop, std::string detail) { return {false, prop, std::move(detail)}; }

VerifyResult check_neighbors(const Polygon& p, const SquareLikeCert& c, const std::vector<long>& range) {
    for (long i : range)
        for (long j : range)
            if (!polygons_intersect(p, p, offset(c, i, j))) return fail(1, where("S and S(i,j) disjoint at", i, j));
    for (long i : range)
        for (long j : range)
            if (polygons_intersect(p, p, c.b1 + offset(c, i, j)) != (i <= 0))
                return fail(2, where("b1 + S(i,j) mismatch at", i, j));
    for (long i : range)
        for (long j : range)
            if (polygons_intersect(p, p, c.b2 + offset(c, i, j)) != (j <= 0))
                return fail(3, where("b2 + S(i,j) mismatch at", i, j));
    return {};
}

VerifyResult check_distant(const Polygon& p, const SquareLikeCert& c, long m, const std::vector<long>& diffs) {
    if (cross(c.b1, c.b2) == 0) return fail(4, "b1 and b2 are parallel");
    // Bounding parallelogram of the union of all S(i,j) in lattice coordinates.
    Rational amin, amax, bmin, bmax;
    bool first = true;
    for (const auto& v : p.vertices())
        for (long si : {-m, m})
            for (long sj : {-m, m}) {
                auto [a, b] = lattice(v + offset(c, si, sj), c.b1, c.b2);
                if (first || a < amin) amin = a;
                if (first || a > amax) amax = a;
                if (first || b < bmin) bmin = b;
                if (first || b > bmax) bmax = b;
                first = false;
            }
    // Shifts with |k| > width_a or |l| > width_b separate the parallelograms.
    long ka = exactnum::floor(amax - amin).get_si();
    long lb = exactnum::floor(bmax - bmin).get_si();
    if (ka > 8 || lb > 8) return fail(4, "bounding parallelogram spans more than 8 lattice cells");
    long kmax = std::max(2L, ka), lmax = std::max(2L, lb);
    for (long k = -kmax; k <= kmax; ++k)
        for (long l = -lmax; l <= lmax; ++l) {
            if (std::abs(k) + std::abs(l) < 2) continue;
            Vec2 shift = Rational(k) * c.b1 + Rational(l) * c.b2;
            for (long di : diffs)
                for (long dj : diffs) {
                    Vec2 off = shift + offset(c, di, dj);
                    if (polygons_intersect(p, p, off))
                        return fail(4, "copy at k=" + std::to_string(k) + ", l=" + std::to_string(l) +
                                           where(" meets S with offset difference", di, dj));
                }
        }
    return {};
}

std::vector<long> full_range(long lo, long hi) {
    std::vector<long> out;
    for (long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

}  // namespace

VerifyResult verify_squarelike(const Polygon& p, const SquareLikeCert& cert, int n) {
    long m = static_cast<long>(n) * n;
    VerifyResult r = check_neighbors(p, cert, full_range(-m, m));
    if (!r.ok) return r;
    // S(i,j) against k b1 + l b2 + S(i',j') depends only on (i'-i, j'-j).
    return check_distant(p, cert, m, full_range(-2 * m, 2 * m));
}

namespace {

// Quick rejection on the corners and centre of the index range.
bool prefilter(const Polygon& p, const SquareLikeCert& c, long m) {
    std::vector<long> pts{-m, -1, 0, 1, m};
    if (!check_neighbors(p, c, pts).ok) return false;
    return check_distant(p, c, m, {-2 * m, -m, 0, m, 2 * m}).ok;
}

struct Touch {
    std::size_t low, high;
    Rational clearance;  // smallest gap of other vertices to the two lines
};

// Vertices touching the two lines parallel to b (bottom and top of the strip
// swept by the translates k b + P); nullopt on ties.
std::optional<Touch> touching(const Polygon& p, const Vec2& b, std::size_t skip_a, std::size_t skip_b) {
    Vec2 perp(-b.y, b.x);
    std::vector<Rational> h;
    for (const auto& v : p.vertices()) h.push_back(dot(perp, v));
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < h.size(); ++i) {
        if (h[i] < h[lo]) lo = i;
        if (h[i] > h[hi]) hi = i;
    }
    Rational norm = abs_r(perp.x) + abs_r(perp.y);
    Rational clear = -1;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (i != lo && h[i] == h[lo]) return std::nullopt;
        if (i != hi && h[i] == h[hi]) return std::nullopt;
        // the diameter endpoints sit at nearly equal height by construction
        if (i == lo || i == hi || i == skip_a || i == skip_b) continue;
        Rational gap = std::min(h[i] - h[lo], h[hi] - h[i]) / norm;
        if (clear < 0 || gap < clear) clear = gap;
    }
    return Touch{lo, hi, clear};
}

}  // namespace

namespace {

// Offsets along the two contact directions, u1 from s2 and u2 from s1, at
// eps / (2 n^2) and smaller multiples of it, both signs.
std::optional<SquareLikeCert> try_offsets(const Polygon& p, const Vec2& b1, const Vec2& b2, const Vec2& s1,
                                          const Vec2& s2, const Rational& eps, int n, VerifyResult& last) {
    long m = static_cast<long>(n) * n;
    for (int shrink : {1, 2, 4, 8})
        for (int sg1 : {1, -1})
            for (int sg2 : {1, -1}) {
                Rational scale = Rational(1, 2 * m * shrink);
                SquareLikeCert c{b1, b2, Rational(sg1) * scale * s2, Rational(sg2) * scale * s1, eps, n};
                if (!prefilter(p, c, m)) continue;
                VerifyResult r = verify_squarelike(p, c, n);
                if (r.ok) return c;
                last = r;
            }
    return std::nullopt;
}

}  // namespace

SquareLikeCert compute_squarelike_vectors(const Polygon& p, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::size_t k = p.size();
    auto side_ccw = [&](std::size_t i) { return direction(p.next(i) - p[i]); };
    auto side_cw = [&](std::size_t i) { return direction(p[(i + k - 1) % k] - p[i]); };
    auto [di, dj] = geom2d::diameter(p);
    Rational eps0 = std::max(p.box().hi.x - p.box().lo.x, p.box().hi.y - p.box().lo.y) / 4;
    VerifyResult last{false, 0, "no candidate reached verification"};

    // First pass follows the general-position requirement eps < mu / 4; the
    // second drops it for polygons where mu shrinks with eps (an edge parallel
    // to the diameter, say) and leaves the decision to the exact verifier.
    for (bool strict : {true, false}) {
        for (int round = 0; round < 64; ++round) {
            Rational eps = eps0 / (Integer(1) << round);
            for (auto [ip, iq] : {std::pair{di, dj}, std::pair{dj, di}}) {
                Vec2 b0 = p[iq] - p[ip];
                Vec2 sp = side_ccw(ip), sq = side_ccw(iq);
                // the two diameter-side choices first, then the remaining signs
                for (const Vec2& s1 : {eps * sp, -(eps * sq), eps * sq, -(eps * sp)}) {
                    Vec2 b1 = b0 + s1;
                    auto t = touching(p, b1, ip, iq);
                    if (!t) continue;
                    if (strict && !(eps < t->clearance / 4)) continue;
                    Vec2 b0p = p[t->high] - p[t->low];
                    std::size_t hi = t->high, lo = t->low;
                    std::vector<Vec2> s2s{-(eps * side_ccw(hi)), eps * side_ccw(lo), eps * side_ccw(hi),
                                          -(eps * side_ccw(lo)), -(eps * side_cw(hi)), eps * side_cw(lo),
                                          eps * side_cw(hi), -(eps * side_cw(lo))};
                    for (const Vec2& s2 : s2s) {
                        Vec2 b2 = b0p + s2;
                        if (cross(s1, s2) == 0 || cross(b1, b2) == 0) continue;
                        if (auto c = try_offsets(p, b1, b2, s1, s2, eps, n, last)) return *c;
                    }
                }
            }
        }
    }
    throw SynthesisError("no square-like certificate found within 64 halvings: " + last.detail, last);
}

int certificate_bits(const SquareLikeCert& c) {
    std::vector<Rational> coords{c.b1.x, c.b1.y, c.b2.x, c.b2.y, c.u1.x, c.u1.y, c.u2.x, c.u2.y};
    Integer den = 1;
    for (const auto& r : coords) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den_mpz_t());
    std::size_t bits = mpz_sizeinbase(den.get_mpz_t(), 2);
    for (const auto& r : coords) {
        Integer scaled = r.get_num() * (den / r.get_den());
        bits = std::max(bits, mpz_sizeinbase(scaled.get_mpz_t(), 2));
    }
    return static_cast<int>(bits);
}

std::string format_certificate(const SquareLikeCert& c) {
    std::ostringstream out;
    out << "n " << c.n << "\n";
    out << "epsilon " << exactnum::to_literal(c.epsilon) << "\n";
    out << "b1 " << geom2d::to_string(c.b1) << "\n";
    out << "b2 " << geom2d::to_string(c.b2) << "\n";
    out << "u1 " << geom2d::to_string(c.u1) << "\n";
    out << "u2 " << geom2d::to_string(c.u2) << "\n";
    return out.str();
}

}  // namespace geodom::squarelike
