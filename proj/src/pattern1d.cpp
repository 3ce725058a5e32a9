#include "geodom/pattern1d.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace geodom::pattern1d {

std::string to_string(PatternClass c) {
    switch (c) {
        case PatternClass::HasInterval: return "HasInterval";
        case PatternClass::RationalPoints: return "RationalPoints";
        case PatternClass::IrrationalPoints: return "IrrationalPoints";
    }
    return "?";
}

namespace {

void absorb_field(Integer& field, const QuadNum& v) {
    if (v.is_rational()) return;
    if (field == 1) field = v.field();
    else if (field != v.field())
        throw ArithmeticError("pattern mixes sqrt(" + field.get_str() + ") and sqrt(" +
                              v.field().get_str() + ")");
}

}  // namespace

Pattern1D::Pattern1D(std::vector<QuadNum> points, std::vector<Interval> intervals) {
    for (const auto& p : points) absorb_field(field_, p);
    std::vector<Interval> proper;
    for (const auto& iv : intervals) {
        absorb_field(field_, iv.lo);
        absorb_field(field_, iv.hi);
        if (iv.hi < iv.lo) throw std::invalid_argument("interval with hi < lo");
        if (iv.hi == iv.lo) points.push_back(iv.lo);
        else proper.push_back(iv);
    }
    if (points.empty() && proper.empty()) throw std::invalid_argument("empty pattern");

    std::sort(proper.begin(), proper.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (const auto& iv : proper) {
        if (!intervals_.empty() && iv.lo <= intervals_.back().hi) {
            if (iv.hi > intervals_.back().hi) intervals_.back().hi = iv.hi;
        } else {
            intervals_.push_back(iv);
        }
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    for (const auto& p : points) {
        bool covered = std::any_of(intervals_.begin(), intervals_.end(),
                                   [&](const Interval& iv) { return iv.lo <= p && p <= iv.hi; });
        if (!covered) points_.push_back(p);
    }
}

QuadNum Pattern1D::leftmost() const {
    if (points_.empty()) return intervals_.front().lo;
    if (intervals_.empty()) return points_.front();
    return std::min(points_.front(), intervals_.front().lo);
}

QuadNum Pattern1D::rightmost() const {
    if (points_.empty()) return intervals_.back().hi;
    if (intervals_.empty()) return points_.back();
    return std::max(points_.back(), intervals_.back().hi);
}

bool Pattern1D::contains(const QuadNum& v) const {
    if (std::binary_search(points_.begin(), points_.end(), v)) return true;
    return std::any_of(intervals_.begin(), intervals_.end(),
                       [&](const Interval& iv) { return iv.lo <= v && v <= iv.hi; });
}

Pattern1D transform(const Pattern1D& q, const QuadNum& factor, const QuadNum& shift) {
    if (factor.sign() <= 0) throw std::invalid_argument("scale factor must be positive");
    std::vector<QuadNum> pts;
    for (const auto& p : q.points()) pts.push_back(factor * p + shift);
    std::vector<Interval> ivs;
    for (const auto& iv : q.intervals()) ivs.push_back({factor * iv.lo + shift, factor * iv.hi + shift});
    return Pattern1D(std::move(pts), std::move(ivs));
}

Pattern1D normalize(const Pattern1D& q, bool rescale) {
    Pattern1D shifted = transform(q, QuadNum(1), -q.leftmost());
    if (!rescale || q.intervals().empty()) return shifted;
    return transform(shifted, QuadNum(1) / longest_interval(q), QuadNum(0));
}

QuadNum span(const Pattern1D& q) { return q.rightmost() - q.leftmost(); }

QuadNum longest_interval(const Pattern1D& q) {
    if (q.intervals().empty()) throw std::invalid_argument("pattern has no interval");
    QuadNum best = q.intervals().front().length();
    for (const auto& iv : q.intervals()) best = std::max(best, iv.length());
    return best;
}

QuadNum w_ratio(const Pattern1D& q) { return span(q) / longest_interval(q); }

bool translates_intersect(const Pattern1D& q, const QuadNum& x, const QuadNum& y) {
    // x + a = y + b for some a, b in Q, i.e. d = y - x lies in Q - Q.
    QuadNum d = y - x;
    const auto& pts = q.points();
    const auto& ivs = q.intervals();
    for (const auto& a : pts) {
        QuadNum target = a - d;  // need target in Q
        if (std::binary_search(pts.begin(), pts.end(), target)) return true;
        for (const auto& iv : ivs)
            if (iv.lo <= target && target <= iv.hi) return true;
    }
    for (const auto& iv : ivs) {
        // x + iv meets y + b for a point b: b + d in iv
        for (const auto& b : pts) {
            QuadNum t = b + d;
            if (iv.lo <= t && t <= iv.hi) return true;
        }
        for (const auto& jv : ivs)
            if (iv.lo <= jv.hi + d && jv.lo + d <= iv.hi) return true;
    }
    return false;
}

std::optional<QuadNum> irrational_ratio(const Pattern1D& q) {
    if (!q.intervals().empty() || q.points().size() < 2) return std::nullopt;
    const auto& pts = q.points();
    QuadNum base = pts[1] - pts[0];
    for (std::size_t i = 2; i < pts.size(); ++i) {
        QuadNum diff = pts[i] - pts[0];
        if (!exactnum::ratio_is_rational(diff, base)) return diff / base;
    }
    return std::nullopt;
}

PatternClass classify(const Pattern1D& q) {
    if (!q.intervals().empty()) return PatternClass::HasInterval;
    return irrational_ratio(q) ? PatternClass::IrrationalPoints : PatternClass::RationalPoints;
}

Pattern1D PatternText::pattern() const {
    if (unbounded)
        throw ParseError("unbounded interval: every pair of translates intersects, so the "
                         "intersection graph is a clique (solve-1d answers 1 directly)",
                         unbounded_line, 1);
    if (points.empty() && intervals.empty()) throw ParseError("pattern has no points or intervals");
    return Pattern1D(points, intervals);
}

PatternText parse_pattern(const std::vector<io::Line>& lines, bool allow_translates) {
    PatternText out;
    for (const auto& line : lines) {
        const std::string& kw = line.keyword();
        if (kw == "point") {
            io::expect_size(line, 2);
            out.points.push_back(io::quad_at(line, 1));
        } else if (kw == "interval") {
            io::expect_size(line, 3);
            auto is_inf = [&](std::size_t i) {
                const std::string& t = line.tokens[i].text;
                return t == "inf" || t == "-inf" || t == "+inf";
            };
            if (is_inf(1) || is_inf(2)) {
                if (!out.unbounded) out.unbounded_line = line.number;
                out.unbounded = true;
                continue;
            }
            Interval iv{io::quad_at(line, 1), io::quad_at(line, 2)};
            if (iv.hi < iv.lo) io::fail(line, 2, "interval end below its start");
            out.intervals.push_back(iv);
        } else if (kw == "translate" && allow_translates) {
            io::expect_size(line, 2);
            out.translates.push_back(io::quad_at(line, 1));
        } else {
            io::fail(line, 0, "unknown keyword '" + kw + "'");
        }
    }
    return out;
}

std::string format_pattern(const Pattern1D& q) {
    std::ostringstream out;
    for (const auto& p : q.points()) out << "point " << exactnum::to_literal(p) << "\n";
    for (const auto& iv : q.intervals())
        out << "interval " << exactnum::to_literal(iv.lo) << " " << exactnum::to_literal(iv.hi) << "\n";
    return out.str();
}

}  // namespace geodom::pattern1d
