#pragma once

// One-dimensional patterns Q made of points and closed bounded intervals.

#include <optional>
#include <string>
#include <vector>

#include "geodom/exactnum.hpp"
#include "geodom/io.hpp"

namespace geodom::pattern1d {

struct Interval {
    QuadNum lo;
    QuadNum hi;
    QuadNum length() const { return hi - lo; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

enum class PatternClass { HasInterval, RationalPoints, IrrationalPoints };
std::string to_string(PatternClass c);

class Pattern1D {
public:
    /// Sorts, merges overlapping or touching intervals, drops points covered by
    /// an interval and duplicate points. A zero-length interval becomes a point.
    Pattern1D(std::vector<QuadNum> points, std::vector<Interval> intervals = {});

    const std::vector<QuadNum>& points() const { return points_; }
    const std::vector<Interval>& intervals() const { return intervals_; }
    /// Common field parameter d of all coordinates (1 when everything is rational).
    const Integer& field() const { return field_; }

    QuadNum leftmost() const;
    QuadNum rightmost() const;
    bool contains(const QuadNum& v) const;

    friend bool operator==(const Pattern1D&, const Pattern1D&) = default;

private:
    std::vector<QuadNum> points_;
    std::vector<Interval> intervals_;
    Integer field_{1};
};

/// Pattern scaled by a positive factor and shifted: factor * Q + shift.
Pattern1D transform(const Pattern1D& q, const QuadNum& factor, const QuadNum& shift);
/// Moves the leftmost coordinate to 0; with rescale the longest interval gets length 1.
Pattern1D normalize(const Pattern1D& q, bool rescale = false);

QuadNum span(const Pattern1D& q);
QuadNum longest_interval(const Pattern1D& q);
/// span / longest interval length. Throws std::invalid_argument without intervals.
QuadNum w_ratio(const Pattern1D& q);

/// (x + Q) and (y + Q) share a point (closed sets).
bool translates_intersect(const Pattern1D& q, const QuadNum& x, const QuadNum& y);

PatternClass classify(const Pattern1D& q);
/// For an IrrationalPoints pattern, an irrational ratio (p_i - p_0) / (p_1 - p_0).
std::optional<QuadNum> irrational_ratio(const Pattern1D& q);

/// Pattern file contents before validation. Intervals with an infinite end
/// ("inf" / "-inf") are only recorded as a flag.
struct PatternText {
    std::vector<QuadNum> points;
    std::vector<Interval> intervals;
    bool unbounded = false;
    int unbounded_line = 0;
    std::vector<QuadNum> translates;

    /// Throws ParseError when an unbounded interval was present.
    Pattern1D pattern() const;
};

/// Reads `point <num>`, `interval <num> <num>` and (for instance files)
/// `translate <num>` lines.
PatternText parse_pattern(const std::vector<io::Line>& lines, bool allow_translates);
std::string format_pattern(const Pattern1D& q);

}  // namespace geodom::pattern1d
