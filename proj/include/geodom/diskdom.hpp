#pragma once

// Unit-disk domination: vertical decomposition of radius-2 circle
// arrangements, a face lookup table over small circle subsets, and an exact
// enumeration solver.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geodom/exactnum.hpp"
#include "geodom/geom2d.hpp"
#include "geodom/graphcore.hpp"
#include "geodom/io.hpp"

namespace geodom::diskdom {

using geom2d::Point2;

struct DiskInstance {
    std::vector<Point2> centers;
};

/// Throws std::invalid_argument on repeated centers.
void check_instance(const DiskInstance& inst);
DiskInstance parse_disks(const std::vector<io::Line>& lines);
std::string format_disks(const DiskInstance& inst);

/// Closed convention: unit disks around c1 and c2 meet iff |c1 - c2| <= 2.
bool dominates_pair(const Point2& c1, const Point2& c2);
graphcore::Graph disk_graph(const DiskInstance& inst);

/// Circle-level event: an extreme point (kind 0, tag -1 left / +1 right) of
/// circle a, or an intersection (kind 1) of circles a < b, tag selecting the
/// point on either side of the center line (0 for tangency).
struct EventKey {
    int kind = 0;
    int a = -1;
    int b = -1;
    int tag = 0;
    friend auto operator<=>(const EventKey&, const EventKey&) = default;
};

/// Arc ids: 2 * circle + 1 for the upper half, 2 * circle for the lower half.
inline int arc_id(int circle, bool upper) { return 2 * circle + (upper ? 1 : 0); }
inline int arc_circle(int arc) { return arc / 2; }
inline bool arc_upper(int arc) { return arc % 2 == 1; }

enum class FaceKind { Cell, Arc, Wall, EventVertex, TouchVertex };

/// One relatively open face of the decomposition.
///  Cell: lower < y < upper over left < x < right (arcs or unbounded).
///  Arc: points of arc `lower` with left < x < right.
///  Wall: x = left, strictly between the two end items.
///  EventVertex: the point (vx, vy).
///  TouchVertex: the point of arc `lower` at x = left.
struct Face {
    FaceKind kind = FaceKind::Cell;
    int lower = -1;
    int upper = -1;
    std::optional<QuadNum> left, right;
    // wall ends: an event point height, or a free arc (lower/upper above)
    std::optional<QuadNum> y_lo, y_hi;
    QuadNum vx, vy;
    // touch vertices: the wall meets the arc from inside its circle
    bool inner_touch = false;
    std::vector<int> key;       // canonical, field-free descriptor
    std::vector<int> defining;  // sorted circle ids referenced by key
    int dimension() const;
};

class Decomposition {
public:
    /// Radius-2 circles around centers[ids[i]]; ids must be distinct.
    Decomposition(const std::vector<Point2>& centers, std::vector<int> ids);

    const std::vector<Face>& faces() const { return faces_; }
    const std::vector<int>& ids() const { return ids_; }
    bool contains(const Face& f, const Point2& p) const;
    /// Faces that lie in the union of the closed radius-2 disks.
    bool inside_union(const Face& f) const { return inside_[&f - faces_.data()]; }
    /// Alternative keys of a face: every choice of representative event.
    const std::vector<std::vector<int>>& alternatives(const Face& f) const {
        return alternatives_[&f - faces_.data()];
    }
    std::size_t event_lines() const { return lines_; }

    const Point2& center(int id) const { return circles_.at(id); }

private:
    std::map<int, Point2> circles_;
    std::vector<int> ids_;
    std::vector<Face> faces_;
    std::vector<bool> inside_;
    std::vector<std::vector<std::vector<int>>> alternatives_;
    std::size_t lines_ = 0;
};

/// Count table over faces of all local subsets of at most four circles:
/// subsets whose centers lie within distance 4 of a common center of P.
class DiskLookup {
public:
    explicit DiskLookup(DiskInstance inst);

    const DiskInstance& instance() const { return inst_; }
    std::size_t size() const { return table_.size(); }
    std::size_t subsets() const { return subsets_; }
    std::optional<long> find(const std::vector<int>& key) const;

    /// |{p in P : dist(p, d) <= 2 for some d in D}| summed from the table over
    /// the faces inside the union. Points on an arc edge are credited to the
    /// cell inside that arc's circle, so only 2-dimensional cells, walls and
    /// vertices are looked up.
    /// Throws std::logic_error if a needed face is missing.
    long coverage_count(const std::vector<int>& D) const;

private:
    void add_subset(const std::vector<int>& ids);
    long count_face(const Decomposition& dec, const Face& f, const std::vector<int>& near) const;
    long count_credit(const Decomposition& dec, const Face& f, const std::vector<int>& near) const;
    void store(const std::vector<int>& key, long count);

    DiskInstance inst_;
    std::map<std::vector<int>, long> table_;
    std::size_t subsets_ = 0;
};

/// Table key holding the arc points credited to a cell (see coverage_count).
std::vector<int> credit_key(std::vector<int> cell_key);

/// Points of P covered by D, by direct distance checks.
long direct_coverage(const DiskInstance& inst, const std::vector<int>& D);

/// First k-subset of P (lexicographic in indices) covering all of P, or a
/// smaller set if |P| < k.
std::optional<std::vector<int>> xp_solve(const DiskLookup& lookup, int k);
std::optional<std::vector<int>> xp_solve(const DiskInstance& inst, int k);

}  // namespace geodom::diskdom
