#pragma once

// Exact minimum dominating sets for translates of a 1-D pattern.

#include <optional>
#include <vector>

#include "geodom/graphcore.hpp"
#include "geodom/pattern1d.hpp"

namespace geodom::solver1d {

using pattern1d::Pattern1D;

/// Witness indices refer to the input translate list and are ascending.
struct Solution {
    int size = 0;
    std::vector<int> witness;
};

graphcore::Graph translate_graph(const Pattern1D& q, const std::vector<QuadNum>& xs);

/// Upper bound on chosen left endpoints per window: floor(3 w).
int window_cap(const Pattern1D& q);

/// Windowed dynamic program for patterns containing an interval.
Solution solve_interval_pattern(const Pattern1D& q, const std::vector<QuadNum>& xs);

/// A pattern with an unbounded interval: all translates pairwise intersect.
Solution solve_unbounded(const std::vector<QuadNum>& xs);

/// Integer form of a rational point pattern: factor c and integer points
/// c * (Q - leftmost). For a one-point pattern the factor is 1.
struct IntegerForm {
    QuadNum factor;
    QuadNum shift;  // -leftmost
    Pattern1D points;
    Pattern1D widened;  // leftmost point 0 replaced by [0, 1/3]
};
IntegerForm integer_form(const Pattern1D& q);

/// Splits translates into classes whose pairwise differences (after scaling)
/// are integers; translates in different classes never intersect.
std::vector<std::vector<int>> residue_classes(const IntegerForm& form, const std::vector<QuadNum>& xs);

/// Graph of Q-translates equals the graph of widened-pattern translates of
/// the scaled offsets.
bool reduction_preserves_graph(const Pattern1D& q, const std::vector<QuadNum>& xs);

Solution solve_rational_points(const Pattern1D& q, const std::vector<QuadNum>& xs);

/// Bounded-depth branching on the duplicate-free graph. Throws
/// std::invalid_argument for k < 0 or a pattern with intervals.
std::optional<std::vector<int>> solve_fpt_branching(const Pattern1D& q, const std::vector<QuadNum>& xs,
                                                    int k);

/// Number of distinct translates and the maximum degree of their graph.
struct DedupStats {
    int distinct = 0;
    int max_degree = 0;
    int degree_bound = 0;  // t^2 - t
};
DedupStats dedup_stats(const Pattern1D& q, const std::vector<QuadNum>& xs);

/// Dispatches on the pattern class; the irrational case iterates k = 0, 1, ...
Solution solve(const Pattern1D& q, const std::vector<QuadNum>& xs);

/// Largest number of witness left endpoints in a window [y, y + span) with
/// y ranging over the witness left endpoints.
int max_window_load(const Pattern1D& q, const std::vector<QuadNum>& xs, const std::vector<int>& witness);

}  // namespace geodom::solver1d
