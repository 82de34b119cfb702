#pragma once

#include "stringcx/gap_space.hpp"

#include <array>
#include <vector>

namespace stringcx {

/// The discrete metric on n points: every off-diagonal gap is 1.
GapSpace uniform_metric(int n);

/// Points on a line with the induced metric |v_i - v_j|. Exact mode when the
/// inputs are exact. Values must be pairwise distinct.
GapSpace collinear_points(const std::vector<Scalar>& values);

/// m >= 3 points on one line and n >= 3 points on a parallel line, evenly
/// spaced, with the planar Euclidean metric. Real mode (the cross-line
/// distances are square roots).
GapSpace two_parallel_lines(int m, int n, const Scalar& separation, const Scalar& spacing,
                            double tolerance = GapSpace::kDefaultTolerance);

/// Points on the boundary of a strictly convex polygon with the planar
/// Euclidean metric: all polygon vertices plus evenly spaced interior points
/// on each edge. edge_point_counts[i] is the total number of points on edge
/// i (its two endpoints included) and must be >= 3. Real mode.
GapSpace polygon_points(const std::vector<int>& edge_point_counts,
                        const std::vector<std::array<double, 2>>& vertices,
                        double tolerance = GapSpace::kDefaultTolerance);

/// Points on a circle of the given circumference, with the shortest-arc
/// metric. Positions must be pairwise distinct modulo the circumference.
GapSpace circle_arc_metric(const std::vector<Scalar>& positions, const Scalar& circumference);

struct Arc {
    int from = 0;
    int to = 0;
    Scalar length;
};

/// Gaps of a strongly connected weighted digraph: gap(x,y) is the length of
/// the shortest directed path from x to y. Generally asymmetric. Arc lengths
/// must be nonnegative; throws if some pair is unreachable.
GapSpace digraph_gaps(int nodes, const std::vector<Arc>& arcs);

}  // namespace stringcx
