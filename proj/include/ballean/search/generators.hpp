#pragma once

#include <cstdint>
#include <vector>

#include "ballean/core/presentation.hpp"
#include "ballean/orders/linear_order.hpp"
#include "ballean/search/scenario.hpp"

namespace ballean {

/// Points 0..n-1 on a line, coordinates (i). Points within `margin` of
/// either end are not interior.
WindowPtr line_window(std::size_t n, std::size_t margin = 0);

/// Row-major grid of `columns` x `rows` points with ids "(x,y)" and
/// coordinates (x, y). Points within `margin` of the border are not interior.
WindowPtr grid_window(std::size_t columns, std::size_t rows, std::size_t margin = 0);

/// Sup-metric distance of two coordinate vectors.
std::int64_t sup_distance(const Coordinates& a, const Coordinates& b);

/// One entourage per radius: (x, y) related iff sup distance <= radius.
/// Needs coordinates on every point.
CoarsePresentation sup_metric_presentation(const WindowPtr& window, const std::vector<std::int64_t>& radii);

/// Z^2 points with sup norm <= n + 1, lexicographic in (x1, x2), ids "(x1,x2)";
/// points of norm <= n are interior. Pairs {x, -x} for x of norm n, closeness
/// d(x, y) <= 1 or d(x, -y) <= 1, requirement d(u, v) <= n.
ConstraintScenario antipodal_grid_scenario(std::int64_t n);

/// 2 sin(pi / n).
double ngon_side_length(std::size_t n);

/// Vertices of the regular n-gon on the unit circle, ids "v0".., coordinates
/// in millionths. Pairs of antipodal vertices; two pairs are close when
/// their Hausdorff distance is <= delta, values are allowed when their
/// distance is <= epsilon. Thresholds are compared in millionths with one
/// unit of slack for coordinate rounding.
ConstraintScenario ngon_scenario(std::size_t n, double delta, double epsilon);

struct OrdinalSumWindow {
  WindowPtr window;
  LinearOrder order;
  BornologyPresentation bornology;
};

/// l_{m-1} < ... < l_0 < r_0 < ... < r_{k-1} with split (l_0, r_0) and the
/// interval bornology of that order.
OrdinalSumWindow ordinal_sum_window(std::size_t m, std::size_t k);

/// Path-metric presentation of a connected graph: one entourage per scale s
/// relating vertices at distance <= s.
CoarsePresentation graph_path_scenario(const WindowPtr& window, const std::vector<PointPair>& edges,
                                       const std::vector<std::size_t>& scales);

}  // namespace ballean
