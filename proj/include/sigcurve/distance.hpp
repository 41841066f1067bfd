#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sigcurve/curve.hpp"
#include "sigcurve/geometry.hpp"

namespace sigcurve {

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b);

/// Hausdorff distance between two finite point sets in R^d (rows of the
/// matrices). Symmetric; throws EmptySet on empty input.
double hausdorff_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// Hausdorff distance between two planar point sets with polyline segment
/// refinement: sampled points of each set are measured against the other
/// set's segments. Accuracy O(h^2) in the sample spacing h.
double hausdorff_distance(const std::vector<Vec2>& a, bool a_closed,
                          const std::vector<Vec2>& b, bool b_closed);

/// Hausdorff distance between the traces of two curves (no optimization over
/// group elements; registration is a separate operation).
double curve_distance(const PlanarCurve& a, const PlanarCurve& b);

}  // namespace sigcurve
