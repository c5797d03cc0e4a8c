#pragma once

#include "cassini/point.hpp"

namespace cassini {

/// Angle x-0-y in [0, pi]. Throws std::domain_error when either vector is zero.
double angle_between(const Point& x, const Point& y);

/// |x ^ y|, the area of the parallelogram spanned by x and y.
double wedge_norm(const Point& x, const Point& y);

/// Planar configuration with the same |x|, |y| and angle as an n-dimensional pair.
///
/// x2 = (|x|, 0) and y2 = (|y| cos w, |y| sin w) with w in [0, pi]. The
/// orthonormal frame (e1, e2) embeds the plane back into R^n, so a circle
/// angle theta corresponds to the unit vector cos(theta) e1 + sin(theta) e2.
/// When x = 0 the frame is anchored on y instead and y2 = (|y|, 0).
struct PlanePair {
  Point x2;
  Point y2;
  double omega;
  bool degenerate;  // x = y = 0
  Point e1;
  Point e2;

  /// Unit vector of R^n at circle angle theta.
  Point lift(double theta) const;
};

PlanePair reduce_to_plane(const Point& x, const Point& y);

}  // namespace cassini
