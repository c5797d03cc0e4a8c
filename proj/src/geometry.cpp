#include "cassini/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cassini {

namespace {

// Unit vector orthogonal to the unit vector u.
Point any_orthogonal(const Point& u) {
  std::size_t axis = 0;
  for (std::size_t i = 1; i < u.dim(); ++i) {
    if (std::abs(u[i]) < std::abs(u[axis])) axis = i;
  }
  Point v = Point::unit(u.dim(), axis) - u[axis] * u;
  return v * (1.0 / v.norm());
}

}  // namespace

double wedge_norm(const Point& x, const Point& y) {
  require_same_dim(x, y);
  // Lagrange identity, summed over coordinate planes to avoid cancellation.
  double s = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    for (std::size_t j = i + 1; j < x.dim(); ++j) {
      const double m = x[i] * y[j] - x[j] * y[i];
      s += m * m;
    }
  }
  return std::sqrt(s);
}

double angle_between(const Point& x, const Point& y) {
  require_same_dim(x, y);
  if (x.is_zero() || y.is_zero()) throw std::domain_error("angle_between: zero vector");
  // atan2 form of arccos(<x,y>/(|x||y|)); already lies in [0, pi].
  return std::atan2(wedge_norm(x, y), dot(x, y));
}

Point PlanePair::lift(double theta) const { return std::cos(theta) * e1 + std::sin(theta) * e2; }

PlanePair reduce_to_plane(const Point& x, const Point& y) {
  require_same_dim(x, y);
  const std::size_t n = x.dim();
  if (x.is_zero() && y.is_zero()) {
    return {Point::zero(2), Point::zero(2), 0.0, true, Point::unit(n, 0), Point::unit(n, 1)};
  }
  if (x.is_zero()) {
    const double ry = y.norm();
    Point e1 = y * (1.0 / ry);
    Point e2 = any_orthogonal(e1);
    return {Point::zero(2), Point{ry, 0.0}, 0.0, false, std::move(e1), std::move(e2)};
  }

  const double rx = x.norm();
  Point e1 = x * (1.0 / rx);
  const double along = dot(y, e1);
  const double across = wedge_norm(x, y) / rx;
  Point rejection = y - along * e1;
  const double rej_norm = rejection.norm();
  Point e2 = rej_norm > 0.0 && across > 0.0 ? rejection * (1.0 / rej_norm) : any_orthogonal(e1);
  const double omega = y.is_zero() ? 0.0 : std::atan2(across, along);
  return {Point{rx, 0.0}, Point{along, across}, omega, false, std::move(e1), std::move(e2)};
}

}  // namespace cassini
