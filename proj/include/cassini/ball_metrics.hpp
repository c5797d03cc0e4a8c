#pragma once

#include <optional>
#include <string_view>

#include "cassini/point.hpp"

namespace cassini {

enum class Method { ClosedForm, Optimized, Sampled };

std::string_view to_string(Method m);

/// A metric value together with the boundary point attaining the supremum, when there is one.
struct MetricValue {
  double value = 0.0;
  std::optional<Point> witness;
  Method method = Method::ClosedForm;
};

// Metrics of the unit ball B^n. All of them throw std::domain_error when an
// argument is outside the open ball and std::invalid_argument on a
// dimension mismatch.

/// Hyperbolic distance, rho = 2 artanh(th_half_rho).
double rho_ball(const Point& x, const Point& y);
/// th(rho/2) = |x-y| / sqrt(|x-y|^2 + (1-|x|^2)(1-|y|^2)).
double th_half_rho(const Point& x, const Point& y);
/// sh(rho/2) = |x-y| / sqrt((1-|x|^2)(1-|y|^2)).
double sh_half_rho(const Point& x, const Point& y);
/// Distance ratio metric log(1 + |x-y| / min(1-|x|, 1-|y|)).
double j_ball(const Point& x, const Point& y);

/// Cassinian metric: sup over |z| = 1 of |x-y| / (|x-z| |z-y|).
///
/// Closed forms when x = 0, y = 0 or y = -x; otherwise the supremum is
/// searched on the great circle through span{x, y}.
MetricValue cassinian_ball(const Point& x, const Point& y);
/// The circle search alone, without the closed-form shortcuts.
MetricValue cassinian_ball_optimized(const Point& x, const Point& y);

/// Triangular ratio metric: sup over |z| = 1 of |x-y| / (|x-z| + |z-y|), in [0, 1].
///
/// Exact for |x| = |y|; circle search otherwise.
MetricValue s_ball(const Point& x, const Point& y);
MetricValue s_ball_optimized(const Point& x, const Point& y);

/// |x-y| / (d(p) |z-q|) where p is the point nearer the sphere (x on ties),
/// q the other one and z = p/|p| its nearest boundary point.
MetricValue hat_c_ball(const Point& x, const Point& y);

/// Circle angle of the point minimizing |x-z| + |z-y| for x = (r, 0) and
/// y = r e^{i omega}.
struct ExtremalAngle {
  double theta;
  /// Mirror image of theta about omega/2; present off the bisector branch.
  std::optional<double> theta_alt;
  bool on_bisector;
};

/// theta = omega/2 when sin((pi - omega)/2) >= r. Otherwise
/// theta = (omega - pi)/2 + asin(sin((pi - omega)/2) / r) and
/// theta_alt = (pi + omega)/2 - asin(sin((pi - omega)/2) / r); the two attain
/// the same focal sum. Throws std::domain_error for r outside (0, 1) or
/// omega outside (0, pi].
ExtremalAngle s_extremal_angle(double r, double omega);

struct TangencyCertificate {
  double gamma;    // angle 0-z-x
  double gamma_y;  // angle 0-z-y
  double cos_residual;
  double ptolemy_residual;
};

/// Residuals of cos(gamma) = (|x-z| + |y-z|)/2 and of Ptolemy's relation
/// |y-z||x| + |y||x-z| = |x-y| for an equal-modulus pair and a unit vector z.
/// Both vanish at the tangency point when s(x, y) = |x|.
TangencyCertificate tangency_certificate(const Point& x, const Point& y, const Point& z);

}  // namespace cassini
