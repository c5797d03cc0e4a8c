#include "cassini/ball_metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cassini/circle_search.hpp"
#include "cassini/geometry.hpp"

namespace cassini {

namespace {

constexpr double kEqualModulusTol = 1e-12;

void require_pair_in_ball(const Point& x, const Point& y) {
  require_same_dim(x, y);
  if (!(x.norm2() < 1.0)) throw std::domain_error("point " + to_string(x) + " is not in the unit ball");
  if (!(y.norm2() < 1.0)) throw std::domain_error("point " + to_string(y) + " is not in the unit ball");
}

// 1 - |x|^2 as (1 - |x|)(1 + |x|).
double one_minus_sq(const Point& x) {
  const double r = x.norm();
  return (1.0 - r) * (1.0 + r);
}

bool is_antipodal(const Point& x, const Point& y) {
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x[i] != -y[i]) return false;
  }
  return true;
}

double sq_dist2(double px, double py, double c, double s) {
  const double dx = px - c, dy = py - s;
  return dx * dx + dy * dy;
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::ClosedForm:
      return "closed-form";
    case Method::Optimized:
      return "optimized";
    case Method::Sampled:
      return "sampled";
  }
  return "unknown";
}

double th_half_rho(const Point& x, const Point& y) {
  require_pair_in_ball(x, y);
  const double d = distance(x, y);
  if (d == 0.0) return 0.0;
  return d / std::sqrt(d * d + one_minus_sq(x) * one_minus_sq(y));
}

double rho_ball(const Point& x, const Point& y) { return 2.0 * std::atanh(th_half_rho(x, y)); }

double sh_half_rho(const Point& x, const Point& y) {
  require_pair_in_ball(x, y);
  return distance(x, y) / std::sqrt(one_minus_sq(x) * one_minus_sq(y));
}

double j_ball(const Point& x, const Point& y) {
  require_pair_in_ball(x, y);
  const double d = std::min(1.0 - x.norm(), 1.0 - y.norm());
  return std::log1p(distance(x, y) / d);
}

MetricValue cassinian_ball_optimized(const Point& x, const Point& y) {
  require_pair_in_ball(x, y);
  if (x == y) return {0.0, std::nullopt, Method::Optimized};
  const PlanePair plane = reduce_to_plane(x, y);
  const double ax = plane.x2[0], ay = plane.x2[1];
  const double bx = plane.y2[0], by = plane.y2[1];
  // Squared product has the same minimizer and skips two square roots per angle.
  auto product2 = [=](double c, double s) { return sq_dist2(ax, ay, c, s) * sq_dist2(bx, by, c, s); };
  const std::array<double, 2> seeds{std::atan2(ay, ax), std::atan2(by, bx)};
  const Minimum m = minimize_on_circle(product2, seeds);
  return {distance(x, y) / std::sqrt(m.value), plane.lift(m.arg), Method::Optimized};
}

MetricValue cassinian_ball(const Point& x, const Point& y) {
  require_pair_in_ball(x, y);
  if (x == y) return {0.0, std::nullopt, Method::ClosedForm};
  if (x.is_zero() || y.is_zero()) {
    const Point& p = x.is_zero() ? y : x;
    const double r = p.norm();
    return {r / (1.0 - r), p * (1.0 / r), Method::ClosedForm};
  }
  if (is_antipodal(x, y)) {
    const double r = x.norm();
    return {2.0 * r / one_minus_sq(x), x * (1.0 / r), Method::ClosedForm};
  }
  return cassinian_ball_optimized(x, y);
}

MetricValue s_ball_optimized(const Point& x, const Point& y) {
  require_pair_in_ball(x, y);
  if (x == y) return {0.0, std::nullopt, Method::Optimized};
  const PlanePair plane = reduce_to_plane(x, y);
  const double ax = plane.x2[0], ay = plane.x2[1];
  const double bx = plane.y2[0], by = plane.y2[1];
  auto focal_sum = [=](double c, double s) {
    return std::sqrt(sq_dist2(ax, ay, c, s)) + std::sqrt(sq_dist2(bx, by, c, s));
  };
  const std::array<double, 3> seeds{std::atan2(ay, ax), std::atan2(by, bx), 0.5 * plane.omega};
  const Minimum m = minimize_on_circle(focal_sum, seeds);
  return {std::clamp(distance(x, y) / m.value, 0.0, 1.0), plane.lift(m.arg), Method::Optimized};
}

MetricValue s_ball(const Point& x, const Point& y) {
  require_pair_in_ball(x, y);
  if (x == y) return {0.0, std::nullopt, Method::ClosedForm};
  const double rx = x.norm(), ry = y.norm();
  if (rx == 0.0 || ry == 0.0 || std::abs(rx - ry) > kEqualModulusTol) return s_ball_optimized(x, y);

  const PlanePair plane = reduce_to_plane(x, y);
  const double omega = plane.omega;
  if (!(omega > 0.0)) return s_ball_optimized(x, y);
  const double r = rx;
  const double half_cos = std::cos(0.5 * omega);
  double value;
  if (half_cos < r) {
    value = r;
  } else {
    // 1 + r^2 - 2 r cos(w/2) written without cancellation near r = 1, w = 0.
    const double q = std::sin(0.25 * omega);
    value = r * std::sin(0.5 * omega) / std::sqrt((1.0 - r) * (1.0 - r) + 4.0 * r * q * q);
  }
  const ExtremalAngle angle = s_extremal_angle(r, omega);
  return {std::clamp(value, 0.0, 1.0), plane.lift(angle.theta), Method::ClosedForm};
}

MetricValue hat_c_ball(const Point& x, const Point& y) {
  require_pair_in_ball(x, y);
  if (x == y) return {0.0, std::nullopt, Method::ClosedForm};
  const double rx = x.norm(), ry = y.norm();
  const bool x_nearer = 1.0 - rx <= 1.0 - ry;
  const Point& p = x_nearer ? x : y;
  const Point& q = x_nearer ? y : x;
  const double rp = x_nearer ? rx : ry;
  Point z = p * (1.0 / rp);
  const double value = distance(x, y) / ((1.0 - rp) * distance(z, q));
  return {value, std::move(z), Method::ClosedForm};
}

ExtremalAngle s_extremal_angle(double r, double omega) {
  if (!(r > 0.0 && r < 1.0)) throw std::domain_error("s_extremal_angle: r must lie in (0, 1)");
  if (!(omega > 0.0 && omega <= std::numbers::pi)) {
    throw std::domain_error("s_extremal_angle: omega must lie in (0, pi]");
  }
  const double c = std::sin(0.5 * (std::numbers::pi - omega));
  if (c >= r) return {0.5 * omega, std::nullopt, true};
  const double a = std::asin(c / r);
  return {0.5 * (omega - std::numbers::pi) + a, 0.5 * (std::numbers::pi + omega) - a, false};
}

TangencyCertificate tangency_certificate(const Point& x, const Point& y, const Point& z) {
  require_same_dim(x, y);
  require_same_dim(x, z);
  if (std::abs(z.norm() - 1.0) > 1e-9) throw std::domain_error("tangency_certificate: z must be a unit vector");
  if (x == y) throw std::domain_error("tangency_certificate: x and y must differ");
  const double rx = x.norm(), ry = y.norm();
  if (std::abs(rx - ry) > 1e-9) throw std::domain_error("tangency_certificate: |x| and |y| must be equal");
  const double dxz = distance(x, z), dyz = distance(y, z);
  TangencyCertificate cert{};
  cert.gamma = angle_between(-z, x - z);
  cert.gamma_y = angle_between(-z, y - z);
  cert.cos_residual = std::cos(cert.gamma) - 0.5 * (dxz + dyz);
  cert.ptolemy_residual = dyz * rx + ry * dxz - distance(x, y);
  return cert;
}

}  // namespace cassini
