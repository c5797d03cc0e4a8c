#include "cassini/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cassini/circle_search.hpp"
#include "cassini/geometry.hpp"

namespace cassini {

namespace {

// log((1+t)/(1-t))
double log_ratio_num(double t) { return std::log1p(2.0 * t / (1.0 - t)); }
// log((1+2t-t^2)/(1-t^2))
double log_ratio_den(double t) { return std::log1p(2.0 * t / ((1.0 - t) * (1.0 + t))); }

// Minimum of f(cos t, sin t) over a grid of n angles, refined by golden
// section over the two cells around the best grid angle.
template <class F>
Minimum scan_and_refine(F&& f, std::size_t n, int refine_iters) {
  const auto table = circle_table(n);
  std::size_t best = 0;
  double best_v = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double v = f(table[2 * i], table[2 * i + 1]);
    if (v < best_v) {
      best_v = v;
      best = i;
    }
  }
  const double h = 2.0 * std::numbers::pi / static_cast<double>(n);
  double lo = h * (static_cast<double>(best) - 1.0);
  double hi = h * (static_cast<double>(best) + 1.0);
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  auto along = [&](double t) { return f(std::cos(t), std::sin(t)); };
  double a = hi - g * (hi - lo), b = lo + g * (hi - lo);
  double fa = along(a), fb = along(b);
  for (int k = 0; k < refine_iters; ++k) {
    if (fa < fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - g * (hi - lo);
      fa = along(a);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + g * (hi - lo);
      fb = along(b);
    }
  }
  Minimum m{h * static_cast<double>(best), best_v};
  if (fa < m.value) m = {a, fa};
  if (fb < m.value) m = {b, fb};
  return m;
}

void require_unit_ball_pair(const Point& x, const Point& y) {
  require_same_dim(x, y);
  if (!(x.norm2() < 1.0) || !(y.norm2() < 1.0)) throw std::domain_error("points must lie in the unit ball");
}

}  // namespace

double m_function(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("m_function: t must lie in [0, 1]");
  if (t == 0.0 || t == 1.0) return 1.0;
  return log_ratio_num(t) / log_ratio_den(t);
}

double alpha_equation(double t) {
  if (!(t > 0.0 && t < 1.0)) throw std::domain_error("alpha_equation: t must lie in (0, 1)");
  return (1.0 + t * t) * log_ratio_num(t) + (t * t - 2.0 * t - 1.0) * log_ratio_den(t);
}

SharpConstants solve_alpha() {
  double lo = 0.1, hi = 0.9;
  double flo = alpha_equation(lo), fhi = alpha_equation(hi);
  if (!(flo < 0.0 && fhi > 0.0)) throw std::logic_error("solve_alpha: no sign change on [0.1, 0.9]");
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = alpha_equation(mid);
    if (fm == 0.0) {
      lo = hi = mid;
      flo = fhi = 0.0;
      break;
    }
    if (fm < 0.0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  double alpha = std::abs(flo) <= std::abs(fhi) ? lo : hi;
  if (fhi != flo) {
    const double sec = lo - flo * (hi - lo) / (fhi - flo);
    if (sec >= lo && sec <= hi && std::abs(alpha_equation(sec)) < std::abs(alpha_equation(alpha))) alpha = sec;
  }
  return {alpha, m_function(alpha), alpha_equation(alpha)};
}

std::optional<AuxFunction> parse_aux_function(std::string_view name) {
  if (name == "f") return AuxFunction::F;
  if (name == "g") return AuxFunction::G;
  if (name == "h") return AuxFunction::H;
  if (name == "fb") return AuxFunction::FB;
  return std::nullopt;
}

double lemma21_eval(AuxFunction which, double arg, std::optional<double> aux) {
  switch (which) {
    case AuxFunction::F:
      if (!(arg > 0.0) || !std::isfinite(arg)) throw std::domain_error("f: argument must be positive");
      return std::log1p(arg) / arg;
    case AuxFunction::G: {
      if (!(arg > 0.0) || !std::isfinite(arg)) throw std::domain_error("g: argument must be positive");
      if (!aux || !(*aux > 0.0)) throw std::domain_error("g: parameter a must be positive");
      // log(a x)/(a - 1/x) = x log1p(u)/u with u = a x - 1; the limit at u = 0 is x.
      const double u = *aux * arg - 1.0;
      return u == 0.0 ? arg : arg * std::log1p(u) / u;
    }
    case AuxFunction::H:
      if (!(arg > 0.0 && arg < 1.0)) throw std::domain_error("h: argument must lie in (0, 1)");
      return log_ratio_num(arg) * (1.0 - arg) * (1.0 + arg) / (2.0 * arg);
    case AuxFunction::FB: {
      if (!(arg > 0.0 && arg < 2.0)) throw std::domain_error("fb: b must lie in (0, 2)");
      if (!aux || !(*aux > 0.0 && *aux < 1.0)) throw std::domain_error("fb: parameter x must lie in (0, 1)");
      const double d = 1.0 - *aux;
      return std::log1p(arg / d) / std::log1p(arg / (d * (arg + d)));
    }
  }
  throw std::invalid_argument("unknown auxiliary function");
}

MetricValue brute_force_extremum(ExtremumMetric metric, const Point& x, const Point& y, std::size_t grid,
                                 int refine_iters) {
  if (grid < 16) throw std::invalid_argument("brute_force_extremum: grid must have at least 16 points");
  require_unit_ball_pair(x, y);
  if (x == y) return {0.0, std::nullopt, Method::Sampled};
  const PlanePair plane = reduce_to_plane(x, y);
  const double ax = plane.x2[0], ay = plane.x2[1], bx = plane.y2[0], by = plane.y2[1];
  auto dx = [=](double c, double s) { return std::sqrt((ax - c) * (ax - c) + (ay - s) * (ay - s)); };
  auto dy = [=](double c, double s) { return std::sqrt((bx - c) * (bx - c) + (by - s) * (by - s)); };
  Minimum m{};
  if (metric == ExtremumMetric::Cassinian) {
    m = scan_and_refine([&](double c, double s) { return dx(c, s) * dy(c, s); }, grid, refine_iters);
  } else {
    m = scan_and_refine([&](double c, double s) { return dx(c, s) + dy(c, s); }, grid, refine_iters);
  }
  double value = distance(x, y) / m.value;
  if (metric == ExtremumMetric::TriangularRatio) value = std::min(value, 1.0);
  return {value, plane.lift(m.arg), Method::Sampled};
}

ProductBound cassinian_product_bound(const Point& x, const Point& y, std::size_t grid) {
  require_unit_ball_pair(x, y);
  if (grid < 16) throw std::invalid_argument("cassinian_product_bound: grid must have at least 16 points");
  const PlanePair plane = reduce_to_plane(x, y);
  const double ax = plane.x2[0], ay = plane.x2[1], bx = plane.y2[0], by = plane.y2[1];
  auto product = [=](double c, double s) {
    return std::sqrt((ax - c) * (ax - c) + (ay - s) * (ay - s)) * std::sqrt((bx - c) * (bx - c) + (by - s) * (by - s));
  };
  const double inf_product = scan_and_refine(product, grid, 100).value;
  const double half = 0.5 * distance(x, y);
  const double centered = 1.0 - half * half;
  const double eps = 1e-9;
  return {inf_product, centered, inf_product <= centered + eps && centered <= 1.0 + eps};
}

const std::vector<std::string>& probe_names() {
  static const std::vector<std::string> names{"two_sc", "lambda_j_chat", "lambda_j_c", "imsz_equality"};
  return names;
}

double sharpness_ratio(std::string_view name, double t) {
  if (!(t > 0.0 && t < 1.0)) throw std::domain_error("sharpness_ratio: parameter must lie in (0, 1)");
  const Point origin = Point::zero(2);
  if (name == "two_sc") {
    const Point x{t, 0.0};
    return cassinian_ball(x, -x).value / (2.0 * s_ball(x, -x).value);
  }
  if (name == "lambda_j_chat") {
    const Point x{t, 0.0};
    return j_ball(x, origin) / hat_c_ball(x, origin).value;
  }
  if (name == "lambda_j_c") {
    const Point x{t, 0.0};
    return j_ball(x, origin) / cassinian_ball(x, origin).value;
  }
  if (name == "imsz_equality") {
    const Point x{0.6 * t, 0.8 * t};
    return sh_half_rho(x, -x) / cassinian_ball(x, -x).value;
  }
  throw std::invalid_argument("unknown sharpness probe '" + std::string(name) + "'");
}

std::vector<ProbePoint> sharpness_probe(std::string_view name, std::size_t steps) {
  if (std::find(probe_names().begin(), probe_names().end(), name) == probe_names().end()) {
    throw std::invalid_argument("unknown sharpness probe '" + std::string(name) + "'");
  }
  if (steps < 2) throw std::invalid_argument("sharpness_probe: need at least 2 steps");
  std::vector<ProbePoint> out;
  out.reserve(steps);
  const double last = static_cast<double>(steps - 1);
  for (std::size_t k = 0; k < steps; ++k) {
    const double f = static_cast<double>(k) / last;
    const double t = name == "imsz_equality" ? 0.01 + 0.98 * f : 0.5 * std::pow(2e-4, f);
    out.push_back({t, sharpness_ratio(name, t)});
  }
  return out;
}

LambdaCounterexample lambda_counterexample(std::string_view name, double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw std::invalid_argument("lambda must lie in (0, 1)");
  const bool use_chat = name == "lambda_j_chat";
  if (!use_chat && name != "lambda_j_c") {
    throw std::invalid_argument("lambda_counterexample: expected lambda_j_chat or lambda_j_c");
  }
  const Point origin = Point::zero(2);
  double t = 0.5;
  for (int k = 0; k < 64; ++k, t *= 0.5) {
    const Point x{t, 0.0};
    const double j = j_ball(x, origin);
    const double rhs = lambda * (use_chat ? hat_c_ball(x, origin).value : cassinian_ball(x, origin).value);
    if (j > rhs) return {x, origin, j, rhs};
  }
  throw std::runtime_error("lambda_counterexample: no violating pair found");
}

}  // namespace cassini
