#include "cassini/generic_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cassini {

namespace {

struct SampleMin {
  std::size_t index;
  double value;
};

template <class F>
SampleMin min_over_samples(const DomainSpec& domain, F&& f) {
  const auto samples = domain.boundary_samples();
  SampleMin best{0, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double v = f(samples[i]);
    if (v < best.value) best = {i, v};
  }
  return best;
}

double nearest_other_spacing(const DomainSpec& domain, std::size_t idx) {
  const auto samples = domain.boundary_samples();
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (i != idx) d = std::min(d, distance(samples[i], samples[idx]));
  }
  return std::isfinite(d) && d > 0.0 ? d : 1e-3;
}

// Compass search on the boundary: coordinate steps, projected back.
template <class F>
std::pair<Point, double> compass_refine(const DomainSpec& domain, std::size_t start, F&& f) {
  const auto& project = domain.projector();
  Point z = domain.boundary_samples()[start];
  double fz = f(z);
  double step = 2.0 * nearest_other_spacing(domain, start);
  const double floor = 1e-13 * std::max(1.0, z.norm());
  for (int iter = 0; iter < 5000 && step > floor; ++iter) {
    bool moved = false;
    for (std::size_t k = 0; k < z.dim(); ++k) {
      for (double sign : {1.0, -1.0}) {
        Point cand = project(z + (sign * step) * Point::unit(z.dim(), k));
        const double fc = f(cand);
        if (fc < fz) {
          z = std::move(cand);
          fz = fc;
          moved = true;
        }
      }
    }
    if (!moved) step *= 0.5;
  }
  return {std::move(z), fz};
}

template <class F>
std::pair<Point, double> sampled_minimum(const DomainSpec& domain, const Point& x, const Point& y,
                                         const SampleOptions& opt, F&& f) {
  const SampleMin m = min_over_samples(domain, f);
  Point best = domain.boundary_samples()[m.index];
  double best_v = m.value;
  if (opt.refine && domain.projector()) {
    for (std::size_t start : {m.index, nearest_sample(domain, x), nearest_sample(domain, y)}) {
      auto [z, v] = compass_refine(domain, start, f);
      if (v < best_v) {
        best = std::move(z);
        best_v = v;
      }
    }
  }
  return {std::move(best), best_v};
}

void require_pair(const DomainSpec& domain, const Point& x, const Point& y) {
  require_in_domain(domain, x);
  require_in_domain(domain, y);
}

}  // namespace

double j_generic(const DomainSpec& domain, const Point& x, const Point& y) {
  require_pair(domain, x, y);
  if (domain.is_unit_ball()) return j_ball(x, y);
  const double d = std::min(boundary_distance(domain, x), boundary_distance(domain, y));
  return std::log1p(distance(x, y) / d);
}

MetricValue cassinian_generic(const DomainSpec& domain, const Point& x, const Point& y, const SampleOptions& opt) {
  require_pair(domain, x, y);
  if (domain.is_unit_ball()) return cassinian_ball(x, y);
  if (x == y) return {0.0, std::nullopt, Method::Sampled};
  auto product = [&](const Point& z) { return distance(x, z) * distance(z, y); };
  auto [z, p] = sampled_minimum(domain, x, y, opt, product);
  return {distance(x, y) / p, std::move(z), Method::Sampled};
}

MetricValue s_generic(const DomainSpec& domain, const Point& x, const Point& y, const SampleOptions& opt) {
  require_pair(domain, x, y);
  if (domain.is_unit_ball()) return s_ball(x, y);
  if (x == y) return {0.0, std::nullopt, Method::Sampled};
  auto focal_sum = [&](const Point& z) { return distance(x, z) + distance(z, y); };
  auto [z, sum] = sampled_minimum(domain, x, y, opt, focal_sum);
  return {std::clamp(distance(x, y) / sum, 0.0, 1.0), std::move(z), Method::Sampled};
}

double jung_ratio_bound(const DomainSpec& domain) {
  const double diam = domain_diameter(domain);
  if (!(diam > 0.0) || !std::isfinite(diam)) throw std::invalid_argument("jung_ratio_bound: domain diameter must be positive");
  const double n = static_cast<double>(domain.dim());
  return 2.0 / (std::sqrt(n / (2.0 * n + 2.0)) * diam);
}

}  // namespace cassini
