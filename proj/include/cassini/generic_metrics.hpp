#pragma once

#include "cassini/ball_metrics.hpp"
#include "cassini/domain.hpp"

namespace cassini {

struct SampleOptions {
  /// Polish the best sample by a compass search along the domain's boundary
  /// projector. Off by default so that both sides of an inequality see the
  /// same finite boundary.
  bool refine = false;
};

// Metrics over a DomainSpec. Unit-ball domains forward to the exact ball
// routines; sampled domains take extrema over the boundary samples, with ties
// going to the lowest sample index. Points outside the domain raise
// std::domain_error.

double j_generic(const DomainSpec& domain, const Point& x, const Point& y);
MetricValue cassinian_generic(const DomainSpec& domain, const Point& x, const Point& y,
                              const SampleOptions& opt = {});
MetricValue s_generic(const DomainSpec& domain, const Point& x, const Point& y, const SampleOptions& opt = {});

/// 2 / (sqrt(n / (2n + 2)) diam D), the constant k with c_D >= k s_D.
double jung_ratio_bound(const DomainSpec& domain);

}  // namespace cassini
