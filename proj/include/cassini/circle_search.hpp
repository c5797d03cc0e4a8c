#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

namespace cassini {

struct Minimum {
  double arg;
  double value;
};

/// Golden-section search for a minimum of a unimodal f on [lo, hi].
template <class F>
Minimum golden_section_minimize(F&& f, double lo, double hi, double tol, int max_iter = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iter && hi - lo > tol; ++it) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return fc <= fd ? Minimum{c, fc} : Minimum{d, fd};
}

/// Interleaved (cos, sin) pairs at the angles 2 pi k / n, cached per n.
std::span<const double> circle_table(std::size_t n);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double theta);

struct CircleSearchOptions {
  std::size_t scan_points = 4096;
  double angle_tol = 1e-12;
  std::size_t max_basins = 4;
  /// Values within this relative distance are ties; the smaller angle wins.
  double tie_rel = 1e-13;
};

/// Global minimum over the unit circle of f(cos t, sin t).
///
/// A coarse equispaced scan locates the basins; the best `max_basins` scan
/// minima plus the cells holding each seed angle are refined by golden-section
/// search over one scan cell on either side. Seeds cover minima that are
/// narrower than the scan spacing.
template <class F>
Minimum minimize_on_circle(F&& f, std::span<const double> seeds, const CircleSearchOptions& opt = {}) {
  const std::size_t n = std::max<std::size_t>(opt.scan_points, 8);
  const auto table = circle_table(n);
  std::vector<double> vals(n);
  for (std::size_t i = 0; i < n; ++i) vals[i] = f(table[2 * i], table[2 * i + 1]);

  std::vector<std::size_t> basins;
  for (std::size_t i = 0; i < n; ++i) {
    const double prev = vals[(i + n - 1) % n];
    const double next = vals[(i + 1) % n];
    if (vals[i] <= prev && vals[i] < next) basins.push_back(i);
  }
  if (basins.empty()) basins.push_back(static_cast<std::size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin()));
  std::stable_sort(basins.begin(), basins.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
  if (basins.size() > opt.max_basins) basins.resize(opt.max_basins);

  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  std::vector<double> centers;
  for (std::size_t i : basins) centers.push_back(step * static_cast<double>(i));
  for (double s : seeds) centers.push_back(s);

  auto along = [&](double t) { return f(std::cos(t), std::sin(t)); };
  Minimum best{0.0, std::numeric_limits<double>::infinity()};
  bool have = false;
  for (double c : centers) {
    Minimum m = golden_section_minimize(along, c - step, c + step, opt.angle_tol);
    m.arg = wrap_angle(m.arg);
    if (!have) {
      best = m;
      have = true;
      continue;
    }
    const double scale = std::max(std::abs(best.value), std::abs(m.value));
    const bool tie = std::abs(m.value - best.value) <= opt.tie_rel * scale;
    if ((tie && m.arg < best.arg) || (!tie && m.value < best.value)) best = m;
  }
  return best;
}

}  // namespace cassini
