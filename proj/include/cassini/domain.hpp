#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cassini/point.hpp"

namespace cassini {

/// Either the open unit ball B^n or a bounded domain described by a finite
/// cloud of boundary samples plus a membership predicate.
///
/// Sampled domains may carry a boundary projector, a map sending a point near
/// the boundary onto the boundary. It is used for local refinement of sampled
/// extrema; domains loaded from files have none.
class DomainSpec {
 public:
  using Predicate = std::function<bool(const Point&)>;
  using Projector = std::function<Point(const Point&)>;

  static DomainSpec unit_ball(std::size_t dim);

  /// Throws std::invalid_argument when the samples are empty, of mixed
  /// dimension, contained in the domain, or wider than diameter_hint.
  static DomainSpec sampled(std::vector<Point> boundary, Predicate contains,
                            std::optional<double> diameter_hint = std::nullopt,
                            Projector projector = nullptr);

  bool is_unit_ball() const { return unit_ball_; }
  std::size_t dim() const { return dim_; }
  bool contains(const Point& x) const;
  std::span<const Point> boundary_samples() const { return samples_; }
  std::optional<double> diameter_hint() const { return diameter_hint_; }
  const Projector& projector() const { return projector_; }

 private:
  DomainSpec() = default;

  bool unit_ball_ = false;
  std::size_t dim_ = 0;
  std::vector<Point> samples_;
  Predicate contains_;
  std::optional<double> diameter_hint_;
  Projector projector_;
};

/// d(x, boundary). Exactly 1 - |x| on the unit ball; minimum sample distance otherwise.
/// Throws std::domain_error when x is not in the domain.
double boundary_distance(const DomainSpec& domain, const Point& x);

/// Index of the boundary sample nearest to x (lowest index on ties).
std::size_t nearest_sample(const DomainSpec& domain, const Point& x);

/// Diameter: the hint when present, 2 for the unit ball, else the maximum
/// pairwise sample distance.
double domain_diameter(const DomainSpec& domain);

void require_in_domain(const DomainSpec& domain, const Point& x);

// Built-in sample clouds. `count` is the total number of boundary samples.
DomainSpec circle_domain(const Point& center, double radius, std::size_t count);
DomainSpec ellipse_domain(const Point& center, double semi_x, double semi_y, std::size_t count);
/// Axis-aligned square [c - h, c + h]^2, samples spread evenly over the four edges.
DomainSpec square_domain(const Point& center, double half_side, std::size_t count);
/// {r_in < |p - c| < r_out}; half of the samples on each circle.
DomainSpec annulus_domain(const Point& center, double r_in, double r_out, std::size_t count);
/// Ball of any dimension with quasi-uniform sphere samples (Fibonacci lattice
/// in 3-D, equispaced in 2-D, seeded Gaussian directions otherwise).
DomainSpec sphere_domain(const Point& center, double radius, std::size_t count);

/// Quasi-uniform points on the unit sphere S^{n-1}.
std::vector<Point> sphere_points(std::size_t dim, std::size_t count);

/// Boundary CSV: header row `x1,...,xn`, then one point per row.
///
/// 2-D clouds are read as a closed polygon in row order and use an even-odd
/// membership test; in higher dimensions membership is the open bounding box
/// minus the sample points themselves.
DomainSpec parse_boundary_csv(std::istream& in);
DomainSpec load_boundary_csv(const std::string& path);

}  // namespace cassini
