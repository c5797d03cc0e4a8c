#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cassini {

/// A point of R^n, n >= 2, with finite coordinates.
class Point {
 public:
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  static Point zero(std::size_t dim);
  /// Standard basis vector e_axis.
  static Point unit(std::size_t dim, std::size_t axis);

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }

  double norm2() const;
  double norm() const;
  bool is_zero() const;

  Point& operator+=(const Point& other);
  Point& operator-=(const Point& other);
  Point& operator*=(double s);

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

Point operator+(Point a, const Point& b);
Point operator-(Point a, const Point& b);
Point operator-(Point a);
Point operator*(double s, Point a);
Point operator*(Point a, double s);

double dot(const Point& a, const Point& b);
/// |a - b| computed from coordinate differences (no cancellation through |a|^2 + |b|^2).
double distance(const Point& a, const Point& b);

/// Throws std::invalid_argument when the dimensions differ.
void require_same_dim(const Point& a, const Point& b);

std::string to_string(const Point& p);

}  // namespace cassini
