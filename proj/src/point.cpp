#include "cassini/point.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cassini {

namespace {

void validate(const std::vector<double>& c) {
  if (c.size() < 2) {
    throw std::invalid_argument("point dimension must be at least 2, got " + std::to_string(c.size()));
  }
  for (double v : c) {
    if (!std::isfinite(v)) throw std::invalid_argument("point coordinates must be finite");
  }
}

}  // namespace

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) { validate(coords_); }

Point::Point(std::initializer_list<double> coords) : coords_(coords) { validate(coords_); }

Point Point::zero(std::size_t dim) { return Point(std::vector<double>(dim, 0.0)); }

Point Point::unit(std::size_t dim, std::size_t axis) {
  if (axis >= dim) throw std::invalid_argument("basis axis out of range");
  std::vector<double> c(dim, 0.0);
  c[axis] = 1.0;
  return Point(std::move(c));
}

double Point::norm2() const {
  double s = 0.0;
  for (double v : coords_) s += v * v;
  return s;
}

double Point::norm() const { return std::sqrt(norm2()); }

bool Point::is_zero() const {
  for (double v : coords_) {
    if (v != 0.0) return false;
  }
  return true;
}

Point& Point::operator+=(const Point& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Point& Point::operator-=(const Point& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Point& Point::operator*=(double s) {
  for (double& v : coords_) v *= s;
  return *this;
}

Point operator+(Point a, const Point& b) { return a += b; }
Point operator-(Point a, const Point& b) { return a -= b; }
Point operator-(Point a) { return a *= -1.0; }
Point operator*(double s, Point a) { return a *= s; }
Point operator*(Point a, double s) { return a *= s; }

double dot(const Point& a, const Point& b) {
  require_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

double distance(const Point& a, const Point& b) {
  require_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
  }
}

std::string to_string(const Point& p) {
  std::string out = "[";
  char buf[32];
  for (std::size_t i = 0; i < p.dim(); ++i) {
    std::snprintf(buf, sizeof buf, "%.15g", p[i]);
    if (i) out += ",";
    out += buf;
  }
  return out + "]";
}

}  // namespace cassini
