#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <numbers>
#include <random>

#include "cassini/circle_search.hpp"
#include "cassini/geometry.hpp"
#include "cassini/point.hpp"

using namespace cassini;
using doctest::Approx;

TEST_SUITE("geometry") {
  TEST_CASE("point construction rejects bad input") {
    CHECK_THROWS_AS(Point({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(Point({0.0, NAN}), std::invalid_argument);
    CHECK_THROWS_AS(Point({0.0, INFINITY}), std::invalid_argument);
    CHECK_THROWS_AS(require_same_dim(Point{0.0, 0.0}, Point{0.0, 0.0, 0.0}), std::invalid_argument);
    const Point p{3.0, 4.0};
    CHECK(p.norm() == 5.0);
    CHECK(p.dim() == 2);
    CHECK(Point::unit(3, 2) == Point{0.0, 0.0, 1.0});
    CHECK(Point::zero(2).is_zero());
    CHECK(to_string(Point{0.5, -1.0}) == "[0.5,-1]");
  }

  TEST_CASE("distance is computed from differences") {
    const Point a{1.0 - 1e-12, 0.0};
    const Point b{1.0, 0.0};
    CHECK(distance(a, b) == Approx(1e-12).epsilon(1e-3));
    CHECK(dot(Point{1.0, 2.0}, Point{3.0, -1.0}) == 1.0);
  }

  TEST_CASE("angle_between") {
    CHECK(angle_between(Point{1.0, 0.0}, Point{0.0, 2.0}) == Approx(std::numbers::pi / 2));
    CHECK(angle_between(Point{1.0, 0.0}, Point{-1.0, 0.0}) == Approx(std::numbers::pi));
    CHECK(angle_between(Point{1.0, 1.0}, Point{2.0, 2.0}) == Approx(0.0));
    // Nearly parallel vectors keep their angle, where arccos would round to 0.
    CHECK(angle_between(Point{1.0, 0.0}, Point{1.0, 1e-10}) == Approx(1e-10).epsilon(1e-6));
    CHECK_THROWS_AS(angle_between(Point{0.0, 0.0}, Point{1.0, 0.0}), std::domain_error);
  }

  TEST_CASE("plane reduction preserves norms and angle") {
    std::mt19937_64 rng(42);
    std::normal_distribution<double> g;
    for (int k = 0; k < 200; ++k) {
      const std::size_t dim = 2 + k % 4;
      std::vector<double> a(dim), b(dim);
      for (auto& v : a) v = 0.3 * g(rng);
      for (auto& v : b) v = 0.3 * g(rng);
      const Point x(a), y(b);
      const PlanePair pp = reduce_to_plane(x, y);
      CHECK(pp.x2.norm() == Approx(x.norm()).epsilon(1e-14));
      CHECK(pp.y2.norm() == Approx(y.norm()).epsilon(1e-14));
      CHECK(distance(pp.x2, pp.y2) == Approx(distance(x, y)).epsilon(1e-12));
      CHECK(pp.omega >= 0.0);
      CHECK(pp.omega <= std::numbers::pi);
      CHECK(std::abs(dot(pp.e1, pp.e2)) < 1e-14);
      CHECK(pp.e1.norm() == Approx(1.0));
      CHECK(pp.e2.norm() == Approx(1.0));
      // Lifting preserves distances to every circle point.
      for (double t : {0.0, 0.7, 2.0, -2.5}) {
        const Point w2{std::cos(t), std::sin(t)};
        const Point w = pp.lift(t);
        CHECK(distance(x, w) == Approx(distance(pp.x2, w2)).epsilon(1e-12));
        CHECK(distance(y, w) == Approx(distance(pp.y2, w2)).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("plane reduction edge cases") {
    const PlanePair zero = reduce_to_plane(Point{0.0, 0.0, 0.0}, Point{0.0, 0.0, 0.0});
    CHECK(zero.degenerate);
    const PlanePair at_origin = reduce_to_plane(Point{0.0, 0.0}, Point{0.0, 0.5});
    CHECK(!at_origin.degenerate);
    CHECK(at_origin.y2 == Point{0.5, 0.0});
    CHECK(at_origin.omega == 0.0);
    const PlanePair parallel = reduce_to_plane(Point{0.2, 0.2, 0.0}, Point{0.4, 0.4, 0.0});
    CHECK(parallel.omega == Approx(0.0));
    CHECK(std::abs(dot(parallel.e1, parallel.e2)) < 1e-15);
  }

  TEST_CASE("golden section and circle search") {
    const Minimum m = golden_section_minimize([](double t) { return (t - 0.3) * (t - 0.3); }, 0.0, 1.0, 1e-12);
    CHECK(m.arg == Approx(0.3).epsilon(1e-9));
    CHECK(wrap_angle(3.0 * std::numbers::pi) == Approx(std::numbers::pi));
    CHECK(wrap_angle(-std::numbers::pi) == Approx(std::numbers::pi));
    const double seeds[] = {0.0};
    const Minimum c = minimize_on_circle([](double cs, double sn) { return cs * 0.2 + sn * 0.5; }, seeds);
    CHECK(c.value == Approx(-std::hypot(0.2, 0.5)).epsilon(1e-14));
    CHECK(c.arg == Approx(std::atan2(-0.5, -0.2)).epsilon(1e-7));
  }
}
