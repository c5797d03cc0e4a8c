#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "cassini/ball_metrics.hpp"
#include "cassini/generic_metrics.hpp"

using namespace cassini;
using doctest::Approx;

TEST_SUITE("generic_metrics") {
  TEST_CASE("unit ball forwards to the exact metrics") {
    const DomainSpec b = DomainSpec::unit_ball(2);
    const Point x{0.3, -0.2}, y{-0.5, 0.4};
    CHECK(j_generic(b, x, y) == j_ball(x, y));
    CHECK(cassinian_generic(b, x, y).value == cassinian_ball(x, y).value);
    CHECK(s_generic(b, x, y).value == s_ball(x, y).value);
    CHECK(j_generic(b, x, x) == 0.0);
  }

  TEST_CASE("square domain") {
    const DomainSpec sq = square_domain(Point{0.0, 0.0}, 1.0, 4000);
    CHECK(j_generic(sq, Point{0.0, 0.0}, Point{0.5, 0.0}) == Approx(std::log(2.0)).epsilon(1e-9));
    CHECK(cassinian_generic(sq, Point{0.2, 0.1}, Point{0.2, 0.1}).value == 0.0);
    CHECK(s_generic(sq, Point{0.2, 0.1}, Point{0.2, 0.1}).value == 0.0);
    const MetricValue c = cassinian_generic(sq, Point{0.5, 0.0}, Point{-0.5, 0.0});
    CHECK(c.method == Method::Sampled);
    // The supremum is attained at the edge midpoints (+-1, 0).
    CHECK(c.value == Approx(1.0 / (0.5 * 1.5)).epsilon(1e-12));
    CHECK_THROWS_AS(j_generic(sq, Point{1.5, 0.0}, Point{0.0, 0.0}), std::domain_error);
  }

  TEST_CASE("dense sampling of the unit circle reproduces the ball metrics") {
    const DomainSpec disk = circle_domain(Point{0.0, 0.0}, 1.0, 100000);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-0.7, 0.7);
    for (int k = 0; k < 20; ++k) {
      const Point x{u(rng), u(rng)}, y{u(rng), u(rng)};
      CHECK(cassinian_generic(disk, x, y).value == Approx(cassinian_ball(x, y).value).epsilon(1e-4));
      CHECK(s_generic(disk, x, y).value == Approx(s_ball(x, y).value).epsilon(1e-4));
      CHECK(j_generic(disk, x, y) == Approx(j_ball(x, y)).epsilon(1e-4));
    }
  }

  TEST_CASE("refinement along a projector closes the sampling gap") {
    const DomainSpec coarse = circle_domain(Point{0.0, 0.0}, 1.0, 64);
    const Point x{0.6, 0.1}, y{0.2, -0.5};
    const double exact = cassinian_ball(x, y).value;
    const double plain = cassinian_generic(coarse, x, y).value;
    const double refined = cassinian_generic(coarse, x, y, {true}).value;
    CHECK(plain <= exact * (1.0 + 1e-12));
    CHECK(std::abs(refined - exact) < std::abs(plain - exact));
    CHECK(refined == Approx(exact).epsilon(1e-9));
    CHECK(s_generic(coarse, x, y, {true}).value == Approx(s_ball(x, y).value).epsilon(1e-9));
  }

  TEST_CASE("sampled extrema never exceed the exact ball values") {
    const DomainSpec disk = circle_domain(Point{0.0, 0.0}, 1.0, 500);
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-0.7, 0.7);
    for (int k = 0; k < 100; ++k) {
      const Point x{u(rng), u(rng)}, y{u(rng), u(rng)};
      CHECK(cassinian_generic(disk, x, y).value <= cassinian_ball(x, y).value * (1.0 + 1e-12));
      CHECK(s_generic(disk, x, y).value <= s_ball(x, y).value * (1.0 + 1e-12));
    }
  }

  TEST_CASE("Jung bound") {
    CHECK(jung_ratio_bound(DomainSpec::unit_ball(2)) == Approx(std::sqrt(3.0)).epsilon(1e-14));
    CHECK(jung_ratio_bound(sphere_domain(Point{0.0, 0.0, 0.0}, 0.5, 50)) ==
          Approx(2.0 / std::sqrt(3.0 / 8.0)).epsilon(1e-12));
  }
}
