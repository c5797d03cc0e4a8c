#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "cassini/analysis.hpp"
#include "cassini/ball_metrics.hpp"

using namespace cassini;
using doctest::Approx;

namespace {

void check_strict_monotone(AuxFunction fn, double lo, double hi, std::optional<double> aux, bool increasing) {
  const int n = 1000;
  double prev = lemma21_eval(fn, lo + (hi - lo) / (n + 1), aux);
  for (int k = 2; k <= n; ++k) {
    const double v = lemma21_eval(fn, lo + (hi - lo) * k / (n + 1), aux);
    CHECK((increasing ? v > prev : v < prev));
    prev = v;
  }
}

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("m function") {
    CHECK(m_function(0.5) == Approx(std::log(3.0) / std::log(7.0 / 3.0)).epsilon(1e-14));
    CHECK(m_function(0.5) == Approx(1.29660694311922).epsilon(1e-13));
    CHECK(m_function(0.0) == 1.0);
    CHECK(m_function(1.0) == 1.0);
    CHECK(m_function(1e-9) == Approx(1.0).epsilon(1e-8));
    CHECK_THROWS_AS(m_function(1.5), std::domain_error);
  }

  TEST_CASE("sharp constant") {
    const SharpConstants c = solve_alpha();
    CHECK(c.alpha == Approx(0.656430769743792).epsilon(1e-12));
    CHECK(c.a == Approx(1.31522706078344).epsilon(1e-12));
    CHECK(std::abs(c.residual) <= 1e-12);
    CHECK(c.a == m_function(c.alpha));
    // alpha is the argmax of m.
    const int n = 100000;
    double best = 0.0, arg = 0.0;
    for (int k = 1; k < n; ++k) {
      const double t = 1e-6 + (1.0 - 2e-6) * k / n;
      const double v = m_function(t);
      if (v > best) best = v, arg = t;
    }
    CHECK(best <= c.a * (1.0 + 1e-15));
    CHECK(arg == Approx(c.alpha).epsilon(1e-4));
    CHECK(alpha_equation(0.1) < 0.0);
    CHECK(alpha_equation(0.9) > 0.0);
  }

  TEST_CASE("a log(1+t) <= 4 arth(t/2)") {
    const double a = solve_alpha().a;
    for (int k = 1; k < 10000; ++k) {
      const double t = 2.0 * k / 10000.0;
      CHECK(a * std::log1p(t) <= 4.0 * std::atanh(t / 2.0));
    }
  }

  TEST_CASE("auxiliary functions") {
    CHECK(lemma21_eval(AuxFunction::F, 1.0) == Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(lemma21_eval(AuxFunction::H, 1e-6) == Approx(1.0).epsilon(1e-5));
    CHECK(lemma21_eval(AuxFunction::G, 2.0, 3.0) == Approx(std::log(6.0) / 2.5).epsilon(1e-14));
    // Removable singularity of g at x = 1/a.
    CHECK(lemma21_eval(AuxFunction::G, 0.5, 2.0) == Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(lemma21_eval(AuxFunction::F, -1.0), std::domain_error);
    CHECK_THROWS_AS(lemma21_eval(AuxFunction::H, 1.0), std::domain_error);
    CHECK_THROWS_AS(lemma21_eval(AuxFunction::G, 1.0), std::domain_error);
    CHECK_THROWS_AS(lemma21_eval(AuxFunction::FB, 1.0, 1.5), std::domain_error);
    CHECK(parse_aux_function("fb") == AuxFunction::FB);
    CHECK(!parse_aux_function("q"));
  }

  TEST_CASE("auxiliary functions are strictly monotone") {
    check_strict_monotone(AuxFunction::F, 0.0, 10.0, std::nullopt, false);
    for (double a : {0.5, 1.0, 3.0}) check_strict_monotone(AuxFunction::G, 0.0, 10.0, a, true);
    check_strict_monotone(AuxFunction::H, 0.0, 1.0, std::nullopt, false);
    for (double x : {0.1, 0.5, 0.9}) check_strict_monotone(AuxFunction::FB, 0.0, 2.0, x, true);
  }

  TEST_CASE("brute-force oracle") {
    const MetricValue c = brute_force_extremum(ExtremumMetric::Cassinian, Point{0.5, 0.0}, Point{-0.5, 0.0}, 10000);
    CHECK(c.value == Approx(4.0 / 3.0).epsilon(1e-12));
    CHECK(c.method == Method::Sampled);
    CHECK(brute_force_extremum(ExtremumMetric::TriangularRatio, Point{0.1, 0.2}, Point{0.1, 0.2}, 100).value == 0.0);
    CHECK_THROWS_AS(brute_force_extremum(ExtremumMetric::Cassinian, Point{0.1, 0.0}, Point{0.0, 0.0}, 8),
                    std::invalid_argument);
  }

  TEST_CASE("Cassinian product bound") {
    const ProductBound b = cassinian_product_bound(Point{0.5, 0.0}, Point{-0.5, 0.0});
    CHECK(b.inf_product == Approx(0.75).epsilon(1e-9));
    CHECK(b.centered_value == Approx(0.75).epsilon(1e-15));
    CHECK(b.bound_holds);
    const ProductBound same = cassinian_product_bound(Point{0.3, 0.1}, Point{0.3, 0.1});
    CHECK(same.centered_value == 1.0);
    CHECK(same.bound_holds);
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-0.7, 0.7);
    for (int k = 0; k < 200; ++k) {
      const Point x{u(rng), u(rng)}, y{u(rng), u(rng)};
      CHECK(cassinian_product_bound(x, y, 4096).bound_holds);
    }
  }

  TEST_CASE("sharpness probes") {
    CHECK(sharpness_ratio("two_sc", 1e-4) - 1.0 == Approx(1e-8).epsilon(1e-4));
    CHECK(sharpness_ratio("lambda_j_c", 0.01) == Approx(0.995).epsilon(1e-4));
    CHECK(sharpness_ratio("lambda_j_chat", 0.01) == Approx(0.995).epsilon(1e-4));
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.001, 0.999);
    for (int k = 0; k < 100; ++k) CHECK(std::abs(sharpness_ratio("imsz_equality", u(rng)) - 1.0) < 1e-12);
    CHECK_THROWS_AS(sharpness_ratio("nope", 0.5), std::invalid_argument);
    const auto probe = sharpness_probe("two_sc", 10);
    REQUIRE(probe.size() == 10);
    CHECK(probe.front().parameter == Approx(0.5));
    CHECK(probe.back().parameter == Approx(1e-4));
    for (std::size_t i = 1; i < probe.size(); ++i) CHECK(probe[i].ratio < probe[i - 1].ratio);
    CHECK(probe_names().size() == 4);
  }

  TEST_CASE("lambda counterexamples") {
    for (double lambda : {0.9, 0.99, 0.999}) {
      for (const char* name : {"lambda_j_chat", "lambda_j_c"}) {
        const LambdaCounterexample ce = lambda_counterexample(name, lambda);
        CHECK(ce.j > ce.scaled_rhs);
        const double chat = hat_c_ball(ce.x, ce.y).value;
        const double c = cassinian_ball(ce.x, ce.y).value;
        CHECK(j_ball(ce.x, ce.y) > lambda * (std::string(name) == "lambda_j_c" ? c : chat));
      }
    }
    CHECK_THROWS_AS(lambda_counterexample("lambda_j_c", 1.0), std::invalid_argument);
  }
}
