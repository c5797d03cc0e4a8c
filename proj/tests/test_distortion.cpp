#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <numbers>

#include "cassini/distortion.hpp"

using namespace cassini;
using doctest::Approx;

namespace {

// Closed forms for K = 2, used as independent oracles.
double phi2(double r) { return 2.0 * std::sqrt(r) / (1.0 + r); }
double eta2(double t) {
  const double r = std::sqrt(t / (1.0 + t));
  return 4.0 * r / ((1.0 - r) * (1.0 - r));
}

}  // namespace

TEST_SUITE("distortion") {
  TEST_CASE("parameters are validated") {
    CHECK_THROWS_AS((DistortionParams{0.5, 1e-12}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((DistortionParams{2.0, 0.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((DistortionParams{NAN, 1e-12}.validate()), std::invalid_argument);
    CHECK_NOTHROW((DistortionParams{1.0, 1e-12}.validate()));
  }

  TEST_CASE("agm and the Grotzsch modulus") {
    CHECK(agm(1.0, 1.0) == 1.0);
    // Gauss's constant 1/agm(1, sqrt 2).
    CHECK(1.0 / agm(1.0, std::sqrt(2.0)) == Approx(0.8346268416740731).epsilon(1e-15));
    CHECK(mu(1.0 / std::sqrt(2.0)) == Approx(std::numbers::pi / 2).epsilon(1e-14));
    CHECK(mu(0.1) * mu(std::sqrt(0.99)) == Approx(std::numbers::pi * std::numbers::pi / 4).epsilon(1e-13));
    // Small-r asymptotics mu(r) ~ log(4/r).
    CHECK(mu(1e-10) == Approx(std::log(4e10)).epsilon(1e-12));
    double prev = mu(0.0005);
    for (int k = 2; k < 1000; ++k) {
      const double v = mu(k / 1000.0 - 0.0005);
      CHECK(v < prev);
      prev = v;
    }
  }

  TEST_CASE("inverse modulus") {
    for (double r : {1e-6, 0.01, 0.3, 0.5, 0.9, 0.999999}) {
      const ComplementaryPair p = mu_inverse(mu(r));
      CHECK(p.value == Approx(r).epsilon(1e-11));
      CHECK(p.value * p.value + p.complement * p.complement == Approx(1.0).epsilon(1e-14));
    }
  }

  TEST_CASE("phi_K") {
    const DistortionParams k1{1.0, 1e-12}, k2{2.0, 1e-12};
    for (double r : {0.0, 0.1, 0.5, 0.9, 1.0}) CHECK(phi_K(k1, r) == Approx(r).epsilon(1e-13));
    CHECK(phi_K(k2, 0.25) == Approx(0.8).epsilon(1e-12));
    CHECK(phi_K(k2, 0.5) == Approx(phi2(0.5)).epsilon(1e-12));
    for (int i = 1; i < 200; ++i) {
      const double r = i / 200.0;
      CHECK(std::abs(phi_K(k2, r) - phi2(r)) <= 1e-10);
    }
    CHECK(phi_K(k2, 0.0) == 0.0);
    CHECK(phi_K(k2, 1.0) == 1.0);
    CHECK_THROWS_AS(phi_K(k2, 1.5), std::domain_error);
    // Monotone in r and K.
    const DistortionParams k3{3.0, 1e-12};
    for (double r : {0.01, 0.2, 0.6}) {
      CHECK(phi_K(k2, r) < phi_K(k3, r));
      CHECK(phi_K(k3, r) < phi_K(k3, r + 0.1));
      CHECK(phi_K(k3, r) <= phi_K_bound(k3, r));
    }
  }

  TEST_CASE("eta_K") {
    const DistortionParams k1{1.0, 1e-12}, k2{2.0, 1e-12};
    CHECK(eta_K(k1, 0.7) == Approx(0.7).epsilon(1e-12));
    CHECK(eta_K(k2, 1.0) == Approx(eta2(1.0)).epsilon(1e-10));
    CHECK(eta_K(k2, 1.0) == Approx(32.97).epsilon(1e-4));
    CHECK(eta_K(k2, 1.0) <= std::exp(1.5 * std::numbers::pi));
    for (double t : {0.01, 0.1, 2.0, 10.0, 100.0}) CHECK(eta_K(k2, t) == Approx(eta2(t)).epsilon(1e-9));
    CHECK(eta_K(k2, 0.0) == 0.0);
    CHECK_THROWS_AS(eta_K(k2, -1.0), std::domain_error);
  }

  TEST_CASE("c(K)") {
    CHECK(c_of_K({1.0, 1e-12}) == 1.0);
    const double oracle = 2.0 * std::atanh(phi2(std::tanh(0.5)));
    CHECK(c_of_K({2.0, 1e-12}) == Approx(oracle).epsilon(1e-11));
    CHECK(c_of_K({2.0, 1e-12}) <= 3.3507);
    for (double K : {1.1, 1.5, 2.0, 3.0, 5.0, 10.0}) {
      const DistortionParams p{K, 1e-12};
      CHECK(c_of_K(p) <= c_of_K_bound(p));
      CHECK(c_of_K_bound(p) == Approx(1.3507 * (K - 1.0) + K));
    }
  }

  TEST_CASE("growth bounds") {
    const DistortionParams k1{1.0, 1e-12}, k2{2.0, 1e-12};
    for (double t : {0.0, 0.3, 5.0}) CHECK(casgrow_bound(k1, t) == t);
    CHECK(casgrow_bound(k2, 0.25) == Approx(std::exp(1.5 * std::numbers::pi) * 0.5));
    CHECK(casgrow_bound(k2, 0.25) == Approx(55.66).epsilon(1e-4));
    CHECK(casgrow_bound(k2, 4.0) == Approx(445.27).epsilon(1e-4));
    CHECK(rho_growth_bound(k1, 0.7) == Approx(0.7));
    CHECK(rho_growth_bound(k2, 1.0) == Approx(c_of_K(k2)));
    CHECK(rho_growth_bound(k2, 0.01) == Approx(0.1 * c_of_K(k2)));
  }

  TEST_CASE("casgrow against eta") {
    const DistortionParams k2{2.0, 1e-12};
    CHECK(verify_casgrow_against_eta({1.0, 1e-12}, 0.8));
    CHECK(verify_casgrow_against_eta({1.5, 1e-12}, 1.0));
    for (double t : {0.01, 0.1, 0.5, 1.0, 2.0, 4.0}) CHECK(verify_casgrow_against_eta(k2, t));
    // With max(t^(1/K), t) the bound loses to eta_K for large t; with t^K it holds.
    CHECK(!verify_casgrow_against_eta(k2, 10.0));
    CHECK(eta_K(k2, 10.0) <= eta_K_bound(k2, 10.0));
  }

  TEST_CASE("growth chain") {
    for (double K : {1.0, 1.5, 2.0, 4.0}) {
      for (double r : {0.05, 0.3, 0.6, 0.9}) {
        const GrowthChain g = casgrow_chain({K, 1e-12}, r);
        CHECK(g.lhs <= g.rhs * (1.0 + 1e-12));
      }
    }
  }
}
