#include "cassini/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cassini {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPiSqOver4 = kPi * kPi / 4.0;
constexpr double kSeriesCutoff = 1e-8;

// mu(s) for s <= 1/sqrt(2), with s = e^u.
double mu_of_log(double u) {
  const double s = std::exp(u);
  return mu_complementary(s, std::sqrt((1.0 - s) * (1.0 + s)));
}

// Solves mu(s) = level for level >= pi/2, i.e. s in (0, 1/sqrt(2)].
double invert_lower_half(double level, double tol) {
  // log(1/s) < mu(s) < log(4/s) brackets log s in [-level, log 4 - level].
  double lo = -level;
  double hi = std::min(std::log(4.0) - level, -0.5 * std::log(2.0));
  if (lo < -740.0) throw std::range_error("mu_inverse: result underflows");
  lo = std::min(lo, hi);
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mu_of_log(mid) > level) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // Secant polish on g(u) = mu(e^u) - level.
  double u0 = lo, u1 = hi;
  double g0 = mu_of_log(u0) - level, g1 = mu_of_log(u1) - level;
  for (int k = 0; k < 2; ++k) {
    if (g1 == g0) break;
    const double u2 = u1 - g1 * (u1 - u0) / (g1 - g0);
    if (!(u2 >= lo - tol && u2 <= hi + tol)) break;
    u0 = u1;
    g0 = g1;
    u1 = u2;
    g1 = mu_of_log(u1) - level;
  }
  const double best = std::abs(g1) <= std::abs(g0) ? u1 : u0;
  return std::exp(best);
}

}  // namespace

void DistortionParams::validate() const {
  if (!(K >= 1.0) || !std::isfinite(K)) throw std::invalid_argument("distortion: K must be a finite number >= 1");
  if (!(tol > 0.0 && tol <= 1e-6)) throw std::invalid_argument("distortion: tol must lie in (0, 1e-6]");
}

double agm(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("agm: arguments must be positive");
  for (int i = 0; i < 64 && std::abs(a - b) > 1e-16 * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return 0.5 * (a + b);
}

double mu_complementary(double r, double r_complement) {
  if (!(r > 0.0) || !(r_complement > 0.0)) throw std::domain_error("mu: r must lie in (0, 1)");
  if (r < kSeriesCutoff) return std::log(4.0 / r);
  if (r_complement < kSeriesCutoff) return kPiSqOver4 / std::log(4.0 / r_complement);
  return 0.5 * kPi * agm(1.0, r_complement) / agm(1.0, r);
}

double mu(double r) {
  if (!(r > 0.0 && r < 1.0)) throw std::domain_error("mu: r must lie in (0, 1)");
  return mu_complementary(r, std::sqrt((1.0 - r) * (1.0 + r)));
}

ComplementaryPair mu_inverse(double level, double tol) {
  if (!(level > 0.0) || !std::isfinite(level)) throw std::domain_error("mu_inverse: level must be positive");
  if (level >= 0.5 * kPi) {
    const double s = invert_lower_half(level, tol);
    return {s, std::sqrt((1.0 - s) * (1.0 + s))};
  }
  // mu(s') = pi^2 / (4 mu(s)) puts the complement in the lower half.
  const double sc = invert_lower_half(kPiSqOver4 / level, tol);
  return {std::sqrt((1.0 - sc) * (1.0 + sc)), sc};
}

ComplementaryPair phi_K_pair(const DistortionParams& params, double r) {
  params.validate();
  if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("phi_K: r must lie in [0, 1]");
  if (r == 0.0 || r == 1.0 || params.K == 1.0) return {r, std::sqrt((1.0 - r) * (1.0 + r))};
  return mu_inverse(mu(r) / params.K, params.tol);
}

double phi_K(const DistortionParams& params, double r) { return phi_K_pair(params, r).value; }

double eta_K(const DistortionParams& params, double t) {
  params.validate();
  if (!(t >= 0.0) || !std::isfinite(t)) throw std::domain_error("eta_K: t must be a finite number >= 0");
  if (t == 0.0) return 0.0;
  if (params.K == 1.0) return t;
  const double u = std::sqrt(t / (1.0 + t));
  const double uc = std::sqrt(1.0 / (1.0 + t));
  const ComplementaryPair p = mu_inverse(mu_complementary(u, uc) / params.K, params.tol);
  if (!(p.complement > 0.0)) throw std::range_error("eta_K: phi_K saturates at 1");
  const double q = p.value / p.complement;
  const double eta = q * q;
  if (!std::isfinite(eta)) throw std::range_error("eta_K: value overflows");
  return eta;
}

double c_of_K(const DistortionParams& params) {
  params.validate();
  if (params.K == 1.0) return 1.0;
  const double th = std::tanh(0.5);
  const double th_c = 1.0 / std::cosh(0.5);
  const ComplementaryPair p = mu_inverse(mu_complementary(th, th_c) / params.K, params.tol);
  // 2 artanh(p) = log((1 + p)^2 / (1 - p^2)) = 2 log((1 + p) / p').
  return 2.0 * std::log((1.0 + p.value) / p.complement);
}

double phi_K_bound(const DistortionParams& params, double r) {
  params.validate();
  if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("phi_K_bound: r must lie in [0, 1]");
  return std::pow(4.0, 1.0 - 1.0 / params.K) * std::pow(r, 1.0 / params.K);
}

double eta_K_bound(const DistortionParams& params, double t) {
  params.validate();
  if (!(t >= 0.0)) throw std::domain_error("eta_K_bound: t must be >= 0");
  const double K = params.K;
  return std::exp(kPi * (K - 1.0 / K)) * std::max(std::pow(t, 1.0 / K), std::pow(t, K));
}

double c_of_K_bound(const DistortionParams& params) {
  params.validate();
  return 1.3507 * (params.K - 1.0) + params.K;
}

double casgrow_bound(const DistortionParams& params, double t) {
  params.validate();
  if (!(t >= 0.0)) throw std::domain_error("casgrow_bound: t must be >= 0");
  const double K = params.K;
  if (K == 1.0) return t;
  return std::exp(kPi * (K - 1.0 / K)) * std::max(std::pow(t, 1.0 / K), t);
}

double rho_growth_bound(const DistortionParams& params, double rho) {
  if (!(rho >= 0.0)) throw std::domain_error("rho_growth_bound: rho must be >= 0");
  return c_of_K(params) * std::max(rho, std::pow(rho, 1.0 / params.K));
}

bool verify_casgrow_against_eta(const DistortionParams& params, double t) {
  return eta_K(params, t) <= casgrow_bound(params, t);
}

GrowthChain casgrow_chain(const DistortionParams& params, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("casgrow_chain: r must lie in [0, 1)");
  const ComplementaryPair p = phi_K_pair(params, r);
  // 1 - phi = phi'^2 / (1 + phi).
  const double lhs = p.value * (1.0 + p.value) / (p.complement * p.complement);
  return {lhs, eta_K(params, r / (1.0 - r))};
}

}  // namespace cassini
