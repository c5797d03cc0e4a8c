#pragma once

namespace cassini {

/// Maximal dilatation K >= 1 and the tolerance for inverting the modulus.
struct DistortionParams {
  double K = 1.0;
  double tol = 1e-12;

  /// Throws std::invalid_argument unless K >= 1 and tol lies in (0, 1e-6].
  void validate() const;
};

/// Arithmetic-geometric mean of a, b > 0.
double agm(double a, double b);

/// Modulus of the Grotzsch ring, mu(r) = (pi/2) K(r') / K(r), r' = sqrt(1 - r^2).
/// Strictly decreasing from +inf to 0 on (0, 1). Throws std::domain_error outside.
double mu(double r);

/// mu evaluated from r and its complement r' given separately, so callers that
/// know r' to full relative precision do not lose it through 1 - r^2.
double mu_complementary(double r, double r_complement);

/// A value s in (0, 1) with its complement sqrt(1 - s^2), both to full relative precision.
struct ComplementaryPair {
  double value;
  double complement;
};

/// s with mu(s) = level, found by bracketing bisection in log s and two
/// secant polish steps. Throws std::range_error when s or its complement
/// underflows.
ComplementaryPair mu_inverse(double level, double tol = 1e-12);

/// Hersch-Pfluger distortion function phi_K(r) = mu^{-1}(mu(r) / K), r in [0, 1].
double phi_K(const DistortionParams& params, double r);
ComplementaryPair phi_K_pair(const DistortionParams& params, double r);

/// eta_K(t) = phi_K(u)^2 / (1 - phi_K(u)^2), u = sqrt(t / (1 + t)), t >= 0.
/// Throws std::range_error when 1 - phi_K(u)^2 underflows.
double eta_K(const DistortionParams& params, double t);

/// c(K) = 2 artanh(phi_K(th 1/2)); exactly 1 for K = 1.
double c_of_K(const DistortionParams& params);

// Closed-form upper bounds on the functions above.

/// 4^{1 - 1/K} r^{1/K}.
double phi_K_bound(const DistortionParams& params, double r);
/// e^{pi (K - 1/K)} max(t^{1/K}, t^K).
double eta_K_bound(const DistortionParams& params, double t);
/// 1.3507 (K - 1) + K.
double c_of_K_bound(const DistortionParams& params);

/// Growth bound for c(0, f(x)) in terms of t = c(0, x): e^{pi (K - 1/K)} max(t^{1/K}, t).
double casgrow_bound(const DistortionParams& params, double t);

/// Hyperbolic growth bound c(K) max(rho, rho^{1/K}).
double rho_growth_bound(const DistortionParams& params, double rho);

/// True when eta_K(t) <= casgrow_bound(K, t).
bool verify_casgrow_against_eta(const DistortionParams& params, double t);

/// The two ends of phi_K(r)/(1 - phi_K(r)) <= eta_K(r/(1 - r)), r in [0, 1).
struct GrowthChain {
  double lhs;
  double rhs;
};
GrowthChain casgrow_chain(const DistortionParams& params, double r);

}  // namespace cassini
