#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cassini/ball_metrics.hpp"

namespace cassini {

// ---------------------------------------------------------------------------
// Sharp constant of j <= a log(1 + c)

/// m(t) = log((1+t)/(1-t)) / log((1+2t-t^2)/(1-t^2)) on [0, 1], with the
/// limit value 1 at both endpoints.
double m_function(double t);

/// (1+t^2) log((1+t)/(1-t)) + (t^2-2t-1) log((1+2t-t^2)/(1-t^2)); its root
/// in (0, 1) is the maximizer of m.
double alpha_equation(double t);

struct SharpConstants {
  double alpha;
  double a;         // m(alpha)
  double residual;  // alpha_equation(alpha)
};

/// Bisection on [0.1, 0.9] to machine precision plus a secant polish.
SharpConstants solve_alpha();

// ---------------------------------------------------------------------------
// Auxiliary monotone functions

enum class AuxFunction {
  F,   // log(1+x)/x on (0, inf), decreasing
  G,   // log(a x)/(a - 1/x) on (0, inf), a > 0, increasing
  H,   // log((1+x)/(1-x)) / (1/(1-x) - 1/(1+x)) on (0, 1), decreasing
  FB,  // log(1 + b/(1-x)) / log(1 + b/((1-x)(b+1-x))) on b in (0, 2), x in (0, 1), increasing
};

std::optional<AuxFunction> parse_aux_function(std::string_view name);

/// Evaluates the selected function at arg; aux is a for G and x for FB.
/// Throws std::domain_error outside the stated domains.
double lemma21_eval(AuxFunction which, double arg, std::optional<double> aux = std::nullopt);

// ---------------------------------------------------------------------------
// Brute-force oracles

enum class ExtremumMetric { Cassinian, TriangularRatio };

/// Dense equispaced scan of the circle through span{x, y} followed by
/// golden-section refinement over the best cell. Independent of the fast
/// search used by cassinian_ball and s_ball. Throws std::invalid_argument for
/// grid < 16.
MetricValue brute_force_extremum(ExtremumMetric metric, const Point& x, const Point& y,
                                 std::size_t grid = 1'000'000, int refine_iters = 100);

struct ProductBound {
  double inf_product;     // min over the sphere of |x-w||w-y|
  double centered_value;  // 1 - (|x-y|/2)^2, attained by the centered pair
  bool bound_holds;       // inf_product <= centered_value <= 1
};

ProductBound cassinian_product_bound(const Point& x, const Point& y, std::size_t grid = 100'000);

// ---------------------------------------------------------------------------
// Sharpness probes

struct ProbePoint {
  double parameter;
  double ratio;
};

/// Names: two_sc, lambda_j_chat, lambda_j_c, imsz_equality.
const std::vector<std::string>& probe_names();

/// Ratio along the extremal family at parameter t in (0, 1):
///   two_sc         c(x,-x) / (2 s(x,-x)),  x = t e1
///   lambda_j_chat  j(x,0) / chat(x,0),     x = t e1
///   lambda_j_c     j(x,0) / c(x,0),        x = t e1
///   imsz_equality  sh(rho(x,-x)/2) / c(x,-x), x = t (0.6, 0.8)
double sharpness_ratio(std::string_view name, double t);

/// `steps` parameters: geometric from 0.5 down to 1e-4 for the limit
/// families, linear on [0.01, 0.99] for imsz_equality.
std::vector<ProbePoint> sharpness_probe(std::string_view name, std::size_t steps);

struct LambdaCounterexample {
  Point x;
  Point y;
  double j;
  double scaled_rhs;  // lambda * chat or lambda * c
};

/// A concrete pair (t e1, 0) with j > lambda * chat (or lambda * c), found by
/// halving t from 1/2. Throws std::invalid_argument unless lambda is in (0, 1).
LambdaCounterexample lambda_counterexample(std::string_view name, double lambda);

}  // namespace cassini
