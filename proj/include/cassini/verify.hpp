#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cassini/domain.hpp"
#include "cassini/point.hpp"

namespace cassini {

/// Where the pairs of a registered inequality are drawn from.
enum class PairRegion {
  UnitBall,            // uniform in B^n
  Subdomain,           // uniform in a fixed sampled subdomain of B^n
  SymmetricSubdomain,  // (x, -x) with both points in the subdomain
};

struct InequalityInfo {
  std::string name;
  std::string statement;
  PairRegion region;
};

/// All registered inequalities, in a fixed order.
const std::vector<InequalityInfo>& registered_inequalities();
const InequalityInfo* find_inequality(const std::string& name);

/// Default violation tolerance: 1e-9 for exact ball metrics, 1e-6 when a side is sampled.
double default_tolerance(PairRegion region);

/// Outcome of a randomized verification run.
///
/// Each check compares lhs <= rhs through the relative slack
/// (rhs - lhs) / max(1, |rhs|); a pair is a violation when that slack is below
/// -tolerance. worst_margin is the smallest slack seen and max_ratio the
/// largest lhs / rhs, attained at extremal_pair.
struct InequalityReport {
  std::string name;
  std::size_t dim = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::size_t violations = 0;
  double worst_margin = 0.0;
  double max_ratio = 0.0;
  std::optional<std::pair<Point, Point>> extremal_pair;
  /// Largest relative gap between the fast c / s evaluations and the
  /// brute-force oracle on the extremal and worst-margin pairs (ball
  /// inequalities involving c or s only).
  std::optional<double> oracle_max_diff;
};

struct VerifyOptions {
  std::size_t dim = 2;
  std::size_t samples = 10'000;
  std::uint64_t seed = 1;
  std::optional<double> tolerance;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned workers = 0;
};

/// Throws std::invalid_argument for unknown names or dim < 2.
InequalityReport verify_inequality(const std::string& name, const VerifyOptions& opt);

/// Runs several inequalities sharing one metric evaluation per pair. Each
/// report is identical to what verify_inequality gives for that name.
std::vector<InequalityReport> verify_suite(std::span<const std::string> names, const VerifyOptions& opt);

/// Counter-based stream: the generator for sample `index` depends only on (seed, index).
std::mt19937_64 sample_engine(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0, 1) with 53 random bits.
double uniform01(std::mt19937_64& rng);

/// Uniform point of B^n by rejection from the cube [-1, 1]^n.
Point uniform_in_ball(std::size_t dim, std::mt19937_64& rng);

/// The sampled subdomain of B^n used by the subdomain inequalities: an
/// ellipse centred at (0.1, 0.05) with semi-axes 0.7 and 0.45 for n = 2, the
/// ball of radius 0.7 about 0.15 e1 otherwise.
const DomainSpec& verification_subdomain(std::size_t dim);

/// The pair a run with this region, dimension and seed draws at `index`.
std::pair<Point, Point> sample_pair(PairRegion region, std::size_t dim, std::uint64_t seed, std::uint64_t index);

}  // namespace cassini
