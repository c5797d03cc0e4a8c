#pragma once

#include <string>

#include <json.hpp>

#include "cassini/analysis.hpp"
#include "cassini/ball_metrics.hpp"
#include "cassini/geometry.hpp"
#include "cassini/verify.hpp"

namespace cassini {

using Json = nlohmann::ordered_json;

/// Decimal text with 15 significant digits.
std::string format_number(double v);

/// v rounded to 15 significant digits; null when v is not finite.
Json json_number(double v);

Json to_json(const Point& p);
Json to_json(const MetricValue& v);
Json to_json(const PlanePair& p);
Json to_json(const SharpConstants& c);

/// {name, n, samples, seed, tolerance, violations, worst_margin, max_ratio,
///  extremal_pair, oracle_max_diff}
Json to_json(const InequalityReport& r);

}  // namespace cassini
