#include "cassini/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace cassini {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

Json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  // The shortest round-trip form of the 15-digit value is what gets printed.
  return std::strtod(format_number(v).c_str(), nullptr);
}

Json to_json(const Point& p) {
  Json arr = Json::array();
  for (double c : p.coords()) arr.push_back(json_number(c));
  return arr;
}

Json to_json(const MetricValue& v) {
  Json j;
  j["value"] = json_number(v.value);
  j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  j["method"] = std::string(to_string(v.method));
  return j;
}

Json to_json(const PlanePair& p) {
  Json j;
  j["x2"] = to_json(p.x2);
  j["y2"] = to_json(p.y2);
  j["omega"] = json_number(p.omega);
  j["degenerate"] = p.degenerate;
  return j;
}

Json to_json(const SharpConstants& c) {
  Json j;
  j["alpha"] = json_number(c.alpha);
  j["a"] = json_number(c.a);
  j["residual"] = json_number(c.residual);
  return j;
}

Json to_json(const InequalityReport& r) {
  Json j;
  j["name"] = r.name;
  j["n"] = r.dim;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["tolerance"] = json_number(r.tolerance);
  j["violations"] = r.violations;
  j["worst_margin"] = json_number(r.worst_margin);
  j["max_ratio"] = json_number(r.max_ratio);
  j["extremal_pair"] = r.extremal_pair ? Json::array({to_json(r.extremal_pair->first), to_json(r.extremal_pair->second)})
                                       : Json(nullptr);
  j["oracle_max_diff"] = r.oracle_max_diff ? json_number(*r.oracle_max_diff) : Json(nullptr);
  return j;
}

}  // namespace cassini
