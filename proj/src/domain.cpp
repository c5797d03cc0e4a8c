#include "cassini/domain.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cassini {

namespace {

constexpr double kBoundaryEps = 1e-12;
constexpr std::size_t kExactDiameterLimit = 4096;

double max_pairwise_distance(std::span<const Point> pts) {
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, distance(pts[i], pts[j]));
  }
  return best;
}

// Two farthest-point sweeps; a lower bound on the diameter in O(m).
double diameter_lower_bound(std::span<const Point> pts) {
  auto farthest = [&](const Point& from) {
    std::size_t idx = 0;
    double d = -1.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const double di = distance(from, pts[i]);
      if (di > d) {
        d = di;
        idx = i;
      }
    }
    return std::pair{idx, d};
  };
  const auto [a, da] = farthest(pts.front());
  const auto [b, db] = farthest(pts[a]);
  (void)b;
  return std::max(da, db);
}

Point planar(const Point& c, double u, double v) { return Point{c[0] + u, c[1] + v}; }

void require_planar(const Point& center, const char* what) {
  if (center.dim() != 2) throw std::invalid_argument(std::string(what) + ": center must be 2-D");
}

double parse_double(std::string_view tok) {
  while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
  while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw std::invalid_argument("boundary csv: cannot parse number '" + std::string(tok) + "'");
  }
  return v;
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
  const double ux = b[0] - a[0], uy = b[1] - a[1];
  const double len2 = ux * ux + uy * uy;
  double t = len2 > 0.0 ? ((p[0] - a[0]) * ux + (p[1] - a[1]) * uy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const double dx = p[0] - (a[0] + t * ux), dy = p[1] - (a[1] + t * uy);
  return std::hypot(dx, dy) <= kBoundaryEps * std::max(1.0, std::sqrt(len2));
}

DomainSpec::Predicate polygon_predicate(std::vector<Point> ring) {
  return [ring = std::move(ring)](const Point& p) {
    if (p.dim() != 2) return false;
    const std::size_t m = ring.size();
    bool inside = false;
    for (std::size_t i = 0, j = m - 1; i < m; j = i++) {
      const Point& a = ring[i];
      const Point& b = ring[j];
      if (on_segment(p, a, b)) return false;
      if ((a[1] > p[1]) != (b[1] > p[1])) {
        const double xcross = a[0] + (p[1] - a[1]) * (b[0] - a[0]) / (b[1] - a[1]);
        if (p[0] < xcross) inside = !inside;
      }
    }
    return inside;
  };
}

DomainSpec::Predicate box_predicate(const std::vector<Point>& samples) {
  const std::size_t n = samples.front().dim();
  std::vector<double> lo(n, std::numeric_limits<double>::infinity());
  std::vector<double> hi(n, -std::numeric_limits<double>::infinity());
  for (const auto& s : samples) {
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], s[i]);
      hi[i] = std::max(hi[i], s[i]);
    }
  }
  return [lo, hi, samples](const Point& p) {
    if (p.dim() != lo.size()) return false;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      if (!(p[i] > lo[i] && p[i] < hi[i])) return false;
    }
    return std::none_of(samples.begin(), samples.end(), [&](const Point& s) { return s == p; });
  };
}

}  // namespace

DomainSpec DomainSpec::unit_ball(std::size_t dim) {
  if (dim < 2) throw std::invalid_argument("unit ball dimension must be at least 2");
  DomainSpec d;
  d.unit_ball_ = true;
  d.dim_ = dim;
  d.diameter_hint_ = 2.0;
  return d;
}

DomainSpec DomainSpec::sampled(std::vector<Point> boundary, Predicate contains,
                               std::optional<double> diameter_hint, Projector projector) {
  if (boundary.empty()) throw std::invalid_argument("sampled domain needs at least one boundary sample");
  if (!contains) throw std::invalid_argument("sampled domain needs a membership predicate");
  const std::size_t n = boundary.front().dim();
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    if (boundary[i].dim() != n) throw std::invalid_argument("boundary samples have mixed dimensions");
    if (contains(boundary[i])) {
      throw std::invalid_argument("boundary sample " + std::to_string(i) + " lies inside the domain");
    }
  }
  if (diameter_hint) {
    if (!(*diameter_hint > 0.0) || !std::isfinite(*diameter_hint)) {
      throw std::invalid_argument("diameter hint must be positive and finite");
    }
    const double needed = boundary.size() <= kExactDiameterLimit ? max_pairwise_distance(boundary)
                                                                 : diameter_lower_bound(boundary);
    if (*diameter_hint < needed * (1.0 - 1e-12)) {
      throw std::invalid_argument("diameter hint is smaller than the sample spread");
    }
  }
  DomainSpec d;
  d.dim_ = n;
  d.samples_ = std::move(boundary);
  d.contains_ = std::move(contains);
  d.diameter_hint_ = diameter_hint;
  d.projector_ = std::move(projector);
  return d;
}

bool DomainSpec::contains(const Point& x) const {
  if (x.dim() != dim_) return false;
  if (unit_ball_) return x.norm2() < 1.0;
  return contains_(x);
}

void require_in_domain(const DomainSpec& domain, const Point& x) {
  if (x.dim() != domain.dim()) {
    throw std::invalid_argument("point dimension " + std::to_string(x.dim()) + " does not match domain dimension " +
                                std::to_string(domain.dim()));
  }
  if (!domain.contains(x)) throw std::domain_error("point " + to_string(x) + " is not in the domain");
}

std::size_t nearest_sample(const DomainSpec& domain, const Point& x) {
  const auto samples = domain.boundary_samples();
  if (samples.empty()) throw std::invalid_argument("nearest_sample: domain has no boundary samples");
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double d = distance(x, samples[i]);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

double boundary_distance(const DomainSpec& domain, const Point& x) {
  require_in_domain(domain, x);
  if (domain.is_unit_ball()) return 1.0 - x.norm();
  return distance(x, domain.boundary_samples()[nearest_sample(domain, x)]);
}

double domain_diameter(const DomainSpec& domain) {
  if (domain.diameter_hint()) return *domain.diameter_hint();
  const auto samples = domain.boundary_samples();
  if (samples.empty()) throw std::invalid_argument("domain has no boundary samples");
  return max_pairwise_distance(samples);
}

DomainSpec circle_domain(const Point& center, double radius, std::size_t count) {
  require_planar(center, "circle_domain");
  if (!(radius > 0.0) || count < 3) throw std::invalid_argument("circle_domain: need radius > 0 and count >= 3");
  std::vector<Point> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(count);
    pts.push_back(planar(center, radius * std::cos(t), radius * std::sin(t)));
  }
  auto contains = [center, radius](const Point& p) {
    return p.dim() == 2 && distance(p, center) < radius * (1.0 - kBoundaryEps);
  };
  auto project = [center, radius](const Point& p) {
    Point d = p - center;
    const double r = d.norm();
    return r > 0.0 ? center + (radius / r) * d : planar(center, radius, 0.0);
  };
  return DomainSpec::sampled(std::move(pts), contains, 2.0 * radius, project);
}

DomainSpec ellipse_domain(const Point& center, double semi_x, double semi_y, std::size_t count) {
  require_planar(center, "ellipse_domain");
  if (!(semi_x > 0.0) || !(semi_y > 0.0) || count < 3) {
    throw std::invalid_argument("ellipse_domain: need positive semi-axes and count >= 3");
  }
  std::vector<Point> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(count);
    pts.push_back(planar(center, semi_x * std::cos(t), semi_y * std::sin(t)));
  }
  auto level = [center, semi_x, semi_y](const Point& p) {
    return std::hypot((p[0] - center[0]) / semi_x, (p[1] - center[1]) / semi_y);
  };
  auto contains = [level](const Point& p) { return p.dim() == 2 && level(p) < 1.0 - kBoundaryEps; };
  auto project = [center, level, semi_x](const Point& p) {
    const double q = level(p);
    return q > 0.0 ? center + (1.0 / q) * (p - center) : planar(center, semi_x, 0.0);
  };
  return DomainSpec::sampled(std::move(pts), contains, 2.0 * std::max(semi_x, semi_y), project);
}

DomainSpec square_domain(const Point& center, double half_side, std::size_t count) {
  require_planar(center, "square_domain");
  if (!(half_side > 0.0) || count < 4) throw std::invalid_argument("square_domain: need half_side > 0 and count >= 4");
  const std::size_t per_edge = count / 4;
  const double h = half_side;
  const double corners[5][2] = {{-h, -h}, {h, -h}, {h, h}, {-h, h}, {-h, -h}};
  std::vector<Point> pts;
  pts.reserve(4 * per_edge);
  for (int e = 0; e < 4; ++e) {
    for (std::size_t j = 0; j < per_edge; ++j) {
      const double t = static_cast<double>(j) / static_cast<double>(per_edge);
      pts.push_back(planar(center, corners[e][0] + t * (corners[e + 1][0] - corners[e][0]),
                           corners[e][1] + t * (corners[e + 1][1] - corners[e][1])));
    }
  }
  auto contains = [center, h](const Point& p) {
    return p.dim() == 2 && std::max(std::abs(p[0] - center[0]), std::abs(p[1] - center[1])) < h;
  };
  auto project = [center, h](const Point& p) {
    double u = std::clamp(p[0] - center[0], -h, h);
    double v = std::clamp(p[1] - center[1], -h, h);
    if (std::abs(u) >= std::abs(v)) {
      u = u >= 0.0 ? h : -h;
    } else {
      v = v >= 0.0 ? h : -h;
    }
    return planar(center, u, v);
  };
  return DomainSpec::sampled(std::move(pts), contains, 2.0 * std::sqrt(2.0) * h, project);
}

DomainSpec annulus_domain(const Point& center, double r_in, double r_out, std::size_t count) {
  require_planar(center, "annulus_domain");
  if (!(r_in > 0.0) || !(r_out > r_in) || count < 6) {
    throw std::invalid_argument("annulus_domain: need 0 < r_in < r_out and count >= 6");
  }
  const std::size_t inner = count / 2, outer = count - inner;
  std::vector<Point> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < outer; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(outer);
    pts.push_back(planar(center, r_out * std::cos(t), r_out * std::sin(t)));
  }
  for (std::size_t i = 0; i < inner; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(inner);
    pts.push_back(planar(center, r_in * std::cos(t), r_in * std::sin(t)));
  }
  auto contains = [center, r_in, r_out](const Point& p) {
    if (p.dim() != 2) return false;
    const double r = distance(p, center);
    return r > r_in * (1.0 + kBoundaryEps) && r < r_out * (1.0 - kBoundaryEps);
  };
  auto project = [center, r_in, r_out](const Point& p) {
    Point d = p - center;
    const double r = d.norm();
    if (r == 0.0) return planar(center, r_in, 0.0);
    const double target = std::abs(r - r_in) < std::abs(r - r_out) ? r_in : r_out;
    return center + (target / r) * d;
  };
  return DomainSpec::sampled(std::move(pts), contains, 2.0 * r_out, project);
}

std::vector<Point> sphere_points(std::size_t dim, std::size_t count) {
  if (dim < 2 || count == 0) throw std::invalid_argument("sphere_points: need dim >= 2 and count >= 1");
  std::vector<Point> pts;
  pts.reserve(count);
  const double N = static_cast<double>(count);
  if (dim == 2) {
    for (std::size_t i = 0; i < count; ++i) {
      const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / N;
      pts.push_back(Point{std::cos(t), std::sin(t)});
    }
  } else if (dim == 3) {
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t i = 0; i < count; ++i) {
      const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / N;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = golden_angle * static_cast<double>(i);
      pts.push_back(Point{r * std::cos(phi), r * std::sin(phi), z});
    }
  } else {
    std::mt19937_64 rng(0x5eed5eedULL + dim);
    std::normal_distribution<double> gauss;
    while (pts.size() < count) {
      std::vector<double> c(dim);
      for (double& v : c) v = gauss(rng);
      Point p(std::move(c));
      const double r = p.norm();
      if (r > 1e-12) pts.push_back(p * (1.0 / r));
    }
  }
  return pts;
}

DomainSpec sphere_domain(const Point& center, double radius, std::size_t count) {
  if (!(radius > 0.0) || count < 3) throw std::invalid_argument("sphere_domain: need radius > 0 and count >= 3");
  std::vector<Point> pts;
  pts.reserve(count);
  for (const auto& u : sphere_points(center.dim(), count)) pts.push_back(center + radius * u);
  auto contains = [center, radius](const Point& p) {
    return p.dim() == center.dim() && distance(p, center) < radius * (1.0 - kBoundaryEps);
  };
  auto project = [center, radius](const Point& p) {
    Point d = p - center;
    const double r = d.norm();
    return r > 0.0 ? center + (radius / r) * d : center + radius * Point::unit(center.dim(), 0);
  };
  return DomainSpec::sampled(std::move(pts), contains, 2.0 * radius, project);
}

DomainSpec parse_boundary_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("boundary csv: missing header row");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split_commas(line);
  const std::size_t n = header.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::string_view h = header[i];
    while (!h.empty() && std::isspace(static_cast<unsigned char>(h.front()))) h.remove_prefix(1);
    while (!h.empty() && std::isspace(static_cast<unsigned char>(h.back()))) h.remove_suffix(1);
    if (h != "x" + std::to_string(i + 1)) {
      throw std::invalid_argument("boundary csv: header must be x1,...,xn");
    }
  }
  if (n < 2) throw std::invalid_argument("boundary csv: need at least two coordinate columns");

  std::vector<Point> pts;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto toks = split_commas(line);
    if (toks.size() != n) {
      throw std::invalid_argument("boundary csv: row " + std::to_string(row) + " has " + std::to_string(toks.size()) +
                                  " columns, expected " + std::to_string(n));
    }
    std::vector<double> c;
    c.reserve(n);
    for (auto t : toks) c.push_back(parse_double(t));
    pts.emplace_back(std::move(c));
  }
  if (pts.size() < 3) throw std::invalid_argument("boundary csv: need at least three boundary points");
  auto contains = n == 2 ? polygon_predicate(pts) : box_predicate(pts);
  return DomainSpec::sampled(std::move(pts), std::move(contains));
}

DomainSpec load_boundary_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open boundary file '" + path + "'");
  return parse_boundary_csv(in);
}

}  // namespace cassini
