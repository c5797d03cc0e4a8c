#include "cassini/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "cassini/analysis.hpp"
#include "cassini/ball_metrics.hpp"
#include "cassini/generic_metrics.hpp"

namespace cassini {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Comparison {
  double lhs;
  double rhs;
};

// Lazily evaluated metrics of one pair; each is computed at most once.
class PairContext {
 public:
  PairContext(const Point& x, const Point& y, const DomainSpec* domain) : x_(x), y_(y), domain_(domain) {}

  const Point& x() const { return x_; }
  const Point& y() const { return y_; }

  double th_half() { return get(th_half_, [&] { return th_half_rho(x_, y_); }); }
  double rho() { return get(rho_, [&] { return rho_ball(x_, y_); }); }
  double sh_half() { return get(sh_half_, [&] { return sh_half_rho(x_, y_); }); }
  double j() { return get(j_, [&] { return j_ball(x_, y_); }); }
  double c() { return get(c_, [&] { return cassinian_ball(x_, y_).value; }); }
  double s() { return get(s_, [&] { return s_ball(x_, y_).value; }); }
  double chat() { return get(chat_, [&] { return hat_c_ball(x_, y_).value; }); }
  double c_sub() { return get(c_sub_, [&] { return cassinian_generic(*domain_, x_, y_).value; }); }
  double s_sub() { return get(s_sub_, [&] { return s_generic(*domain_, x_, y_).value; }); }

 private:
  template <class F>
  static double get(std::optional<double>& slot, F&& f) {
    if (!slot) slot = f();
    return *slot;
  }

  const Point& x_;
  const Point& y_;
  const DomainSpec* domain_;
  std::optional<double> th_half_, rho_, sh_half_, j_, c_, s_, chat_, c_sub_, s_sub_;
};

using Checker = std::vector<Comparison> (*)(PairContext&);

struct Entry {
  InequalityInfo info;
  Checker check;
  bool uses_extremum;  // involves the ball c or s
};

double sharp_a() {
  static const double a = solve_alpha().a;
  return a;
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {{"th_rho4_le_s_le_th_rho2", "th(rho/4) <= s <= th(rho/2)", PairRegion::UnitBall},
       [](PairContext& p) {
         const double t = p.th_half();
         // th(rho/4) = th(artanh(t)/2) = t / (1 + sqrt(1 - t^2))
         const double quarter = t / (1.0 + std::sqrt((1.0 - t) * (1.0 + t)));
         return std::vector<Comparison>{{quarter, p.s()}, {p.s(), t}};
       },
       true},
      {{"sh_rho2_le_c", "sh(rho/2) <= c", PairRegion::UnitBall},
       [](PairContext& p) { return std::vector<Comparison>{{p.sh_half(), p.c()}}; }, true},
      {{"j_le_rho_le_2j", "j <= rho <= 2 j", PairRegion::UnitBall},
       [](PairContext& p) { return std::vector<Comparison>{{p.j(), p.rho()}, {p.rho(), 2.0 * p.j()}}; }, false},
      {{"2s_le_c", "2 s <= c", PairRegion::UnitBall},
       [](PairContext& p) { return std::vector<Comparison>{{2.0 * p.s(), p.c()}}; }, true},
      {{"s_le_c_over_sqrt", "s <= c / sqrt(1 + c^2)", PairRegion::UnitBall},
       [](PairContext& p) {
         const double c = p.c();
         return std::vector<Comparison>{{p.s(), c / std::sqrt(1.0 + c * c)}};
       },
       true},
      {{"j_le_chat_le_c", "j <= chat <= c", PairRegion::UnitBall},
       [](PairContext& p) { return std::vector<Comparison>{{p.j(), p.chat()}, {p.chat(), p.c()}}; }, true},
      {{"j_le_a_log1pc", "j <= a log(1 + c), a = m(alpha)", PairRegion::UnitBall},
       [](PairContext& p) { return std::vector<Comparison>{{p.j(), sharp_a() * std::log1p(p.c())}}; }, true},
      {{"j_le_4arth_c2", "j <= 4 artanh(c/2), +inf for c >= 2", PairRegion::UnitBall},
       [](PairContext& p) {
         const double c = p.c();
         return std::vector<Comparison>{{p.j(), c < 2.0 ? 4.0 * std::atanh(0.5 * c) : kInf}};
       },
       true},
      {{"2s_le_c_subdomain", "2 s_D <= c_D for D inside B^n", PairRegion::Subdomain},
       [](PairContext& p) { return std::vector<Comparison>{{2.0 * p.s_sub(), p.c_sub()}}; }, false},
      {{"jung_subdomain", "k s_D <= c_D, k = 2 / (sqrt(n/(2n+2)) diam D)", PairRegion::Subdomain},
       [](PairContext& p) {
         const double k = jung_ratio_bound(verification_subdomain(p.x().dim()));
         return std::vector<Comparison>{{k * p.s_sub(), p.c_sub()}};
       },
       false},
      {{"domain_monotonicity", "c_B <= c_D and s_B <= s_D for D inside B^n", PairRegion::Subdomain},
       [](PairContext& p) { return std::vector<Comparison>{{p.c(), p.c_sub()}, {p.s(), p.s_sub()}}; }, false},
      {{"s_sym_subdomain", "|x| <= s_D(x, -x)", PairRegion::SymmetricSubdomain},
       [](PairContext& p) { return std::vector<Comparison>{{p.x().norm(), p.s_sub()}}; }, false},
  };
  return entries;
}

const Entry& require_entry(const std::string& name) {
  for (const auto& e : registry()) {
    if (e.info.name == name) return e;
  }
  throw std::invalid_argument("unknown inequality '" + name + "'");
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Point uniform_in_box(const std::vector<double>& lo, const std::vector<double>& hi, std::mt19937_64& rng) {
  std::vector<double> c(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) c[i] = lo[i] + (hi[i] - lo[i]) * uniform01(rng);
  return Point(std::move(c));
}

struct Outcome {
  double slack = kInf;
  double ratio = -kInf;
  bool violated = false;
};

Outcome assess(const std::vector<Comparison>& cmps, double tol) {
  Outcome o;
  for (const auto& [lhs, rhs] : cmps) {
    double slack;
    double ratio;
    if (std::isinf(rhs) && rhs > 0.0) {
      slack = kInf;
      ratio = 0.0;
    } else {
      slack = (rhs - lhs) / std::max(1.0, std::abs(rhs));
      ratio = rhs > 0.0 ? lhs / rhs : (lhs > 0.0 ? kInf : 0.0);
    }
    if (std::isnan(slack)) slack = -kInf;
    o.slack = std::min(o.slack, slack);
    o.ratio = std::max(o.ratio, ratio);
    if (slack < -tol) o.violated = true;
  }
  return o;
}

double relative_gap(double fast, double oracle) { return std::abs(fast - oracle) / std::max(1.0, std::abs(oracle)); }

double oracle_gap(const Point& x, const Point& y) {
  const double dc = relative_gap(cassinian_ball(x, y).value, brute_force_extremum(ExtremumMetric::Cassinian, x, y).value);
  const double ds = relative_gap(s_ball(x, y).value, brute_force_extremum(ExtremumMetric::TriangularRatio, x, y).value);
  return std::max(dc, ds);
}

// Runs entries that share a pair region over the same sample stream.
std::vector<InequalityReport> run_group(const std::vector<const Entry*>& group, const VerifyOptions& opt) {
  const PairRegion region = group.front()->info.region;
  const std::size_t m = group.size();
  std::vector<double> tols(m);
  for (std::size_t g = 0; g < m; ++g) tols[g] = opt.tolerance.value_or(default_tolerance(region));

  const DomainSpec* domain = region == PairRegion::UnitBall ? nullptr : &verification_subdomain(opt.dim);
  std::vector<Outcome> outcomes(opt.samples * m);

  unsigned workers = opt.workers ? opt.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, opt.samples)));
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < opt.samples; i += workers) {
        const auto [x, y] = sample_pair(region, opt.dim, opt.seed, i);
        PairContext ctx(x, y, domain);
        for (std::size_t g = 0; g < m; ++g) outcomes[i * m + g] = assess(group[g]->check(ctx), tols[g]);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<InequalityReport> reports;
  for (std::size_t g = 0; g < m; ++g) {
    InequalityReport r;
    r.name = group[g]->info.name;
    r.dim = opt.dim;
    r.samples = opt.samples;
    r.seed = opt.seed;
    r.tolerance = tols[g];
    r.worst_margin = kInf;
    r.max_ratio = opt.samples ? -kInf : 0.0;
    std::size_t ratio_idx = 0, margin_idx = 0;
    for (std::size_t i = 0; i < opt.samples; ++i) {
      const Outcome& o = outcomes[i * m + g];
      if (o.violated) ++r.violations;
      if (o.slack < r.worst_margin) {
        r.worst_margin = o.slack;
        margin_idx = i;
      }
      if (o.ratio > r.max_ratio) {
        r.max_ratio = o.ratio;
        ratio_idx = i;
      }
    }
    if (opt.samples) {
      r.extremal_pair = sample_pair(region, opt.dim, opt.seed, ratio_idx);
      if (group[g]->uses_extremum) {
        const auto worst = sample_pair(region, opt.dim, opt.seed, margin_idx);
        r.oracle_max_diff = std::max(oracle_gap(r.extremal_pair->first, r.extremal_pair->second),
                                     oracle_gap(worst.first, worst.second));
      }
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

void require_dim(std::size_t dim) {
  if (dim < 2) throw std::invalid_argument("verification dimension must be at least 2");
}

}  // namespace

const std::vector<InequalityInfo>& registered_inequalities() {
  static const std::vector<InequalityInfo> infos = [] {
    std::vector<InequalityInfo> v;
    for (const auto& e : registry()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

const InequalityInfo* find_inequality(const std::string& name) {
  for (const auto& info : registered_inequalities()) {
    if (info.name == name) return &info;
  }
  return nullptr;
}

double default_tolerance(PairRegion region) { return region == PairRegion::UnitBall ? 1e-9 : 1e-6; }

std::mt19937_64 sample_engine(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ (index * 0xd1b54a32d192ed03ULL)));
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Point uniform_in_ball(std::size_t dim, std::mt19937_64& rng) {
  require_dim(dim);
  const std::vector<double> lo(dim, -1.0), hi(dim, 1.0);
  while (true) {
    Point p = uniform_in_box(lo, hi, rng);
    if (p.norm2() < 1.0) return p;
  }
}

const DomainSpec& verification_subdomain(std::size_t dim) {
  require_dim(dim);
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<DomainSpec>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[dim];
  if (!slot) {
    if (dim == 2) {
      slot = std::make_unique<DomainSpec>(ellipse_domain(Point{0.1, 0.05}, 0.7, 0.45, 2048));
    } else {
      slot = std::make_unique<DomainSpec>(sphere_domain(0.15 * Point::unit(dim, 0), 0.7, 4096));
    }
  }
  return *slot;
}

std::pair<Point, Point> sample_pair(PairRegion region, std::size_t dim, std::uint64_t seed, std::uint64_t index) {
  require_dim(dim);
  auto rng = sample_engine(seed, index);
  if (region == PairRegion::UnitBall) {
    Point x = uniform_in_ball(dim, rng);
    Point y = uniform_in_ball(dim, rng);
    return {std::move(x), std::move(y)};
  }
  const DomainSpec& domain = verification_subdomain(dim);
  std::vector<double> lo(dim, kInf), hi(dim, -kInf);
  for (const auto& s : domain.boundary_samples()) {
    for (std::size_t i = 0; i < dim; ++i) {
      lo[i] = std::min(lo[i], s[i]);
      hi[i] = std::max(hi[i], s[i]);
    }
  }
  auto draw = [&](bool symmetric) {
    while (true) {
      Point p = uniform_in_box(lo, hi, rng);
      if (domain.contains(p) && (!symmetric || domain.contains(-p))) return p;
    }
  };
  if (region == PairRegion::SymmetricSubdomain) {
    Point x = draw(true);
    Point y = -x;
    return {std::move(x), std::move(y)};
  }
  Point x = draw(false);
  Point y = draw(false);
  return {std::move(x), std::move(y)};
}

InequalityReport verify_inequality(const std::string& name, const VerifyOptions& opt) {
  const std::string names[] = {name};
  return verify_suite(names, opt).front();
}

std::vector<InequalityReport> verify_suite(std::span<const std::string> names, const VerifyOptions& opt) {
  require_dim(opt.dim);
  if (opt.tolerance && !(*opt.tolerance >= 0.0)) throw std::invalid_argument("tolerance must be non-negative");
  std::vector<const Entry*> entries;
  for (const auto& n : names) entries.push_back(&require_entry(n));

  std::vector<InequalityReport> out(entries.size());
  for (PairRegion region : {PairRegion::UnitBall, PairRegion::Subdomain, PairRegion::SymmetricSubdomain}) {
    std::vector<const Entry*> group;
    std::vector<std::size_t> slots;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i]->info.region == region) {
        group.push_back(entries[i]);
        slots.push_back(i);
      }
    }
    if (group.empty()) continue;
    auto reports = run_group(group, opt);
    for (std::size_t k = 0; k < slots.size(); ++k) out[slots[k]] = std::move(reports[k]);
  }
  return out;
}

}  // namespace cassini
