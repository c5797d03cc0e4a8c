#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "cassini/analysis.hpp"
#include "cassini/ball_metrics.hpp"
#include "cassini/distortion.hpp"
#include "cassini/domain.hpp"
#include "cassini/generic_metrics.hpp"
#include "cassini/geometry.hpp"
#include "cassini/serialize.hpp"
#include "cassini/verify.hpp"

namespace cassini::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string format = "json";
  // eval / oracle
  std::string metric;
  std::string x, y, z;
  std::string domain_file;
  std::optional<std::size_t> dim;
  bool refine = false;
  std::optional<double> r, omega;
  std::size_t grid = 1'000'000;
  int refine_iters = 100;
  // verify
  std::string name;
  std::string counterexample;
  double lambda = 0.99;
  std::size_t samples = 10'000;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
  unsigned workers = 0;
  // distort
  double K = 1.0;
  double tol = 1e-12;
  std::optional<double> phi, eta, casgrow, rho_growth, mu_arg, verify_casgrow, chain;
  bool c_of_k = false;
  // table
  std::string which;
  std::string fn = "f";
  std::optional<double> aux;
  std::string probe = "two_sc";
  std::size_t steps = 0;
};

Point parse_point(const std::string& text, const char* flag, std::optional<std::size_t> dim) {
  if (text.empty()) throw UsageError(std::string("missing ") + flag);
  std::vector<double> coords;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw UsageError(std::string(flag) + ": cannot parse '" + text + "' as comma-separated numbers");
    }
    coords.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (dim && coords.size() != *dim) {
    throw UsageError(std::string(flag) + " has " + std::to_string(coords.size()) + " coordinates but --dim is " +
                     std::to_string(*dim));
  }
  try {
    return Point(std::move(coords));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

std::string render(const Json& j, const std::string& format) {
  if (format == "text") {
    std::string out;
    auto line = [&](const std::string& key, const Json& v) {
      out += key + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    };
    if (j.is_array()) {
      for (std::size_t i = 0; i < j.size(); ++i) {
        for (auto it = j[i].begin(); it != j[i].end(); ++it) line(it.key(), it.value());
        if (i + 1 < j.size()) out += "\n";
      }
    } else {
      for (auto it = j.begin(); it != j.end(); ++it) line(it.key(), it.value());
    }
    return out;
  }
  return j.dump(2) + "\n";
}

std::string csv_row(std::initializer_list<double> values) {
  std::string out;
  bool first = true;
  for (double v : values) {
    if (!first) out += ",";
    out += format_number(v);
    first = false;
  }
  return out + "\n";
}

// ---------------------------------------------------------------------------

Json cmd_eval(const Config& cfg) {
  const std::string& m = cfg.metric;
  Json j;
  j["metric"] = m;

  if (m == "s-angle") {
    if (!cfg.r || !cfg.omega) throw UsageError("eval --metric s-angle needs --r and --omega");
    const ExtremalAngle a = s_extremal_angle(*cfg.r, *cfg.omega);
    j["theta"] = json_number(a.theta);
    j["theta_alt"] = a.theta_alt ? json_number(*a.theta_alt) : Json(nullptr);
    j["on_bisector"] = a.on_bisector;
    return j;
  }

  const Point x = parse_point(cfg.x, "--x", cfg.dim);
  std::optional<DomainSpec> domain;
  if (!cfg.domain_file.empty()) {
    try {
      domain = load_boundary_csv(cfg.domain_file);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const DomainSpec space = domain ? *domain : DomainSpec::unit_ball(x.dim());

  if (m == "d") {
    j["value"] = json_number(boundary_distance(space, x));
    return j;
  }
  if (m == "jung") {
    j["value"] = json_number(jung_ratio_bound(space));
    return j;
  }

  const Point y = parse_point(cfg.y, "--y", cfg.dim);
  require_same_dim(x, y);
  const bool ball_only = m == "rho" || m == "shrho" || m == "th" || m == "chat" || m == "product" ||
                         m == "tangency" || m == "plane" || m == "angle";
  if (domain && ball_only) throw UsageError("--metric " + m + " is defined on the unit ball only; drop --domain");

  auto merge = [&](const Json& v) {
    for (auto it = v.begin(); it != v.end(); ++it) j[it.key()] = it.value();
  };
  if (m == "rho") {
    j["value"] = json_number(rho_ball(x, y));
  } else if (m == "shrho") {
    j["value"] = json_number(sh_half_rho(x, y));
  } else if (m == "th") {
    j["value"] = json_number(th_half_rho(x, y));
  } else if (m == "j") {
    j["value"] = json_number(j_generic(space, x, y));
  } else if (m == "c") {
    merge(to_json(cassinian_generic(space, x, y, {cfg.refine})));
  } else if (m == "s") {
    merge(to_json(s_generic(space, x, y, {cfg.refine})));
  } else if (m == "chat") {
    merge(to_json(hat_c_ball(x, y)));
  } else if (m == "angle") {
    j["value"] = json_number(angle_between(x, y));
  } else if (m == "plane") {
    merge(to_json(reduce_to_plane(x, y)));
  } else if (m == "product") {
    const ProductBound b = cassinian_product_bound(x, y);
    j["inf_product"] = json_number(b.inf_product);
    j["centered_value"] = json_number(b.centered_value);
    j["bound_holds"] = b.bound_holds;
  } else if (m == "tangency") {
    const TangencyCertificate t = tangency_certificate(x, y, parse_point(cfg.z, "--z", cfg.dim));
    j["gamma"] = json_number(t.gamma);
    j["gamma_y"] = json_number(t.gamma_y);
    j["cos_residual"] = json_number(t.cos_residual);
    j["ptolemy_residual"] = json_number(t.ptolemy_residual);
  } else {
    throw UsageError("unknown metric '" + m + "'");
  }
  return j;
}

Json cmd_oracle(const Config& cfg) {
  ExtremumMetric metric;
  if (cfg.metric == "c") {
    metric = ExtremumMetric::Cassinian;
  } else if (cfg.metric == "s") {
    metric = ExtremumMetric::TriangularRatio;
  } else {
    throw UsageError("oracle --metric must be c or s");
  }
  const Point x = parse_point(cfg.x, "--x", cfg.dim);
  const Point y = parse_point(cfg.y, "--y", cfg.dim);
  if (cfg.grid < 16) throw UsageError("--grid must be at least 16");
  Json j;
  j["metric"] = cfg.metric;
  const Json v = to_json(brute_force_extremum(metric, x, y, cfg.grid, cfg.refine_iters));
  for (auto it = v.begin(); it != v.end(); ++it) j[it.key()] = it.value();
  j["grid"] = cfg.grid;
  return j;
}

std::uint64_t resolve_seed(const Config& cfg) {
  if (cfg.seed) return *cfg.seed;
  if (const char* env = std::getenv(kSeedEnv)) {
    std::uint64_t v = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw UsageError(std::string(kSeedEnv) + " must be an unsigned integer");
    }
    return v;
  }
  return 1;
}

Result cmd_verify(const Config& cfg) {
  Result res;
  if (!cfg.counterexample.empty()) {
    const LambdaCounterexample ce = lambda_counterexample(cfg.counterexample, cfg.lambda);
    Json j;
    j["probe"] = cfg.counterexample;
    j["lambda"] = json_number(cfg.lambda);
    j["x"] = to_json(ce.x);
    j["y"] = to_json(ce.y);
    j["j"] = json_number(ce.j);
    j["scaled_rhs"] = json_number(ce.scaled_rhs);
    res.out = render(j, cfg.format);
    return res;
  }
  if (cfg.name.empty()) throw UsageError("verify needs --name (or --counterexample)");
  VerifyOptions opt;
  opt.dim = cfg.dim.value_or(2);
  opt.samples = cfg.samples;
  opt.seed = resolve_seed(cfg);
  opt.tolerance = cfg.tolerance;
  opt.workers = cfg.workers;

  std::vector<std::string> names;
  if (cfg.name == "all") {
    for (const auto& info : registered_inequalities()) names.push_back(info.name);
  } else {
    if (!find_inequality(cfg.name)) throw UsageError("unknown inequality '" + cfg.name + "'");
    names.push_back(cfg.name);
  }
  const auto reports = verify_suite(names, opt);
  Json j = Json::array();
  std::size_t violations = 0;
  for (const auto& r : reports) {
    j.push_back(to_json(r));
    violations += r.violations;
  }
  res.out = render(names.size() == 1 ? j[0] : j, cfg.format);
  res.status = violations ? kViolations : kSuccess;
  return res;
}

Json cmd_distort(const Config& cfg) {
  const DistortionParams params{cfg.K, cfg.tol};
  try {
    params.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const int chosen = !!cfg.phi + !!cfg.eta + !!cfg.casgrow + !!cfg.rho_growth + !!cfg.mu_arg + !!cfg.verify_casgrow +
                     !!cfg.chain + cfg.c_of_k;
  if (chosen != 1) {
    throw UsageError("distort needs exactly one of --phi, --eta, --c-of-k, --casgrow, --rho-growth, --mu, "
                     "--verify-casgrow, --chain");
  }
  Json j;
  j["K"] = json_number(cfg.K);
  if (cfg.phi) {
    j["quantity"] = "phi";
    j["argument"] = json_number(*cfg.phi);
    j["value"] = json_number(phi_K(params, *cfg.phi));
    j["bound"] = json_number(phi_K_bound(params, *cfg.phi));
  } else if (cfg.eta) {
    j["quantity"] = "eta";
    j["argument"] = json_number(*cfg.eta);
    j["value"] = json_number(eta_K(params, *cfg.eta));
    j["bound"] = json_number(eta_K_bound(params, *cfg.eta));
  } else if (cfg.c_of_k) {
    j["quantity"] = "c_of_K";
    j["value"] = json_number(c_of_K(params));
    j["bound"] = json_number(c_of_K_bound(params));
  } else if (cfg.casgrow) {
    j["quantity"] = "casgrow";
    j["argument"] = json_number(*cfg.casgrow);
    j["value"] = json_number(casgrow_bound(params, *cfg.casgrow));
  } else if (cfg.rho_growth) {
    j["quantity"] = "rho_growth";
    j["argument"] = json_number(*cfg.rho_growth);
    j["value"] = json_number(rho_growth_bound(params, *cfg.rho_growth));
  } else if (cfg.mu_arg) {
    j["quantity"] = "mu";
    j["argument"] = json_number(*cfg.mu_arg);
    j["value"] = json_number(mu(*cfg.mu_arg));
  } else if (cfg.verify_casgrow) {
    const double t = *cfg.verify_casgrow;
    j["quantity"] = "verify_casgrow";
    j["argument"] = json_number(t);
    j["eta"] = json_number(eta_K(params, t));
    j["casgrow_bound"] = json_number(casgrow_bound(params, t));
    j["holds"] = verify_casgrow_against_eta(params, t);
  } else {
    const GrowthChain g = casgrow_chain(params, *cfg.chain);
    j["quantity"] = "chain";
    j["argument"] = json_number(*cfg.chain);
    j["lhs"] = json_number(g.lhs);
    j["rhs"] = json_number(g.rhs);
    j["holds"] = g.lhs <= g.rhs;
  }
  return j;
}

std::string table_s_closed_form(std::size_t steps) {
  const std::size_t n = steps ? steps : 8;
  std::string out = "r,omega,on_bisector,theta,theta_alt,s_closed_form,s_optimized\n";
  for (std::size_t i = 1; i <= 9; i += 2) {
    const double r = 0.1 * static_cast<double>(i);
    for (std::size_t k = 1; k <= n; ++k) {
      const double omega = std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
      const Point x{r, 0.0};
      const Point y{r * std::cos(omega), r * std::sin(omega)};
      const ExtremalAngle a = s_extremal_angle(r, omega);
      out += csv_row({r, omega, a.on_bisector ? 1.0 : 0.0, a.theta, a.theta_alt.value_or(a.theta),
                      s_ball(x, y).value, s_ball_optimized(x, y).value});
    }
  }
  return out;
}

std::string table_tangency(std::size_t steps) {
  const std::size_t n = steps ? steps : 6;
  std::string out = "r,omega,theta,z1,z2,gamma,cos_residual,ptolemy_residual\n";
  for (double r : {0.3, 0.5, 0.7, 0.9}) {
    // Off-bisector branch: cos(omega/2) < r.
    const double omega_min = 2.0 * std::acos(r);
    for (std::size_t k = 1; k <= n; ++k) {
      const double omega = omega_min + (std::numbers::pi - omega_min) * static_cast<double>(k) / static_cast<double>(n);
      const Point x{r, 0.0};
      const Point y{r * std::cos(omega), r * std::sin(omega)};
      const ExtremalAngle a = s_extremal_angle(r, omega);
      const Point z{std::cos(a.theta), std::sin(a.theta)};
      const TangencyCertificate t = tangency_certificate(x, y, z);
      out += csv_row({r, omega, a.theta, z[0], z[1], t.gamma, t.cos_residual, t.ptolemy_residual});
    }
  }
  return out;
}

std::string table_oval(const Config& cfg) {
  const Point x = cfg.x.empty() ? Point{0.4, 0.3} : parse_point(cfg.x, "--x", 2);
  const Point y = cfg.y.empty() ? Point{-0.2, 0.1} : parse_point(cfg.y, "--y", 2);
  if (!(x.norm2() < 1.0) || !(y.norm2() < 1.0)) throw std::domain_error("oval table: points must lie in the unit disk");
  const Point half = 0.5 * (y - x);
  const Point xc = -half, yc = half;
  const std::size_t n = cfg.steps ? cfg.steps : 360;
  std::string out = "theta,w1,w2,product,centered_product\n";
  for (std::size_t k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    const Point w{std::cos(t), std::sin(t)};
    out += csv_row({t, w[0], w[1], distance(x, w) * distance(w, y), distance(xc, w) * distance(w, yc)});
  }
  return out;
}

std::string table_m_function(std::size_t steps) {
  const std::size_t n = steps ? steps : 99;
  std::string out = "t,m,alpha_equation\n";
  for (std::size_t k = 1; k <= n; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(n + 1);
    out += csv_row({t, m_function(t), alpha_equation(t)});
  }
  return out;
}

std::string table_lemma21(const Config& cfg) {
  const auto fn = parse_aux_function(cfg.fn);
  if (!fn) throw UsageError("--fn must be one of f, g, h, fb");
  const std::size_t n = cfg.steps ? cfg.steps : 100;
  double lo = 0.0, hi = 10.0;
  std::optional<double> aux = cfg.aux;
  if (*fn == AuxFunction::H) hi = 1.0;
  if (*fn == AuxFunction::FB) hi = 2.0;
  if (*fn == AuxFunction::G && !aux) aux = 1.0;
  if (*fn == AuxFunction::FB && !aux) aux = 0.5;
  std::string out = "arg,value\n";
  for (std::size_t k = 1; k <= n; ++k) {
    const double t = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n + 1);
    out += csv_row({t, lemma21_eval(*fn, t, aux)});
  }
  return out;
}

std::string table_sharpness(const Config& cfg) {
  std::string out = "parameter,ratio\n";
  for (const auto& p : sharpness_probe(cfg.probe, cfg.steps ? cfg.steps : 20)) out += csv_row({p.parameter, p.ratio});
  return out;
}

std::string cmd_table(const Config& cfg) {
  const std::string& w = cfg.which;
  if (w == "s-closed-form") return table_s_closed_form(cfg.steps);
  if (w == "tangency") return table_tangency(cfg.steps);
  if (w == "oval") return table_oval(cfg);
  if (w == "m-function") return table_m_function(cfg.steps);
  if (w == "lemma21") return table_lemma21(cfg);
  if (w == "sharpness") return table_sharpness(cfg);
  throw UsageError("unknown table '" + w + "'");
}

}  // namespace

Result run(const std::vector<std::string>& args) {
  Config cfg;
  CLI::App app{"Cassinian, triangular ratio, distance ratio and hyperbolic metrics of the unit ball"};
  app.require_subcommand(1, 1);
  app.footer(std::string("Environment: ") + kSeedEnv + " sets the default seed of `verify` (otherwise 1).\n"
             "Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification found violations.");

  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
  };

  auto* eval = app.add_subcommand("eval", "Evaluate a metric for a pair of points");
  eval->add_option("--metric", cfg.metric,
                   "rho | j | c | s | chat | shrho | th | d | angle | plane | product | tangency | jung | s-angle")
      ->required();
  eval->add_option("--x", cfg.x, "First point, comma-separated");
  eval->add_option("--y", cfg.y, "Second point, comma-separated");
  eval->add_option("--z", cfg.z, "Boundary point for --metric tangency");
  eval->add_option("--domain", cfg.domain_file, "Boundary CSV of a sampled domain (default: unit ball)");
  eval->add_option("--dim", cfg.dim, "Expected dimension of the points");
  eval->add_flag("--refine", cfg.refine, "Refine sampled extrema along the boundary");
  eval->add_option("--r", cfg.r, "Modulus for --metric s-angle");
  eval->add_option("--omega", cfg.omega, "Angle for --metric s-angle");
  add_format(eval, {"json", "text"});

  auto* verify = app.add_subcommand("verify", "Randomized verification of a registered inequality");
  verify->add_option("--name", cfg.name, "Inequality name, or `all`");
  verify->add_option("--dim", cfg.dim, "Dimension n (default 2)");
  verify->add_option("--samples", cfg.samples, "Number of random pairs");
  verify->add_option("--seed", cfg.seed, std::string("RNG seed (default: $") + kSeedEnv + " or 1)");
  verify->add_option("--tolerance", cfg.tolerance, "Violation tolerance on the relative slack");
  verify->add_option("--workers", cfg.workers, "Worker threads (0: all cores)");
  verify->add_option("--counterexample", cfg.counterexample, "lambda_j_chat | lambda_j_c: find a pair beating lambda");
  verify->add_option("--lambda", cfg.lambda, "Scale for --counterexample");
  add_format(verify, {"json", "text"});

  auto* constants = app.add_subcommand("constants", "Solve for alpha and a = m(alpha)");
  add_format(constants, {"json", "text"});

  auto* distort = app.add_subcommand("distort", "Quasiregular distortion functions and bounds");
  distort->add_option("--K", cfg.K, "Maximal dilatation K >= 1");
  distort->add_option("--tol", cfg.tol, "Inversion tolerance");
  distort->add_option("--phi", cfg.phi, "phi_K(r)");
  distort->add_option("--eta", cfg.eta, "eta_K(t)");
  distort->add_flag("--c-of-k", cfg.c_of_k, "c(K)");
  distort->add_option("--casgrow", cfg.casgrow, "Cassinian growth bound at t = c(0, x)");
  distort->add_option("--rho-growth", cfg.rho_growth, "Hyperbolic growth bound at rho");
  distort->add_option("--mu", cfg.mu_arg, "Grotzsch modulus mu(r)");
  distort->add_option("--verify-casgrow", cfg.verify_casgrow, "Check eta_K(t) <= casgrow bound");
  distort->add_option("--chain", cfg.chain, "phi/(1-phi) <= eta_K(r/(1-r)) at r");
  add_format(distort, {"json", "text"});

  auto* oracle = app.add_subcommand("oracle", "Brute-force circle scan for c or s");
  oracle->add_option("--metric", cfg.metric, "c | s")->required();
  oracle->add_option("--x", cfg.x, "First point")->required();
  oracle->add_option("--y", cfg.y, "Second point")->required();
  oracle->add_option("--dim", cfg.dim, "Expected dimension of the points");
  oracle->add_option("--grid", cfg.grid, "Number of scan angles");
  oracle->add_option("--refine-iters", cfg.refine_iters, "Golden-section iterations");
  add_format(oracle, {"json", "text"});

  auto* table = app.add_subcommand("table", "Emit CSV data tables");
  table->add_option("--which", cfg.which, "s-closed-form | tangency | oval | m-function | lemma21 | sharpness")
      ->required();
  table->add_option("--x", cfg.x, "oval: first focus");
  table->add_option("--y", cfg.y, "oval: second focus");
  table->add_option("--steps", cfg.steps, "Rows per series");
  table->add_option("--fn", cfg.fn, "lemma21: f | g | h | fb");
  table->add_option("--aux", cfg.aux, "lemma21: a for g, x for fb");
  table->add_option("--probe", cfg.probe, "sharpness: two_sc | lambda_j_chat | lambda_j_c | imsz_equality");
  add_format(table, {"csv"});

  Result res;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
    return res;
  } catch (const CLI::CallForAllHelp&) {
    res.out = app.help("", CLI::AppFormatMode::All);
    return res;
  } catch (const CLI::ParseError& e) {
    res.status = kUsageError;
    res.err = std::string("error: ") + e.what() + "\n";
    return res;
  }

  try {
    if (eval->parsed()) {
      res.out = render(cmd_eval(cfg), cfg.format);
    } else if (verify->parsed()) {
      res = cmd_verify(cfg);
    } else if (constants->parsed()) {
      res.out = render(to_json(solve_alpha()), cfg.format);
    } else if (distort->parsed()) {
      res.out = render(cmd_distort(cfg), cfg.format);
    } else if (oracle->parsed()) {
      res.out = render(cmd_oracle(cfg), cfg.format);
    } else if (table->parsed()) {
      res.out = cmd_table(cfg);
    }
  } catch (const UsageError& e) {
    res = {kUsageError, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    res = {kUsageError, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::domain_error& e) {
    res = {kDomainError, "", std::string("domain error: ") + e.what() + "\n"};
  } catch (const std::range_error& e) {
    res = {kDomainError, "", std::string("domain error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    res = {kDomainError, "", std::string("error: ") + e.what() + "\n"};
  }
  return res;
}

}  // namespace cassini::cli
